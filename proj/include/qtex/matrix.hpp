// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "qtex/kernels.hpp"

namespace qtex {

using cplx = std::complex<double>;

/// Hermiticity tolerance: inputs are unit-scale (traces near one), so an
/// absolute bound is meaningful.
inline constexpr double kHermTol = 1e-10;

/// Default cap on any matrix dimension produced by tensor products or
/// channel dilations.
inline constexpr int kMaxDim = 64;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);  // zero-filled
  ComplexMatrix(int rows, int cols, std::vector<cplx> entries);

  static ComplexMatrix identity(int d);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  long size() const { return static_cast<long>(rows_) * cols_; }

  cplx& operator()(int i, int j) { return data_[static_cast<long>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const {
    return data_[static_cast<long>(i) * cols_ + j];
  }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  cplx trace() const;
  ComplexMatrix adjoint() const;

  /// True when every entry is finite (no NaN/Inf).
  bool all_finite() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& m);

/// A * B^dagger without forming the adjoint.
ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& x);

/// sum_ij M_ij
cplx entry_sum(const ComplexMatrix& m);

/// Tr(A B) = sum_ij A_ij B_ji; dims must match.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |M_ij - conj(M_ji)|
double hermiticity_residual(const ComplexMatrix& m);

/// Kronecker product (no size cap; see linalg::tensor for the capped entry
/// point).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Self-adjoint square matrix, validated at construction.
class HermitianOperator {
 public:
  HermitianOperator() = default;

  /// Validates squareness, finiteness, and hermiticity within tol.
  static HermitianOperator checked(ComplexMatrix m, double tol = kHermTol);

  /// Replaces M by (M + M^dagger)/2, then wraps. For results of floating
  /// point algebra that are Hermitian only up to rounding.
  static HermitianOperator symmetrized(ComplexMatrix m);

  int dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const cplx& operator()(int i, int j) const { return matrix_(i, j); }

  double trace_real() const { return matrix_.trace().real(); }

 private:
  explicit HermitianOperator(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

HermitianOperator operator+(const HermitianOperator&, const HermitianOperator&);
HermitianOperator operator-(const HermitianOperator&, const HermitianOperator&);
HermitianOperator operator*(double s, const HermitianOperator&);

}  // namespace qtex
