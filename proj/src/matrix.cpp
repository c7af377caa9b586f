// SPDX-License-Identifier: Apache-2.0

#include "qtex/matrix.hpp"

#include <cmath>
#include <utility>

#include "qtex/errors.hpp"

namespace qtex {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<long>(rows) * cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  if (static_cast<long>(data_.size()) != static_cast<long>(rows) * cols)
    throw DimensionError("entry count does not match matrix shape");
}

ComplexMatrix ComplexMatrix::identity(int d) {
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  ComplexMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw DimensionError("ragged initializer rows");
    int j = 0;
    for (const cplx& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  cplx t{};
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("gemm shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  kernels::ops().gemm_nn(a.data(), b.data(), c.data(), a.rows(), a.cols(),
                         b.cols());
  return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("addition shape mismatch");
  ComplexMatrix c(a.rows(), a.cols());
  kernels::ops().axpby(1.0, a.data(), 1.0, b.data(), c.data(),
                       static_cast<int>(a.size()));
  return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("subtraction shape mismatch");
  ComplexMatrix c(a.rows(), a.cols());
  kernels::ops().axpby(1.0, a.data(), -1.0, b.data(), c.data(),
                       static_cast<int>(a.size()));
  return c;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& m) {
  ComplexMatrix c(m.rows(), m.cols());
  kernels::ops().axpby(s, m.data(), 0.0, m.data(), c.data(),
                       static_cast<int>(m.size()));
  return c;
}

ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("gemm_nh shape mismatch");
  ComplexMatrix c(a.rows(), b.rows());
  kernels::ops().gemm_nh(a.data(), b.data(), c.data(), a.rows(), a.cols(),
                         b.rows());
  return c;
}

std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw DimensionError("matvec shape mismatch");
  std::vector<cplx> y(a.rows());
  kernels::ops().matvec(a.data(), x.data(), y.data(), a.rows(), a.cols());
  return y;
}

cplx entry_sum(const ComplexMatrix& m) {
  return kernels::ops().sum(m.data(), static_cast<int>(m.size()));
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows())
    throw DimensionError("trace_product shape mismatch");
  cplx t{};
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
  return t;
}

double max_abs(const ComplexMatrix& m) {
  return kernels::ops().max_abs(m.data(), static_cast<int>(m.size()));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff shape mismatch");
  return kernels::ops().max_abs_diff(a.data(), b.data(),
                                     static_cast<int>(a.size()));
}

double hermiticity_residual(const ComplexMatrix& m) {
  if (!m.is_square())
    throw DimensionError("hermiticity residual of non-square matrix");
  double worst = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    worst = std::max(worst, std::abs(m(i, i).imag()));
    for (int j = i + 1; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i1 = 0; i1 < a.rows(); ++i1) {
    for (int j1 = 0; j1 < a.cols(); ++j1) {
      const cplx av = a(i1, j1);
      for (int i2 = 0; i2 < b.rows(); ++i2) {
        cplx* crow = c.data() +
                     static_cast<long>(i1 * b.rows() + i2) * c.cols() +
                     static_cast<long>(j1) * b.cols();
        const cplx* brow = b.data() + static_cast<long>(i2) * b.cols();
        for (int j2 = 0; j2 < b.cols(); ++j2) crow[j2] = av * brow[j2];
      }
    }
  }
  return c;
}

HermitianOperator HermitianOperator::checked(ComplexMatrix m, double tol) {
  if (!m.is_square()) throw ValidationError("Hermitian operator must be square");
  if (m.rows() == 0) throw DimensionError("empty Hermitian operator");
  if (!m.all_finite())
    throw ValidationError("Hermitian operator has non-finite entries");
  const double res = hermiticity_residual(m);
  if (res > tol)
    throw ValidationError("matrix is not Hermitian: residual " +
                          std::to_string(res));
  return HermitianOperator(std::move(m));
}

HermitianOperator HermitianOperator::symmetrized(ComplexMatrix m) {
  if (!m.is_square()) throw ValidationError("Hermitian operator must be square");
  const int d = m.rows();
  for (int i = 0; i < d; ++i) {
    m(i, i) = cplx(m(i, i).real(), 0.0);
    for (int j = i + 1; j < d; ++j) {
      const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  }
  if (!m.all_finite())
    throw ValidationError("Hermitian operator has non-finite entries");
  return HermitianOperator(std::move(m));
}

HermitianOperator operator+(const HermitianOperator& a,
                            const HermitianOperator& b) {
  return HermitianOperator::symmetrized(a.matrix() + b.matrix());
}

HermitianOperator operator-(const HermitianOperator& a,
                            const HermitianOperator& b) {
  return HermitianOperator::symmetrized(a.matrix() - b.matrix());
}

HermitianOperator operator*(double s, const HermitianOperator& m) {
  return HermitianOperator::symmetrized(cplx(s, 0.0) * m.matrix());
}

}  // namespace qtex
