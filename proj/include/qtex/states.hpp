// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qtex/linalg.hpp"
#include "qtex/matrix.hpp"
#include "qtex/rng.hpp"

namespace qtex {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kNormTol = 1e-12;

/// Trace-one PSD Hermitian operator.
class DensityMatrix {
 public:
  DensityMatrix() = default;

  /// Validates Tr = 1 within kTraceTol and lambda_min >= -kPsdTol.
  static DensityMatrix checked(HermitianOperator op);
  static DensityMatrix checked(ComplexMatrix m);

  int dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }

 private:
  explicit DensityMatrix(HermitianOperator op) : op_(std::move(op)) {}
  HermitianOperator op_;
};

/// Unit-norm state vector in the computational basis.
class PureState {
 public:
  PureState() = default;

  static PureState checked(std::vector<cplx> amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }
  const cplx& operator[](int i) const { return amplitudes_[i]; }

  /// |psi><psi|
  DensityMatrix density() const;

 private:
  explicit PureState(std::vector<cplx> a) : amplitudes_(std::move(a)) {}
  std::vector<cplx> amplitudes_;
};

/// The uniform-superposition free state: every entry exactly 1/d.
DensityMatrix free_state(int d);

/// Amplitudes of |f1> = sum_j |j> / sqrt(d).
std::vector<cplx> free_state_vector(int d);

/// Computational basis vector |j>, 0-based.
PureState basis_state(int d, int j);

/// Haar-distributed unit vector.
PureState random_pure(int d, Rng& rng);

/// Ginibre-induced density matrix of the requested rank:
/// G G^dagger / Tr(G G^dagger) with G a d x rank complex Gaussian matrix.
DensityMatrix random_mixed(int d, int rank, Rng& rng);

/// Unitary DFT matrix R_jk = exp(2*pi*i*j*k/d)/sqrt(d); column 0 is |f1>.
ComplexMatrix dft_rotation(int d);

/// Haar-random unitary (QR of a Ginibre matrix via modified Gram-Schmidt,
/// whose positive-diagonal R makes Q Haar).
ComplexMatrix random_unitary(int d, Rng& rng);

/// Random unitary fixing the free state: R (e^{i theta} (+) V) R^dagger with
/// V Haar on the orthocomplement of |f1>.
ComplexMatrix random_f1_fixing_unitary(int d, Rng& rng);

/// Re Tr(M rho) convenience overload.
double expectation(const HermitianOperator& m, const DensityMatrix& rho);

}  // namespace qtex
