// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qtex/matrix.hpp"

namespace qtex {

/// Spectral decomposition M = V diag(lambda) V^dagger with real eigenvalues
/// in ascending order and eigenvectors as the columns of V.
struct EigDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  /// |<v_i|x>|^2 for a unit vector x, one weight per eigenvalue.
  std::vector<double> overlap_weights(const std::vector<cplx>& x) const;
};

inline constexpr double kEigTol = 1e-9;
inline constexpr double kPsdCheckTol = 1e-8;

/// Full eigendecomposition of a Hermitian operator.
EigDecomposition eig_hermitian(const HermitianOperator& m);

/// Eigenvalues only, ascending.
std::vector<double> eig_hermitian_values(const HermitianOperator& m);

/// V diag(clamp(lambda)^p) V^dagger, where eigenvalues below
/// 1e-12 * lambda_max are clamped to zero. Requires the spectrum to be
/// PSD within kPsdCheckTol; p <= 0 on a singular operator is an error.
HermitianOperator matrix_power_psd(const HermitianOperator& m, double p);

/// sum_i |lambda_i|
double trace_norm(const HermitianOperator& m);

/// Kronecker product with a dimension cap on the result.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     int max_dim = kMaxDim);

/// Re Tr(M rho). Throws if |Im Tr(M rho)| > 1e-10.
double expectation(const HermitianOperator& m, const HermitianOperator& rho);

}  // namespace qtex
