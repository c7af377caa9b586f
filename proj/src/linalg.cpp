// SPDX-License-Identifier: Apache-2.0

#include "qtex/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "qtex/errors.hpp"

namespace qtex {

namespace {

// zheevd mutates its input and returns eigenvectors in place (row-major
// layout handled by LAPACKE).
void run_zheevd(ComplexMatrix& a, std::vector<double>& w, char jobz) {
  const int d = a.rows();
  const double scale = max_abs(a);
  w.assign(d, 0.0);
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_ROW_MAJOR, jobz, 'L', d,
      reinterpret_cast<lapack_complex_double*>(a.data()), d, w.data());
  if (info != 0) {
    throw NumericalError("eigensolver failed to converge: dim=" +
                         std::to_string(d) + " info=" + std::to_string(info) +
                         " scale=" + std::to_string(scale));
  }
}

}  // namespace

std::vector<double> EigDecomposition::overlap_weights(
    const std::vector<cplx>& x) const {
  const int d = eigenvectors.rows();
  std::vector<double> w(d);
  for (int i = 0; i < d; ++i) {
    cplx acc{};
    for (int r = 0; r < d; ++r) acc += std::conj(eigenvectors(r, i)) * x[r];
    w[i] = std::norm(acc);
  }
  return w;
}

EigDecomposition eig_hermitian(const HermitianOperator& m) {
  EigDecomposition out;
  ComplexMatrix a = m.matrix();
  run_zheevd(a, out.eigenvalues, 'V');
  out.eigenvectors = std::move(a);
  return out;
}

std::vector<double> eig_hermitian_values(const HermitianOperator& m) {
  ComplexMatrix a = m.matrix();
  std::vector<double> w;
  run_zheevd(a, w, 'N');
  return w;
}

HermitianOperator matrix_power_psd(const HermitianOperator& m, double p) {
  const int d = m.dim();
  EigDecomposition eig = eig_hermitian(m);
  const double lambda_max = std::max(eig.eigenvalues.back(), 0.0);
  if (eig.eigenvalues.front() < -kPsdCheckTol) {
    throw NumericalError("matrix is not PSD: lambda_min = " +
                         std::to_string(eig.eigenvalues.front()));
  }
  const double clamp = 1e-12 * lambda_max;
  std::vector<double> powered(d);
  for (int i = 0; i < d; ++i) {
    const double lam = eig.eigenvalues[i] <= clamp ? 0.0 : eig.eigenvalues[i];
    if (lam == 0.0) {
      if (p <= 0.0)
        throw NumericalError("singular power: p <= 0 on a singular operator");
      powered[i] = 0.0;
    } else {
      powered[i] = std::pow(lam, p);
    }
  }
  ComplexMatrix scaled(d, d);
  kernels::ops().scale_cols(eig.eigenvectors.data(), powered.data(),
                            scaled.data(), d, d);
  return HermitianOperator::symmetrized(
      multiply_adjoint(scaled, eig.eigenvectors));
}

double trace_norm(const HermitianOperator& m) {
  double s = 0.0;
  for (double lam : eig_hermitian_values(m)) s += std::abs(lam);
  return s;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     int max_dim) {
  const long r = static_cast<long>(a.rows()) * b.rows();
  const long c = static_cast<long>(a.cols()) * b.cols();
  if (r > max_dim || c > max_dim) {
    throw DimensionError("tensor product exceeds dimension cap " +
                         std::to_string(max_dim));
  }
  return kron(a, b);
}

double expectation(const HermitianOperator& m, const HermitianOperator& rho) {
  if (m.dim() != rho.dim())
    throw DimensionError("expectation dimension mismatch");
  const cplx t = trace_product(m.matrix(), rho.matrix());
  if (std::abs(t.imag()) > 1e-10) {
    throw NumericalError("non-Hermitian pairing: Im Tr(M rho) = " +
                         std::to_string(t.imag()));
  }
  return t.real();
}

}  // namespace qtex
