// SPDX-License-Identifier: Apache-2.0

#include "qtex/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qtex/errors.hpp"

namespace qtex {

DensityMatrix DensityMatrix::checked(HermitianOperator op) {
  const double tr = op.trace_real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw ValidationError("density matrix trace " + std::to_string(tr) +
                          " is not 1");
  }
  const std::vector<double> lam = eig_hermitian_values(op);
  if (lam.front() < -kPsdTol) {
    throw ValidationError("density matrix not PSD: lambda_min = " +
                          std::to_string(lam.front()));
  }
  return DensityMatrix(std::move(op));
}

DensityMatrix DensityMatrix::checked(ComplexMatrix m) {
  return checked(HermitianOperator::checked(std::move(m)));
}

PureState PureState::checked(std::vector<cplx> amplitudes) {
  if (amplitudes.empty()) throw DimensionError("empty state vector");
  double n2 = 0.0;
  for (const cplx& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw ValidationError("state vector has non-finite amplitudes");
    n2 += std::norm(a);
  }
  if (std::abs(std::sqrt(n2) - 1.0) > kNormTol)
    throw ValidationError("state vector norm " + std::to_string(std::sqrt(n2)) +
                          " is not 1");
  return PureState(std::move(amplitudes));
}

DensityMatrix PureState::density() const {
  const int d = dim();
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
  return DensityMatrix::checked(HermitianOperator::symmetrized(std::move(m)));
}

DensityMatrix free_state(int d) {
  if (d < 1) throw DimensionError("free state needs d >= 1");
  ComplexMatrix m(d, d);
  const double v = 1.0 / d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = v;
  return DensityMatrix::checked(HermitianOperator::checked(std::move(m)));
}

std::vector<cplx> free_state_vector(int d) {
  if (d < 1) throw DimensionError("free state needs d >= 1");
  return std::vector<cplx>(d, cplx(1.0 / std::sqrt(static_cast<double>(d)), 0.0));
}

PureState basis_state(int d, int j) {
  if (d < 1) throw DimensionError("basis state needs d >= 1");
  if (j < 0 || j >= d)
    throw DimensionError("basis index " + std::to_string(j) +
                         " out of range for d=" + std::to_string(d));
  std::vector<cplx> a(d);
  a[j] = 1.0;
  return PureState::checked(std::move(a));
}

PureState random_pure(int d, Rng& rng) {
  if (d < 1) throw DimensionError("random_pure needs d >= 1");
  std::vector<cplx> a(d);
  double n2 = 0.0;
  for (cplx& v : a) {
    v = rng.complex_gaussian();
    n2 += std::norm(v);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (cplx& v : a) v *= inv;
  return PureState::checked(std::move(a));
}

DensityMatrix random_mixed(int d, int rank, Rng& rng) {
  if (d < 1) throw DimensionError("random_mixed needs d >= 1");
  if (rank < 1 || rank > d)
    throw DomainError("rank " + std::to_string(rank) +
                      " out of range 1.." + std::to_string(d));
  ComplexMatrix g(d, rank);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.complex_gaussian();
  ComplexMatrix m = multiply_adjoint(g, g);  // G G^dagger
  const double tr = m.trace().real();
  m = cplx(1.0 / tr, 0.0) * m;
  return DensityMatrix::checked(HermitianOperator::symmetrized(std::move(m)));
}

ComplexMatrix dft_rotation(int d) {
  if (d < 1) throw DimensionError("dft_rotation needs d >= 1");
  ComplexMatrix r(d, d);
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      // (j*k) mod d keeps the phase argument small for exact periodicity.
      const long idx = (static_cast<long>(j) * k) % d;
      const double ang = 2.0 * std::numbers::pi * static_cast<double>(idx) / d;
      r(j, k) = cplx(std::cos(ang) * inv_sqrt, std::sin(ang) * inv_sqrt);
    }
  }
  return r;
}

ComplexMatrix random_unitary(int d, Rng& rng) {
  if (d < 1) throw DimensionError("random_unitary needs d >= 1");
  ComplexMatrix q(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) q(i, j) = rng.complex_gaussian();
  // Modified Gram-Schmidt over columns, with one re-orthogonalization pass.
  for (int j = 0; j < d; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int p = 0; p < j; ++p) {
        cplx proj{};
        for (int i = 0; i < d; ++i) proj += std::conj(q(i, p)) * q(i, j);
        for (int i = 0; i < d; ++i) q(i, j) -= proj * q(i, p);
      }
    }
    double n2 = 0.0;
    for (int i = 0; i < d; ++i) n2 += std::norm(q(i, j));
    const double inv = 1.0 / std::sqrt(n2);
    for (int i = 0; i < d; ++i) q(i, j) *= inv;
  }
  return q;
}

ComplexMatrix random_f1_fixing_unitary(int d, Rng& rng) {
  if (d < 1) throw DimensionError("random_f1_fixing_unitary needs d >= 1");
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const cplx phase(std::cos(theta), std::sin(theta));
  ComplexMatrix block(d, d);
  block(0, 0) = phase;
  if (d > 1) {
    const ComplexMatrix v = random_unitary(d - 1, rng);
    for (int i = 0; i < d - 1; ++i)
      for (int j = 0; j < d - 1; ++j) block(i + 1, j + 1) = v(i, j);
  }
  const ComplexMatrix r = dft_rotation(d);
  return multiply_adjoint(r * block, r);  // R block R^dagger
}

double expectation(const HermitianOperator& m, const DensityMatrix& rho) {
  return expectation(m, rho.op());
}

}  // namespace qtex
