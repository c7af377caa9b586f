// SPDX-License-Identifier: Apache-2.0

#include "qtex/witnesses.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qtex/channels.hpp"
#include "qtex/errors.hpp"
#include "qtex/measures.hpp"

namespace qtex {

namespace {

constexpr double kPi = std::numbers::pi;

/// Fills the certificate from the spectrum and enforces both witness
/// conditions.
Witness finalize(Witness w, bool require_negative = true) {
  const EigDecomposition eig = eig_hermitian(w.op);
  w.min_eigenvalue = eig.eigenvalues.front();
  w.free_expectation = expectation(w.op, free_state(w.dim));
  if (w.free_expectation < -kDetectTol) {
    throw WitnessError("free-state expectation is negative: " +
                       std::to_string(w.free_expectation));
  }
  if (require_negative && w.min_eigenvalue >= -kDetectTol) {
    throw WitnessError(
        "not a witness for any state: lambda_min = " +
        std::to_string(w.min_eigenvalue));
  }
  std::vector<cplx> ground(w.dim);
  for (int i = 0; i < w.dim; ++i) ground[i] = eig.eigenvectors(i, 0);
  w.ground_state = PureState::checked(std::move(ground));
  return w;
}

}  // namespace

const char* witness_family_name(WitnessFamily f) {
  switch (f) {
    case WitnessFamily::universal: return "universal";
    case WitnessFamily::w1: return "w1";
    case WitnessFamily::theta: return "theta";
    case WitnessFamily::jk_phase: return "jk";
    case WitnessFamily::imaginarity: return "imag";
  }
  return "?";
}

Witness universal_witness(const HermitianOperator& a) {
  if (a.dim() < 2) throw DimensionError("witness needs d >= 2");
  Witness w;
  w.dim = a.dim();
  w.family = WitnessFamily::universal;
  w.op = detexture(a) - a;
  return finalize(std::move(w));
}

Witness witness_w1(int d) {
  if (d < 2) throw DimensionError("witness needs d >= 2");
  Witness w;
  w.dim = d;
  w.family = WitnessFamily::w1;
  w.op = free_state(d).op() -
         HermitianOperator::checked(ComplexMatrix::identity(d));
  return finalize(std::move(w));
}

HermitianOperator generator_g(int d) {
  if (d < 1) throw DimensionError("generator needs d >= 1");
  ComplexMatrix m(d, d);
  const double off = 2.0 / d;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = off;
    m(i, i) = off - 1.0;
  }
  return HermitianOperator::checked(std::move(m));
}

Witness witness_theta(int d, double theta) {
  if (d < 2) throw DimensionError("witness needs d >= 2");
  if (!(theta > kPi / 4.0 && theta <= 3.0 * kPi / 4.0)) {
    throw DomainError("theta must lie in (pi/4, 3pi/4], got " +
                      std::to_string(theta));
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  ComplexMatrix m(d, d);
  const double off = 2.0 * s / d;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = off;
    m(i, i) = off + (c - s);
  }
  Witness w;
  w.dim = d;
  w.family = WitnessFamily::theta;
  w.theta = theta;
  w.op = HermitianOperator::checked(std::move(m));
  return finalize(std::move(w));
}

Witness witness_jk(int d, int j, int k, double phi) {
  if (d < 2) throw DimensionError("witness needs d >= 2");
  if (j < 0 || j >= d || k < 0 || k >= d)
    throw DimensionError("basis index out of range");
  if (j == k) throw DimensionError("witness needs distinct j, k");
  if (!(phi > 0.0 && phi < 2.0 * kPi))
    throw DomainError("phi must lie in (0, 2pi), got " + std::to_string(phi));
  ComplexMatrix m(d, d);
  const double diag = 2.0 * std::cos(phi) / d;
  for (int i = 0; i < d; ++i) m(i, i) = diag;
  m(j, k) = -cplx(std::cos(phi), std::sin(phi));
  m(k, j) = -cplx(std::cos(phi), -std::sin(phi));
  Witness w;
  w.dim = d;
  w.family = WitnessFamily::jk_phase;
  w.phi = phi;
  w.j = j;
  w.k = k;
  w.op = HermitianOperator::checked(std::move(m));
  return finalize(std::move(w));
}

Witness imaginarity_witness(int d, int j, int k, int sign) {
  if (sign != 1 && sign != -1)
    throw DomainError("imaginarity sign must be +1 or -1");
  Witness w = witness_jk(d, j, k, sign == 1 ? kPi / 2.0 : 3.0 * kPi / 2.0);
  w.family = WitnessFamily::imaginarity;
  w.sign = sign;
  return w;
}

DetectionResult evaluate_witness(const Witness& w, const DensityMatrix& rho) {
  if (w.dim != rho.dim())
    throw DimensionError("witness/state dimension mismatch");
  DetectionResult res;
  res.family = w.family;
  res.expectation = expectation(w.op, rho);
  res.boundary = std::abs(res.expectation) <= kDetectTol;
  res.detected = res.expectation < -kDetectTol;
  if (w.family == WitnessFamily::w1) {
    res.derived_tf = -res.expectation;
  } else if (w.family == WitnessFamily::theta) {
    res.derived_tf = tf_from_theta(res.expectation, *w.theta);
  }
  return res;
}

double tf_from_theta(double expectation, double theta) {
  const double s = std::sin(theta);
  if (!(s > 0.0)) throw DomainError("tf_from_theta needs sin(theta) > 0");
  if (!(theta > kPi / 4.0 && theta <= 3.0 * kPi / 4.0))
    throw DomainError("theta must lie in (pi/4, 3pi/4]");
  return (std::cos(theta) + s - expectation) / (2.0 * s);
}

double theta_threshold(double theta) {
  if (!(theta > kPi / 4.0 && theta <= 3.0 * kPi / 4.0))
    throw DomainError("theta must lie in (pi/4, 3pi/4]");
  const double s = std::sin(theta);
  return (std::cos(theta) + s) / (2.0 * s);
}

}  // namespace qtex
