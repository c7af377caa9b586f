// SPDX-License-Identifier: Apache-2.0

#include "qtex/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qtex/errors.hpp"

namespace qtex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDivEps = 1e-300;

ComplexMatrix free_state_matrix(int d) {
  ComplexMatrix m(d, d);
  const double v = 1.0 / d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = v;
  return m;
}

double clamped_power_sum(const std::vector<double>& lam,
                         const std::vector<double>& w, double p) {
  double lam_max = 0.0;
  for (double l : lam) lam_max = std::max(lam_max, l);
  const double clamp = 1e-12 * lam_max;
  double acc = 0.0;
  for (size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] > clamp) acc += std::pow(lam[i], p) * w[i];
  }
  return acc;
}

}  // namespace

AlphaZParams AlphaZParams::checked(double alpha, double z) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("alpha must lie in (0,1), got " + std::to_string(alpha));
  if (!(z >= std::max(alpha, 1.0 - alpha)))
    throw DomainError("z must satisfy z >= max(alpha, 1-alpha), got z=" +
                      std::to_string(z) + " alpha=" + std::to_string(alpha));
  return AlphaZParams{alpha, z};
}

const char* measure_name(MeasureId id) {
  switch (id) {
    case MeasureId::grenyi: return "tGR";
    case MeasureId::rugosity: return "tSR";
    case MeasureId::fidelity: return "tF";
    case MeasureId::tracedist: return "tTr";
    case MeasureId::weight: return "tw";
    case MeasureId::renyi: return "tR";
    case MeasureId::bures: return "tBures";
    case MeasureId::tsallis: return "tTsallis";
  }
  return "?";
}

bool MeasureValue::infinite() const { return std::isinf(value); }

std::string MeasureValue::params_string() const {
  std::string s;
  auto app = [&s](const char* k, double v) {
    if (!s.empty()) s += ",";
    s += k;
    s += "=";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    s += buf;
  };
  if (alpha) app("alpha", *alpha);
  if (z) app("z", *z);
  if (mu) app("mu", *mu);
  return s;
}

StateSpectrum spectrum(const DensityMatrix& rho) {
  const int d = rho.dim();
  EigDecomposition eig = eig_hermitian(rho.op());
  StateSpectrum s;
  s.dim = d;
  s.eigenvalues.resize(d);
  for (int i = 0; i < d; ++i) s.eigenvalues[i] = std::max(eig.eigenvalues[i], 0.0);
  s.f1_weights = eig.overlap_weights(free_state_vector(d));
  return s;
}

double overlap(const DensityMatrix& rho) {
  return (entry_sum(rho.matrix()) / static_cast<double>(rho.dim())).real();
}

double f_alpha_z(const StateSpectrum& s, AlphaZParams p) {
  const double power = (1.0 - p.alpha) / p.z;
  const double w = clamped_power_sum(s.eigenvalues, s.f1_weights, power);
  return std::pow(w, p.z);
}

double f_alpha_z(const DensityMatrix& rho, AlphaZParams p) {
  return f_alpha_z(spectrum(rho), p);
}

double f_alpha_z_trace_form(const DensityMatrix& rho, AlphaZParams p) {
  const int d = rho.dim();
  const HermitianOperator half =
      matrix_power_psd(rho.op(), (1.0 - p.alpha) / (2.0 * p.z));
  const ComplexMatrix inner =
      half.matrix() * free_state_matrix(d) * half.matrix();
  const std::vector<double> lam =
      eig_hermitian_values(HermitianOperator::symmetrized(inner));
  // Same clamp as matrix_power_psd: spurious |eps| ~ 1e-16 eigenvalues of
  // the (mathematically rank-one) product would otherwise contribute
  // sqrt-scale noise at z near 1/2.
  const double clamp = 1e-12 * std::max(lam.back(), 0.0);
  double acc = 0.0;
  for (double l : lam) {
    if (l > clamp) acc += std::pow(l, p.z);
  }
  return acc;
}

MeasureValue t_gr(const StateSpectrum& s, AlphaZParams p) {
  MeasureValue mv;
  mv.value = 1.0 - f_alpha_z(s, p);
  mv.id = MeasureId::grenyi;
  mv.alpha = p.alpha;
  mv.z = p.z;
  return mv;
}

MeasureValue t_gr(const DensityMatrix& rho, AlphaZParams p) {
  return t_gr(spectrum(rho), p);
}

MeasureValue t_rugosity(const DensityMatrix& rho) {
  const double w = overlap(rho);
  MeasureValue mv;
  mv.id = MeasureId::rugosity;
  mv.value = w <= kDivEps ? kInf : -std::log(w);
  return mv;
}

MeasureValue t_fidelity(const DensityMatrix& rho) {
  MeasureValue mv;
  mv.id = MeasureId::fidelity;
  mv.value = 1.0 - overlap(rho);
  return mv;
}

MeasureValue t_trace(const DensityMatrix& rho) {
  const HermitianOperator diff =
      rho.op() - free_state(rho.dim()).op();
  MeasureValue mv;
  mv.id = MeasureId::tracedist;
  mv.value = 0.5 * trace_norm(diff);
  return mv;
}

MeasureValue t_weight(const DensityMatrix& rho) {
  const int d = rho.dim();
  EigDecomposition eig = eig_hermitian(rho.op());
  const double lam_max = std::max(eig.eigenvalues.back(), 0.0);
  const double rank_tol = 1e-10 * lam_max;
  const std::vector<double> w = eig.overlap_weights(free_state_vector(d));

  // |f1> in range(rho) iff the kernel carries none of it:
  // ||(I - P_range)|f1>||^2 = sum of weights on clamped eigenvalues.
  double outside = 0.0;
  double inv_quad = 0.0;  // <f1|rho^+|f1>
  for (int i = 0; i < d; ++i) {
    if (eig.eigenvalues[i] > rank_tol) {
      inv_quad += w[i] / eig.eigenvalues[i];
    } else {
      outside += w[i];
    }
  }
  double lambda_star = 0.0;
  if (std::sqrt(std::max(outside, 0.0)) <= 1e-8 && inv_quad > 0.0) {
    lambda_star = 1.0 / inv_quad;
  }
  MeasureValue mv;
  mv.id = MeasureId::weight;
  mv.value = std::clamp(1.0 - lambda_star, 0.0, 1.0);
  return mv;
}

double t_weight_bisection(const DensityMatrix& rho) {
  const int d = rho.dim();
  const ComplexMatrix f1 = free_state_matrix(d);
  auto feasible = [&](double lam) {
    ComplexMatrix m = rho.matrix() - cplx(lam, 0.0) * f1;
    const std::vector<double> ev =
        eig_hermitian_values(HermitianOperator::symmetrized(std::move(m)));
    return ev.front() >= -1e-12;
  };
  double lo = 0.0, hi = 1.0;
  if (feasible(hi)) return 0.0;  // rho == f1 up to tolerance
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return 1.0 - lo;
}

MeasureValue t_renyi(const StateSpectrum& s, double alpha) {
  if (!(alpha >= 0.5 && alpha < 1.0))
    throw DomainError("renyi alpha must lie in [1/2, 1), got " +
                      std::to_string(alpha));
  const double power = (1.0 - alpha) / alpha;
  const double w = clamped_power_sum(s.eigenvalues, s.f1_weights, power);
  MeasureValue mv;
  mv.id = MeasureId::renyi;
  mv.alpha = alpha;
  mv.value = (1.0 - std::pow(w, alpha / (1.0 - alpha))) / (1.0 - alpha);
  return mv;
}

MeasureValue t_renyi(const DensityMatrix& rho, double alpha) {
  return t_renyi(spectrum(rho), alpha);
}

MeasureValue t_bures(const DensityMatrix& rho) {
  MeasureValue mv;
  mv.id = MeasureId::bures;
  mv.value = 2.0 * (1.0 - std::sqrt(std::max(overlap(rho), 0.0)));
  return mv;
}

MeasureValue t_tsallis(const DensityMatrix& rho, double mu) {
  if (!(mu > 0.0 && mu < 1.0))
    throw DomainError("tsallis mu must lie in (0,1), got " + std::to_string(mu));
  const MeasureValue base = t_gr(rho, AlphaZParams::checked(1.0 - mu, 1.0));
  MeasureValue mv;
  mv.id = MeasureId::tsallis;
  mv.mu = mu;
  mv.value = base.value / (1.0 - mu);
  return mv;
}

double d_alpha_z(const DensityMatrix& tau, const DensityMatrix& sigma,
                 AlphaZParams p) {
  if (tau.dim() != sigma.dim())
    throw DimensionError("relative entropy dimension mismatch");
  const HermitianOperator a =
      matrix_power_psd(tau.op(), p.alpha / (2.0 * p.z));
  const HermitianOperator b =
      matrix_power_psd(sigma.op(), (1.0 - p.alpha) / p.z);
  const ComplexMatrix inner = a.matrix() * b.matrix() * a.matrix();
  const std::vector<double> lam =
      eig_hermitian_values(HermitianOperator::symmetrized(inner));
  const double clamp = 1e-12 * std::max(lam.back(), 0.0);
  double f = 0.0;
  for (double l : lam) {
    if (l > clamp) f += std::pow(l, p.z);
  }
  if (f <= kDivEps) return kInf;
  return std::log2(f) / (p.alpha - 1.0);
}

double purity(const DensityMatrix& rho) {
  const cplx t = trace_product(rho.matrix(), rho.matrix());
  return t.real();
}

}  // namespace qtex
