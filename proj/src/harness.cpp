// SPDX-License-Identifier: Apache-2.0

#include "qtex/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "qtex/channels.hpp"
#include "qtex/errors.hpp"
#include "qtex/witnesses.hpp"

namespace qtex {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::uint64_t kAxiomSalt = 0xA11;
constexpr std::uint64_t kPropSalt = 0xB22;
constexpr std::uint64_t kWitnessSalt = 0xC33;
constexpr std::uint64_t kControlSalt = 0xD44;

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

/// Accumulates checks into a PropertyReport. A check `lhs <= rhs + tol`
/// passes trivially when rhs = +inf; a non-finite slack otherwise counts as
/// a violation, so NaNs fail loudly.
class Checker {
 public:
  Checker(std::string suite_id, const SuiteConfig& cfg) {
    rep_.suite_id = std::move(suite_id);
    rep_.config = cfg;
  }

  void require_le(const std::string& id, int dim, std::uint64_t sample,
                  const std::string& params, double lhs, double rhs,
                  double tol) {
    ++rep_.checks_run;
    if (std::isinf(rhs) && rhs > 0.0) return;
    const double slack = lhs - rhs;
    if (std::isfinite(slack)) {
      if (!rep_.has_slack || slack > rep_.worst_slack) {
        rep_.worst_slack = slack;
        rep_.has_slack = true;
      }
    }
    if (!(slack <= tol)) {
      ++rep_.total_violations;
      if (rep_.violations.size() < kMaxRecordedViolations) {
        rep_.violations.push_back({id, dim, sample, params, lhs, rhs, slack});
      }
    }
  }

  void require_close(const std::string& id, int dim, std::uint64_t sample,
                     const std::string& params, double a, double b,
                     double tol) {
    const double diff = std::abs(a - b);
    require_le(id, dim, sample, params, diff, 0.0, tol);
  }

  void skip_infinite() { ++rep_.skipped_infinite; }
  void warn(std::string w) { rep_.warnings.push_back(std::move(w)); }
  PropertyReport& report() { return rep_; }

  PropertyReport finish() {
    if (rep_.checks_run == 0) rep_.warnings.push_back("no checks were run");
    rep_.passed = rep_.total_violations == 0;
    return std::move(rep_);
  }

 private:
  PropertyReport rep_;
};

struct MeasureFn {
  std::string name;
  std::function<double(const DensityMatrix&, const StateSpectrum&)> eval;
};

std::vector<MeasureFn> validated_measure_set(const SuiteConfig& cfg) {
  std::vector<MeasureFn> out;
  for (double a : cfg.alpha_grid) {
    for (double z : cfg.z_values(a)) {
      const AlphaZParams p = AlphaZParams::checked(a, z);
      out.push_back({"tGR[alpha=" + fmt_g(a) + ",z=" + fmt_g(z) + "]",
                     [p](const DensityMatrix&, const StateSpectrum& s) {
                       return t_gr(s, p).value;
                     }});
    }
  }
  out.push_back({"tSR", [](const DensityMatrix& r, const StateSpectrum&) {
                   return t_rugosity(r).value;
                 }});
  out.push_back({"tF", [](const DensityMatrix& r, const StateSpectrum&) {
                   return t_fidelity(r).value;
                 }});
  out.push_back({"tTr", [](const DensityMatrix& r, const StateSpectrum&) {
                   return t_trace(r).value;
                 }});
  out.push_back({"tw", [](const DensityMatrix& r, const StateSpectrum&) {
                   return t_weight(r).value;
                 }});
  for (double a : cfg.renyi_alphas()) {
    out.push_back({"tR[alpha=" + fmt_g(a) + "]",
                   [a](const DensityMatrix&, const StateSpectrum& s) {
                     return t_renyi(s, a).value;
                   }});
  }
  return out;
}

DensityMatrix mix_states(double p, const DensityMatrix& a,
                         const DensityMatrix& b) {
  ComplexMatrix m(a.dim(), a.dim());
  kernels::ops().axpby(cplx(p, 0.0), a.matrix().data(), cplx(1.0 - p, 0.0),
                       b.matrix().data(), m.data(),
                       static_cast<int>(m.size()));
  return DensityMatrix::checked(HermitianOperator::symmetrized(std::move(m)));
}

DensityMatrix conjugate_by_unitary(const ComplexMatrix& u,
                                   const DensityMatrix& rho) {
  return DensityMatrix::checked(
      HermitianOperator::symmetrized(multiply_adjoint(u * rho.matrix(), u)));
}

DensityMatrix maximally_mixed(int d) {
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = 1.0 / d;
  return DensityMatrix::checked(std::move(m));
}

/// Pure state orthogonal to |f1>: |0> Gram-Schmidt'ed against |f1>.
/// Its fidelity measure is 1 up to rounding.
PureState hot_state(int d) {
  const std::vector<cplx> f1 = free_state_vector(d);
  std::vector<cplx> a(d);
  a[0] = 1.0;
  cplx proj{};
  for (int i = 0; i < d; ++i) proj += std::conj(f1[i]) * a[i];
  double n2 = 0.0;
  for (int i = 0; i < d; ++i) {
    a[i] -= proj * f1[i];
    n2 += std::norm(a[i]);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (cplx& v : a) v *= inv;
  return PureState::checked(std::move(a));
}

HermitianOperator random_hermitian(int d, Rng& rng) {
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
  return HermitianOperator::symmetrized(
      cplx(0.5, 0.0) * (g + g.adjoint()));
}

}  // namespace

SuiteConfig SuiteConfig::defaults() { return SuiteConfig{}; }

void SuiteConfig::validate() const {
  for (int d : dims) {
    if (d < 2 || d > max_dim)
      throw DomainError("suite dims must lie in [2, " +
                        std::to_string(max_dim) + "]");
  }
  if (samples_per_dim < 1) throw DomainError("samples_per_dim must be >= 1");
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  for (double a : alpha_grid)
    if (!(a > 0.0 && a < 1.0)) throw DomainError("alpha grid values in (0,1)");
  for (double z : z_grid)
    if (!(z > 0.0)) throw DomainError("z grid values must be positive");
  for (double t : theta_grid)
    if (!(t > kPi / 4 && t <= 3 * kPi / 4))
      throw DomainError("theta grid values in (pi/4, 3pi/4]");
  for (double m : mu_grid)
    if (!(m > 0.0 && m < 1.0)) throw DomainError("mu grid values in (0,1)");
}

std::vector<double> SuiteConfig::z_values(double alpha) const {
  const double zmin = std::max(alpha, 1.0 - alpha);
  std::vector<double> zs{zmin};
  for (double z : z_grid) {
    if (z >= zmin) zs.push_back(z);
  }
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  return zs;
}

std::vector<double> SuiteConfig::renyi_alphas() const {
  std::vector<double> out;
  for (double a : alpha_grid) {
    if (a >= 0.5 && a < 1.0) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PropertyReport run_axiom_suite(const SuiteConfig& cfg) {
  cfg.validate();
  Checker ck("axioms", cfg);
  const std::vector<MeasureFn> measures = validated_measure_set(cfg);
  const double t1_tol = std::min(1e-10, cfg.tolerance);

  for (int d : cfg.dims) {
    {
      const DensityMatrix f1 = free_state(d);
      const StateSpectrum sf = spectrum(f1);
      for (const MeasureFn& m : measures) {
        ck.require_close("zero_at_free[" + m.name + "]", d, 0, "",
                         m.eval(f1, sf), 0.0, t1_tol);
      }
    }
    for (int i = 0; i < cfg.samples_per_dim; ++i) {
      Rng rng = Rng::derive(cfg.seed, {kAxiomSalt, static_cast<std::uint64_t>(d),
                                       static_cast<std::uint64_t>(i)});
      const int rank = 1 + (i % d);
      const std::string sparams = "rank=" + std::to_string(rank);
      const DensityMatrix rho = random_mixed(d, rank, rng);
      const StateSpectrum srho = spectrum(rho);

      std::vector<double> base(measures.size());
      for (std::size_t mi = 0; mi < measures.size(); ++mi) {
        base[mi] = measures[mi].eval(rho, srho);
        if (std::isinf(base[mi])) continue;  // +inf is trivially nonnegative
        ck.require_le("nonneg[" + measures[mi].name + "]", d, i, sparams,
                      -base[mi], 0.0, t1_tol);
      }

      const KrausChannel mix_ch =
          random_texture_free_unitary_mix(d, 1 + (i % 3), rng);
      const KrausChannel gen_ch =
          random_texture_free_channel(d, 1 + (i % 3), rng);
      const std::pair<const char*, const KrausChannel*> chans[] = {
          {"mix", &mix_ch}, {"general", &gen_ch}};
      for (const auto& [tag, ch] : chans) {
        const DensityMatrix sig = apply(*ch, rho);
        const StateSpectrum ssig = spectrum(sig);
        for (std::size_t mi = 0; mi < measures.size(); ++mi) {
          ck.require_le(
              std::string("monotone.") + tag + "[" + measures[mi].name + "]",
              d, i, sparams, measures[mi].eval(sig, ssig), base[mi],
              cfg.tolerance);
        }
      }

      const DensityMatrix rho2 = random_mixed(d, 1 + ((i + 1) % d), rng);
      const StateSpectrum srho2 = spectrum(rho2);
      const double p = rng.uniform01();
      const DensityMatrix mixed = mix_states(p, rho, rho2);
      const StateSpectrum smixed = spectrum(mixed);
      for (std::size_t mi = 0; mi < measures.size(); ++mi) {
        const double m2 = measures[mi].eval(rho2, srho2);
        if (cfg.skip_infinite && (std::isinf(base[mi]) || std::isinf(m2))) {
          ck.skip_infinite();
          continue;
        }
        ck.require_le("convex[" + measures[mi].name + "]", d, i,
                      sparams + ",p=" + fmt_g(p),
                      measures[mi].eval(mixed, smixed),
                      p * base[mi] + (1.0 - p) * m2, cfg.tolerance);
      }
    }
  }
  return ck.finish();
}

PropertyReport run_proposition_suite(const SuiteConfig& cfg) {
  cfg.validate();
  Checker ck("propositions", cfg);
  const std::vector<double> renyi = cfg.renyi_alphas();
  const double oracle_tol = 1e-8;

  // Closed-form tensor case: rho = delta = |0><0| at d = 2. T^GR is
  // 1 - 2^{-z} and the product state gives 1 - 4^{-z}.
  if (!cfg.dims.empty() && cfg.max_dim >= 4 && !cfg.alpha_grid.empty()) {
    const DensityMatrix r2 = basis_state(2, 0).density();
    const DensityMatrix r4 = DensityMatrix::checked(
        HermitianOperator::symmetrized(tensor(r2.matrix(), r2.matrix())));
    const StateSpectrum s2 = spectrum(r2);
    const StateSpectrum s4 = spectrum(r4);
    for (double a : cfg.alpha_grid) {
      for (double z : cfg.z_values(a)) {
        const AlphaZParams p = AlphaZParams::checked(a, z);
        const std::string params = "alpha=" + fmt_g(a) + ",z=" + fmt_g(z);
        const double t_single = t_gr(s2, p).value;
        const double t_pair = t_gr(s4, p).value;
        ck.require_close("grenyi.tensor_anchor_single", 2, 0, params, t_single,
                         1.0 - std::pow(2.0, -z), 1e-10);
        ck.require_close("grenyi.tensor_anchor_pair", 4, 0, params, t_pair,
                         1.0 - std::pow(4.0, -z), 1e-10);
        ck.require_le("grenyi.tensor_subadditive", 4, 0, params, t_pair,
                      2.0 * t_single, cfg.tolerance);
        ck.require_le("grenyi.tensor_supermultiplicative", 4, 0, params,
                      t_single * t_single, t_pair, cfg.tolerance);
      }
    }
  }

  for (int d : cfg.dims) {
    // Fuchs-van de Graaf active near the free state.
    {
      const DensityMatrix near_f1 =
          mix_states(1.0 - 1e-3, free_state(d), maximally_mixed(d));
      const double tf = t_fidelity(near_f1).value;
      const double ttr = t_trace(near_f1).value;
      ck.require_le("tracedist_fvdg_lower.near_free", d, 0, "eps=0.001",
                    1.0 - std::sqrt(1.0 - tf), ttr, cfg.tolerance);
      ck.require_le("tracedist_fvdg_upper.near_free", d, 0, "eps=0.001", ttr,
                    std::sqrt(tf), cfg.tolerance);
    }

    for (int i = 0; i < cfg.samples_per_dim; ++i) {
      Rng rng = Rng::derive(cfg.seed, {kPropSalt, static_cast<std::uint64_t>(d),
                                       static_cast<std::uint64_t>(i)});
      const int rank = 1 + (i % d);
      const std::string sparams = "rank=" + std::to_string(rank);
      const DensityMatrix rho = random_mixed(d, rank, rng);
      const StateSpectrum srho = spectrum(rho);

      // z-monotonicity along each alpha row.
      for (double a : cfg.alpha_grid) {
        const std::vector<double> zs = cfg.z_values(a);
        for (std::size_t zi = 0; zi + 1 < zs.size(); ++zi) {
          ck.require_le("grenyi.z_monotone", d, i,
                        "alpha=" + fmt_g(a) + ",z1=" + fmt_g(zs[zi]) +
                            ",z2=" + fmt_g(zs[zi + 1]),
                        t_gr(srho, AlphaZParams::checked(a, zs[zi])).value,
                        t_gr(srho, AlphaZParams::checked(a, zs[zi + 1])).value,
                        cfg.tolerance);
        }
      }
      // Diagonal divergence comparison on alpha in [1/2, 1). The sound
      // content is monotonicity of the divergence D_{alpha,alpha} itself;
      // the trace functional f (and hence 1 - f) moves either way with
      // alpha (e.g. the maximally mixed state).
      {
        auto d_diag = [&srho](double a) {
          const double f = f_alpha_z(srho, AlphaZParams::checked(a, a));
          return f > 0.0 ? std::log2(f) / (a - 1.0) : kInf;
        };
        for (std::size_t ai = 0; ai + 1 < renyi.size(); ++ai) {
          ck.require_le(
              "grenyi.diag_divergence_monotone", d, i,
              "a1=" + fmt_g(renyi[ai]) + ",a2=" + fmt_g(renyi[ai + 1]),
              d_diag(renyi[ai]), d_diag(renyi[ai + 1]), cfg.tolerance);
        }
      }

      // Invariance under f1-fixing unitaries.
      {
        const ComplexMatrix u = random_f1_fixing_unitary(d, rng);
        const DensityMatrix rho_u = conjugate_by_unitary(u, rho);
        const StateSpectrum sru = spectrum(rho_u);
        for (double a : cfg.alpha_grid) {
          for (double z : cfg.z_values(a)) {
            const AlphaZParams p = AlphaZParams::checked(a, z);
            ck.require_close("grenyi.unitary_invariance", d, i,
                             "alpha=" + fmt_g(a) + ",z=" + fmt_g(z),
                             t_gr(sru, p).value, t_gr(srho, p).value,
                             cfg.tolerance);
          }
        }
      }

      // Tensor additivity sandwich on random pairs, total dimension <= 36.
      {
        int d2 = 0;
        for (int cand : cfg.dims) {
          if (d * cand <= 36 && cand > d2) d2 = cand;
        }
        if (d2 >= 2) {
          const DensityMatrix delta = random_mixed(d2, 1 + (i % d2), rng);
          const StateSpectrum sdelta = spectrum(delta);
          const DensityMatrix prod = DensityMatrix::checked(
              HermitianOperator::symmetrized(
                  tensor(rho.matrix(), delta.matrix(), 36)));
          const StateSpectrum sprod = spectrum(prod);
          for (double a : cfg.alpha_grid) {
            for (double z : cfg.z_values(a)) {
              const AlphaZParams p = AlphaZParams::checked(a, z);
              const std::string params =
                  "alpha=" + fmt_g(a) + ",z=" + fmt_g(z) + ",d2=" +
                  std::to_string(d2);
              const double tr = t_gr(srho, p).value;
              const double td = t_gr(sdelta, p).value;
              const double tp = t_gr(sprod, p).value;
              ck.require_le("grenyi.tensor_subadditive", d, i, params, tp, tr + td,
                            cfg.tolerance);
              ck.require_le("grenyi.tensor_supermultiplicative", d, i, params, tr * td, tp,
                            cfg.tolerance);
            }
          }
        }
      }

      const double tf = t_fidelity(rho).value;
      const double tsr = t_rugosity(rho).value;
      const double ttr = t_trace(rho).value;
      const double tw = t_weight(rho).value;

      ck.require_le("fidelity_le_rugosity", d, i, sparams, tf, tsr, cfg.tolerance);
      ck.require_le("tracedist_fvdg_lower", d, i, sparams,
                    1.0 - std::sqrt(std::max(1.0 - tf, 0.0)), ttr,
                    cfg.tolerance);
      ck.require_le("tracedist_fvdg_upper", d, i, sparams, ttr,
                    std::sqrt(std::max(tf, 0.0)), cfg.tolerance);
      ck.require_le("fidelity_le_weight", d, i, sparams, tf, tw, cfg.tolerance);

      for (double a : renyi) {
        ck.require_le("fidelity_le_scaled_renyi", d, i, "alpha=" + fmt_g(a), tf,
                      (1.0 - a) * t_renyi(srho, a).value, cfg.tolerance);
      }
      for (std::size_t ai = 0; ai + 1 < renyi.size(); ++ai) {
        ck.require_le(
            "renyi.alpha_monotone", d, i,
            "a1=" + fmt_g(renyi[ai]) + ",a2=" + fmt_g(renyi[ai + 1]),
            t_renyi(srho, renyi[ai]).value, t_renyi(srho, renyi[ai + 1]).value,
            cfg.tolerance);
      }

      // Weight closed form against the bisection oracle.
      ck.require_close("weight.bisection_oracle", d, i, sparams, tw,
                       t_weight_bisection(rho), oracle_tol);

      // Dual-path agreement of the trace functional.
      for (double a : cfg.alpha_grid) {
        for (double z : cfg.z_values(a)) {
          const AlphaZParams p = AlphaZParams::checked(a, z);
          ck.require_close("falphaz.dual_path", d, i,
                           "alpha=" + fmt_g(a) + ",z=" + fmt_g(z),
                           f_alpha_z(srho, p), f_alpha_z_trace_form(rho, p),
                           oracle_tol);
        }
      }

      // Data processing of the relative entropy under free channels.
      {
        const KrausChannel ch =
            (i % 2 == 0) ? random_texture_free_unitary_mix(d, 1 + (i % 3), rng)
                         : random_texture_free_channel(d, 1 + (i % 3), rng);
        const DensityMatrix sig = apply(ch, rho);
        const DensityMatrix f1 = free_state(d);
        const AlphaZParams dpi_params[] = {AlphaZParams::checked(0.3, 0.75),
                                           AlphaZParams::checked(0.5, 0.5),
                                           AlphaZParams::checked(0.7, 1.5)};
        for (const AlphaZParams& p : dpi_params) {
          ck.require_le("relative_entropy.dpi", d, i,
                        "alpha=" + fmt_g(p.alpha) + ",z=" + fmt_g(p.z),
                        d_alpha_z(f1, sig, p), d_alpha_z(f1, rho, p),
                        cfg.tolerance);
        }
      }
    }
  }
  return ck.finish();
}

PropertyReport run_witness_suite(const SuiteConfig& cfg) {
  cfg.validate();
  Checker ck("witnesses", cfg);
  const double id_tol = 1e-12;

  for (int d : cfg.dims) {
    const DensityMatrix f1 = free_state(d);

    // Certificates of the fixed families, once per dimension.
    std::vector<Witness> fixed;
    fixed.push_back(witness_w1(d));
    for (double th : cfg.theta_grid) fixed.push_back(witness_theta(d, th));
    fixed.push_back(witness_jk(d, 0, 1, 1.0));
    fixed.push_back(imaginarity_witness(d, 0, 1, +1));
    fixed.push_back(imaginarity_witness(d, 0, 1, -1));
    for (const Witness& w : fixed) {
      const std::string fam = witness_family_name(w.family);
      ck.require_le("W.cond1[" + fam + "]", d, 0, "", -w.free_expectation, 0.0,
                    kDetectTol);
      ck.require_le("W.cond2[" + fam + "]", d, 0, "", w.min_eigenvalue, 0.0,
                    -kDetectTol);
      // The ground projector is a detected state distinct from f1.
      const DensityMatrix ground = w.worst_case_state();
      const DetectionResult det = evaluate_witness(w, ground);
      ck.require_close("W.cond2.ground_expectation[" + fam + "]", d, 0, "",
                       det.expectation, w.min_eigenvalue, 1e-9);
      ck.require_le("W.cond2.ground_detected[" + fam + "]", d, 0, "",
                    det.detected ? 0.0 : 1.0, 0.0, 0.5);
      ck.require_le("W.cond2.ground_not_free[" + fam + "]", d, 0, "", 1e-6,
                    max_abs_diff(ground.matrix(), f1.matrix()), 0.0);
    }

    // Non-universality: the generator witness has <f1|W|f1> = 1, while every
    // universal-construction witness has <f1|W|f1> = 0.
    {
      const Witness wg = witness_theta(d, kPi / 2);
      ck.require_close("W.non_universality.generator", d, 0, "theta=pi/2",
                       expectation(wg.op, f1), 1.0, id_tol);
    }

    // W1 anchor on a basis state: expectation -(1 - 1/d).
    {
      const Witness w1 = witness_w1(d);
      const DetectionResult det =
          evaluate_witness(w1, basis_state(d, 0).density());
      ck.require_close("W1.basis_state_anchor", d, 0, "",
                       det.expectation, -(1.0 - 1.0 / d), id_tol);
    }

    for (int i = 0; i < cfg.samples_per_dim; ++i) {
      Rng rng = Rng::derive(cfg.seed,
                            {kWitnessSalt, static_cast<std::uint64_t>(d),
                             static_cast<std::uint64_t>(i)});
      const int rank = 1 + (i % d);
      const DensityMatrix rho = random_mixed(d, rank, rng);
      const double tf = t_fidelity(rho).value;

      // The w1 expectation is minus the fidelity measure.
      {
        const Witness w1 = witness_w1(d);
        const DetectionResult det = evaluate_witness(w1, rho);
        ck.require_close("W1.fidelity_identity", d, i, "", det.expectation,
                         -tf, id_tol);
        ck.require_close("W1.derived_tf", d, i, "", *det.derived_tf, tf,
                         id_tol);
      }

      // Universal construction: zero law and a working certificate.
      {
        const HermitianOperator a = random_hermitian(d, rng);
        const Witness w = universal_witness(a);
        ck.require_close("W.universal_zero_law", d, i, "",
                         expectation(w.op, f1), 0.0, id_tol);
        const DetectionResult det = evaluate_witness(w, w.worst_case_state());
        ck.require_le("W.universal_ground_detected", d, i, "",
                      det.detected ? 0.0 : 1.0, 0.0, 0.5);
      }

      // Theta family: threshold equivalence and derived tF round-trip.
      {
        const double theta =
            cfg.theta_grid.empty()
                ? 0.0
                : cfg.theta_grid[i % cfg.theta_grid.size()];
        if (theta != 0.0) {
          const Witness wt = witness_theta(d, theta);
          const double tau = theta_threshold(theta);
          const DetectionResult det = evaluate_witness(wt, rho);
          ck.require_close("Wtheta.tf_roundtrip", d, i, "theta=" + fmt_g(theta),
                           *det.derived_tf, tf, 1e-10);
          if (std::abs(tf - tau) > 1e-9) {
            const bool should_detect = tf > tau;
            ck.require_le("Wtheta.threshold_equivalence", d, i,
                          "theta=" + fmt_g(theta) + ",tau=" + fmt_g(tau) +
                              ",tf=" + fmt_g(tf),
                          det.detected == should_detect ? 0.0 : 1.0, 0.0, 0.5);
          }
          // Boundary sweep: states placed at tau +/- 1e-6 flip detection.
          const DensityMatrix hot = hot_state(d).density();
          for (double side : {-1.0, 1.0}) {
            const double t = tau + side * 1e-6;
            if (t < 0.0 || t > 1.0) continue;
            const DensityMatrix probe = mix_states(t, hot, f1);
            const DetectionResult pd = evaluate_witness(wt, probe);
            ck.require_le("Wtheta.boundary_flip", d, i,
                          "theta=" + fmt_g(theta) + ",side=" + fmt_g(side),
                          pd.detected == (side > 0.0) ? 0.0 : 1.0, 0.0, 0.5);
          }
        }
      }

      // jk witness: free-state zero, canonical detected value, diagonal
      // state value.
      {
        const int j = rng.uniform_int(d);
        int k = rng.uniform_int(d - 1);
        if (k >= j) ++k;
        const double phi = rng.uniform(1e-3, 2.0 * kPi - 1e-3);
        const Witness wjk = witness_jk(d, j, k, phi);
        const std::string params = "j=" + std::to_string(j) +
                                   ",k=" + std::to_string(k) +
                                   ",phi=" + fmt_g(phi);
        ck.require_close("Wjk.free_zero", d, i, params,
                         evaluate_witness(wjk, f1).expectation, 0.0, id_tol);
        // Canonical detected state: the superposition whose jk matrix
        // element is e^{i phi}/2, i.e. psi_k = e^{-i phi}/sqrt(2).
        std::vector<cplx> psi(d);
        psi[j] = cplx(1.0 / std::sqrt(2.0), 0.0);
        psi[k] = cplx(std::cos(phi), -std::sin(phi)) / std::sqrt(2.0);
        const DensityMatrix canonical = PureState::checked(psi).density();
        ck.require_close("Wjk.canonical_value", d, i, params,
                         evaluate_witness(wjk, canonical).expectation,
                         2.0 * std::cos(phi) / d - 1.0, id_tol);
        ck.require_close("Wjk.diagonal_value", d, i, params,
                         evaluate_witness(wjk, maximally_mixed(d)).expectation,
                         2.0 * std::cos(phi) / d, id_tol);
        // General identity on the sampled state:
        // Tr(W sigma) = 2cos(phi)/d - 2 Re(e^{-i phi} sigma_jk).
        ck.require_close(
            "Wjk.general_identity", d, i, params,
            evaluate_witness(wjk, rho).expectation,
            2.0 * std::cos(phi) / d -
                2.0 * (cplx(std::cos(phi), -std::sin(phi)) *
                       rho.matrix()(j, k))
                          .real(),
            id_tol);
      }

      // Imaginarity pair: exact sign identities and detection equivalence.
      {
        const int j = rng.uniform_int(d);
        int k = rng.uniform_int(d - 1);
        if (k >= j) ++k;
        const double im = rho.matrix()(j, k).imag();
        const std::string params =
            "j=" + std::to_string(j) + ",k=" + std::to_string(k);
        const Witness wp = imaginarity_witness(d, j, k, +1);
        const Witness wm = imaginarity_witness(d, j, k, -1);
        const double ep = evaluate_witness(wp, rho).expectation;
        const double em = evaluate_witness(wm, rho).expectation;
        ck.require_close("Wimag.plus_identity", d, i, params, ep, -2.0 * im,
                         id_tol);
        ck.require_close("Wimag.minus_identity", d, i, params, em, 2.0 * im,
                         id_tol);
        if (std::abs(im) > 1e-9) {
          ck.require_le("Wimag.plus_detects_positive_im", d, i, params,
                        ((ep < -kDetectTol) == (im > 0.0)) ? 0.0 : 1.0, 0.0,
                        0.5);
          ck.require_le("Wimag.minus_detects_negative_im", d, i, params,
                        ((em < -kDetectTol) == (im < 0.0)) ? 0.0 : 1.0, 0.0,
                        0.5);
        }
      }
    }
  }
  return ck.finish();
}

PropertyReport run_purity_control(const SuiteConfig& cfg) {
  cfg.validate();
  Checker ck("purity_control", cfg);
  long breaks = 0;
  for (int d : cfg.dims) {
    for (int i = 0; i < cfg.samples_per_dim; ++i) {
      Rng rng = Rng::derive(cfg.seed,
                            {kControlSalt, static_cast<std::uint64_t>(d),
                             static_cast<std::uint64_t>(i)});
      // Mixed inputs only: replacement onto a pure state cannot raise
      // purity above 1.
      const int rank = 2 + (i % std::max(d - 1, 1));
      const DensityMatrix rho = random_mixed(d, std::min(rank, d), rng);
      const double p0 = purity(rho);
      const KrausChannel channels[] = {
          f1_replacement_channel(d),
          random_texture_free_channel(d, 1 + (i % 3), rng)};
      for (const KrausChannel& ch : channels) {
        ++ck.report().checks_run;
        if (purity(apply(ch, rho)) > p0 + cfg.tolerance) ++breaks;
      }
    }
  }
  ck.report().control_breaks = breaks;
  ck.warn("purity_t2_breaks=" + std::to_string(breaks));
  if (breaks == 0 && ck.report().checks_run > 0) {
    ck.require_le("purity.control_must_break_monotonicity", 0, 0, "", 1.0, 0.0, 0.5);
  }
  return ck.finish();
}

std::vector<PropertyReport> run_all(const SuiteConfig& cfg) {
  std::vector<PropertyReport> out;
  out.push_back(run_axiom_suite(cfg));
  out.push_back(run_proposition_suite(cfg));
  out.push_back(run_witness_suite(cfg));
  out.push_back(run_purity_control(cfg));
  return out;
}

bool all_passed(const std::vector<PropertyReport>& reports) {
  for (const PropertyReport& r : reports) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace qtex
