// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "qtex/states.hpp"

namespace qtex {

/// Parameter pair for the generalized Renyi family: alpha in (0,1) and
/// z >= max(alpha, 1-alpha).
struct AlphaZParams {
  double alpha = 0.5;
  double z = 0.5;

  static AlphaZParams checked(double alpha, double z);
};

enum class MeasureId {
  grenyi,    // tGR
  rugosity,  // tSR
  fidelity,  // tF
  tracedist, // tTr
  weight,    // tw
  renyi,     // tR
  bures,     // tBures
  tsallis,   // tTsallis
};

const char* measure_name(MeasureId id);

/// A computed measure with its parameters. Divergent rugosity is +inf.
struct MeasureValue {
  double value = 0.0;
  MeasureId id = MeasureId::fidelity;
  std::optional<double> alpha;
  std::optional<double> z;
  std::optional<double> mu;

  bool infinite() const;
  std::string params_string() const;
};

/// Spectral data of a state reused across parameter grids: eigenvalues and
/// the weights |<f1|v_i>|^2, so each (alpha, z) evaluation is O(d).
struct StateSpectrum {
  int dim = 0;
  std::vector<double> eigenvalues;  // ascending, clamped at >= 0
  std::vector<double> f1_weights;   // |<f1|v_i>|^2
};

StateSpectrum spectrum(const DensityMatrix& rho);

/// <f1|rho|f1> via the entry sum.
double overlap(const DensityMatrix& rho);

/// Simplified inner-product form (<f1|rho^{(1-alpha)/z}|f1>)^z.
double f_alpha_z(const StateSpectrum& s, AlphaZParams p);
double f_alpha_z(const DensityMatrix& rho, AlphaZParams p);

/// Independent route: Tr[(rho^{(1-alpha)/2z} f1 rho^{(1-alpha)/2z})^z] formed
/// with explicit matrix products and a fresh eigendecomposition. Must agree
/// with the simplified form within 1e-8.
double f_alpha_z_trace_form(const DensityMatrix& rho, AlphaZParams p);

MeasureValue t_gr(const StateSpectrum& s, AlphaZParams p);
MeasureValue t_gr(const DensityMatrix& rho, AlphaZParams p);

MeasureValue t_rugosity(const DensityMatrix& rho);
MeasureValue t_fidelity(const DensityMatrix& rho);
MeasureValue t_trace(const DensityMatrix& rho);
MeasureValue t_weight(const DensityMatrix& rho);

/// Sandwiched-Renyi measure, alpha in [1/2, 1).
MeasureValue t_renyi(const StateSpectrum& s, double alpha);
MeasureValue t_renyi(const DensityMatrix& rho, double alpha);

MeasureValue t_bures(const DensityMatrix& rho);
MeasureValue t_tsallis(const DensityMatrix& rho, double mu);

/// Feasibility-bisection oracle for the weight measure: largest lambda with
/// rho - lambda*f1 PSD, found by bisection on [0,1] with the eigenvalue
/// feasibility test lambda_min >= -1e-12 (60 iterations).
double t_weight_bisection(const DensityMatrix& rho);

/// alpha-z Renyi relative entropy D(tau||sigma), base-2 logarithm, via the
/// full trace form; +inf on vanishing trace functional.
double d_alpha_z(const DensityMatrix& tau, const DensityMatrix& sigma,
                 AlphaZParams p);

/// Tr rho^2. Not a texture measure (fails monotonicity); used by the
/// harness as an adversarial control.
double purity(const DensityMatrix& rho);

}  // namespace qtex
