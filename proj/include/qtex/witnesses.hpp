// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "qtex/states.hpp"

namespace qtex {

inline constexpr double kDetectTol = 1e-10;

enum class WitnessFamily {
  universal,    // Delta_T(A) - A for a chosen Hermitian A
  w1,           // f1 - I
  theta,        // cos(theta) I + sin(theta) G
  jk_phase,     // (2 cos(phi)/d) I - (e^{i phi}|j><k| + h.c.)
  imaginarity,  // jk_phase at phi = pi/2 (sign +) or 3 pi/2 (sign -)
};

const char* witness_family_name(WitnessFamily f);

/// Hermitian operator with a nonnegative free-state expectation and a
/// strictly negative bottom eigenvalue. The ground eigenvector is kept as
/// the worst-case detected state.
struct Witness {
  int dim = 0;
  HermitianOperator op;
  WitnessFamily family = WitnessFamily::universal;

  std::optional<double> theta;
  std::optional<double> phi;
  std::optional<int> j, k;
  std::optional<int> sign;  // +1 / -1 for the imaginarity pair

  // certificate
  double free_expectation = 0.0;
  double min_eigenvalue = 0.0;
  PureState ground_state;

  /// Projector onto the ground eigenvector: a state this witness detects.
  DensityMatrix worst_case_state() const { return ground_state.density(); }
};

struct DetectionResult {
  double expectation = 0.0;
  bool detected = false;
  /// |expectation| within kDetectTol of zero: reported undetected.
  bool boundary = false;
  WitnessFamily family = WitnessFamily::universal;
  std::optional<double> derived_tf;
};

/// W = Delta_T(A) - A. Free expectation is identically zero; throws
/// WitnessError when lambda_min(W) >= -1e-10 (e.g. A proportional to f1),
/// since such a W detects no state.
Witness universal_witness(const HermitianOperator& a);

/// W1 = f1 - I; detects every textured state, expectation = -tF.
Witness witness_w1(int d);

/// G = 2 f1 - I; involution with +1 exactly on |f1>.
HermitianOperator generator_g(int d);

/// W_theta = cos(theta) I + sin(theta) G, theta in (pi/4, 3pi/4].
Witness witness_theta(int d, double theta);

/// W^{jk}_phi, 0 <= j != k < d, phi in (0, 2pi).
Witness witness_jk(int d, int j, int k, double phi);

/// sign=+1 -> phi = pi/2 (detects Im sigma_jk > 0);
/// sign=-1 -> phi = 3pi/2 (detects Im sigma_jk < 0).
Witness imaginarity_witness(int d, int j, int k, int sign);

DetectionResult evaluate_witness(const Witness& w, const DensityMatrix& rho);

/// Inverts a theta-witness expectation to the fidelity measure:
/// tF = (cos(theta) + sin(theta) - expectation) / (2 sin(theta)).
double tf_from_theta(double expectation, double theta);

/// Detection threshold tau(theta) = (cos(theta)+sin(theta)) / (2 sin(theta)):
/// Tr(W_theta rho) < 0 iff tF(rho) > tau(theta).
double theta_threshold(double theta);

}  // namespace qtex
