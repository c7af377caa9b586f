// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "qtex/measures.hpp"

namespace qtex {

/// Sampling plan for a verification suite. Every sampled object derives its
/// stream from (seed, dim, sample index), so any violation can be replayed
/// in isolation.
struct SuiteConfig {
  std::vector<int> dims{2, 3, 4, 5, 6};
  int samples_per_dim = 200;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;

  /// alpha values for the generalized-Renyi grid; the sandwiched-Renyi grid
  /// is the subset in [1/2, 1).
  std::vector<double> alpha_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  /// z values; for each alpha the admissible subset plus max(alpha, 1-alpha)
  /// itself is used.
  std::vector<double> z_grid{0.75, 1.0, 1.5, 2.0};
  std::vector<double> theta_grid{0.8, 1.2, std::numbers::pi / 2, 2.0,
                                 3 * std::numbers::pi / 4};
  std::vector<double> mu_grid{0.1, 0.3, 0.5, 0.7, 0.9};

  bool skip_infinite = true;
  int max_dim = kMaxDim;

  static SuiteConfig defaults();
  /// Throws DomainError on out-of-range fields.
  void validate() const;
  /// Admissible z list for one alpha: {max(alpha,1-alpha)} + grid filter.
  std::vector<double> z_values(double alpha) const;
  std::vector<double> renyi_alphas() const;
};

struct Violation {
  std::string property_id;
  int dim = 0;
  std::uint64_t sample = 0;  // seed offset within (suite, dim)
  std::string params;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // lhs - rhs; violation when slack > tolerance
};

inline constexpr std::size_t kMaxRecordedViolations = 200;

struct PropertyReport {
  std::string suite_id;
  SuiteConfig config;
  long checks_run = 0;
  long skipped_infinite = 0;
  std::size_t total_violations = 0;
  std::vector<Violation> violations;  // first kMaxRecordedViolations
  /// Largest signed slack seen across all finite checks; near-misses are
  /// visible even on a pass.
  double worst_slack = 0.0;
  bool has_slack = false;
  /// Purity-control only: count of observed monotonicity breaks
  /// (expected > 0).
  long control_breaks = 0;
  std::vector<std::string> warnings;
  bool passed = false;
};

/// Non-negativity (and zero at f1), monotonicity under both free-channel
/// generators, and convexity, for every measure in the validated set.
PropertyReport run_axiom_suite(const SuiteConfig& cfg);

/// The inequality/identity families between measures, the weight-oracle
/// agreement, the dual-path trace-form agreement, and a relative-entropy
/// data-processing check.
PropertyReport run_proposition_suite(const SuiteConfig& cfg);

/// Witness invariants: both witness conditions, the universal-construction
/// zero law and non-universality certificate, the W1/fidelity identity, the
/// theta threshold equivalence and boundary flips, and the jk/imaginarity
/// identities.
PropertyReport run_witness_suite(const SuiteConfig& cfg);

/// Adversarial control: purity must violate monotonicity under free
/// channels. The
/// report passes iff violations were observed, proving the machinery can
/// fail.
PropertyReport run_purity_control(const SuiteConfig& cfg);

/// All four suites in order.
std::vector<PropertyReport> run_all(const SuiteConfig& cfg);

bool all_passed(const std::vector<PropertyReport>& reports);

}  // namespace qtex
