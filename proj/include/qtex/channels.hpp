// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "qtex/states.hpp"

namespace qtex {

inline constexpr double kCompletenessTol = 1e-9;
inline constexpr double kFreeResidualTol = 1e-9;

/// CPTP map in Kraus form: Phi(rho) = sum_n K_n rho K_n^dagger.
class KrausChannel {
 public:
  KrausChannel() = default;

  /// Validates shapes and completeness ||sum K^dagger K - I||_max <= tol.
  static KrausChannel checked(std::vector<ComplexMatrix> kraus_ops,
                              std::vector<std::string> labels = {},
                              double tol = kCompletenessTol);

  int dim() const { return kraus_.empty() ? 0 : kraus_.front().rows(); }
  int size() const { return static_cast<int>(kraus_.size()); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<ComplexMatrix> kraus_;
  std::vector<std::string> labels_;
};

/// Per-Kraus diagnostics of the free-operation condition
/// K_n |f1> = alpha_n |f1>.
struct TextureFreeReport {
  bool texture_free = false;
  double max_residual = 0.0;
  std::vector<double> residuals;        // || K_n|f1> - alpha_n|f1> ||_2
  std::vector<cplx> alphas;             // alpha_n = <f1|K_n|f1>
  std::vector<int> zero_alpha_indices;  // |alpha_n| <= 1e-12, allowed but flagged
};

/// Applies the channel; trace drift beyond 1e-9 is an error, smaller drift
/// is renormalized away.
DensityMatrix apply(const KrausChannel& phi, const DensityMatrix& rho);

TextureFreeReport is_texture_free(const KrausChannel& phi,
                                  double tol = kFreeResidualTol);

/// Kraus ops sqrt(p_m) U_m with random simplex weights and f1-fixing U_m.
KrausChannel random_texture_free_unitary_mix(int d, int n_terms, Rng& rng);

/// General free operation from a random isometry V : H_d -> H_d (x) H_m with
/// V|f1> = |f1> (x) |chi>; Kraus ops K_n = (I (x) <n|) V satisfy
/// K_n|f1> = chi_n |f1>.
KrausChannel random_texture_free_channel(int d, int env_dim, Rng& rng,
                                         int max_dim = kMaxDim);

/// K_n = |f1><n|: maps every state to the free state. Texture-free, and
/// strictly purity-increasing on mixed inputs (the harness control relies
/// on that).
KrausChannel f1_replacement_channel(int d);

/// Delta_T(A) = <f1|A|f1> f1; rank <= 1, proportional to the free state.
HermitianOperator detexture(const HermitianOperator& a);

}  // namespace qtex
