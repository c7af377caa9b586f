// SPDX-License-Identifier: Apache-2.0

#include "qtex/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qtex/errors.hpp"

namespace qtex {

KrausChannel KrausChannel::checked(std::vector<ComplexMatrix> kraus_ops,
                                   std::vector<std::string> labels,
                                   double tol) {
  if (kraus_ops.empty()) throw ValidationError("channel needs >= 1 Kraus op");
  const int d = kraus_ops.front().rows();
  for (const ComplexMatrix& k : kraus_ops) {
    if (k.rows() != d || k.cols() != d)
      throw DimensionError("Kraus ops must all be d x d");
    if (!k.all_finite())
      throw ValidationError("Kraus op has non-finite entries");
  }
  ComplexMatrix acc(d, d);
  for (const ComplexMatrix& k : kraus_ops) {
    acc = acc + k.adjoint() * k;
  }
  const double res = max_abs_diff(acc, ComplexMatrix::identity(d));
  if (res > tol) {
    throw ValidationError("Kraus completeness violated: residual " +
                          std::to_string(res));
  }
  KrausChannel ch;
  ch.kraus_ = std::move(kraus_ops);
  ch.labels_ = std::move(labels);
  return ch;
}

DensityMatrix apply(const KrausChannel& phi, const DensityMatrix& rho) {
  const int d = rho.dim();
  if (phi.dim() != d) throw DimensionError("channel/state dimension mismatch");
  ComplexMatrix out(d, d);
  for (const ComplexMatrix& k : phi.kraus()) {
    out = out + multiply_adjoint(k * rho.matrix(), k);
  }
  const double tr = out.trace().real();
  if (std::abs(tr - 1.0) > 1e-9) {
    throw ValidationError("non-trace-preserving channel: output trace " +
                          std::to_string(tr));
  }
  out = cplx(1.0 / tr, 0.0) * out;
  return DensityMatrix::checked(HermitianOperator::symmetrized(std::move(out)));
}

TextureFreeReport is_texture_free(const KrausChannel& phi, double tol) {
  const int d = phi.dim();
  const std::vector<cplx> f1 = free_state_vector(d);
  TextureFreeReport rep;
  for (int n = 0; n < phi.size(); ++n) {
    const std::vector<cplx> y = matvec(phi.kraus()[n], f1);
    cplx alpha{};
    for (int i = 0; i < d; ++i) alpha += std::conj(f1[i]) * y[i];
    double r2 = 0.0;
    for (int i = 0; i < d; ++i) r2 += std::norm(y[i] - alpha * f1[i]);
    const double r = std::sqrt(r2);
    rep.alphas.push_back(alpha);
    rep.residuals.push_back(r);
    rep.max_residual = std::max(rep.max_residual, r);
    if (std::abs(alpha) <= 1e-12) rep.zero_alpha_indices.push_back(n);
  }
  rep.texture_free = rep.max_residual <= tol;
  return rep;
}

KrausChannel random_texture_free_unitary_mix(int d, int n_terms, Rng& rng) {
  if (n_terms < 1) throw DomainError("need n_terms >= 1");
  // Dirichlet(1,...,1) weights: exponential draws, normalized.
  std::vector<double> p(n_terms);
  double total = 0.0;
  for (double& w : p) {
    w = -std::log(1.0 - rng.uniform01());
    total += w;
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(n_terms);
  for (int m = 0; m < n_terms; ++m) {
    const double w = std::sqrt(p[m] / total);
    kraus.push_back(cplx(w, 0.0) * random_f1_fixing_unitary(d, rng));
  }
  return KrausChannel::checked(std::move(kraus));
}

KrausChannel random_texture_free_channel(int d, int env_dim, Rng& rng,
                                         int max_dim) {
  if (env_dim < 1) throw DomainError("need env_dim >= 1");
  const long dm = static_cast<long>(d) * env_dim;
  if (dm > max_dim)
    throw DimensionError("dilation dimension " + std::to_string(dm) +
                         " exceeds cap " + std::to_string(max_dim));

  const std::vector<cplx> f1 = free_state_vector(d);
  const PureState chi = random_pure(env_dim, rng);

  // Isometry columns in the rotated input basis {|f1>, R|1>, ...}:
  // column 0 is |f1> (x) |chi|, the rest are a random orthonormal completion.
  ComplexMatrix w(static_cast<int>(dm), d);
  for (int i = 0; i < d; ++i)
    for (int n = 0; n < env_dim; ++n)
      w(i * env_dim + n, 0) = f1[i] * chi[n];

  for (int j = 1; j < d; ++j) {
    for (int attempt = 0;; ++attempt) {
      for (int i = 0; i < dm; ++i) w(i, j) = rng.complex_gaussian();
      for (int pass = 0; pass < 2; ++pass) {
        for (int p = 0; p < j; ++p) {
          cplx proj{};
          for (int i = 0; i < dm; ++i) proj += std::conj(w(i, p)) * w(i, j);
          for (int i = 0; i < dm; ++i) w(i, j) -= proj * w(i, p);
        }
      }
      double n2 = 0.0;
      for (int i = 0; i < dm; ++i) n2 += std::norm(w(i, j));
      if (n2 > 1e-12) {
        const double inv = 1.0 / std::sqrt(n2);
        for (int i = 0; i < dm; ++i) w(i, j) *= inv;
        break;
      }
      if (attempt >= 2)
        throw NumericalError("isometry completion failed: dependent columns");
    }
  }

  // Back to the computational input basis: V = W R^dagger.
  const ComplexMatrix v = multiply_adjoint(w, dft_rotation(d));

  std::vector<ComplexMatrix> kraus;
  kraus.reserve(env_dim);
  for (int n = 0; n < env_dim; ++n) {
    ComplexMatrix k(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) k(i, j) = v(i * env_dim + n, j);
    kraus.push_back(std::move(k));
  }
  return KrausChannel::checked(std::move(kraus));
}

KrausChannel f1_replacement_channel(int d) {
  const std::vector<cplx> f1 = free_state_vector(d);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(d);
  for (int n = 0; n < d; ++n) {
    ComplexMatrix k(d, d);
    for (int i = 0; i < d; ++i) k(i, n) = f1[i];
    kraus.push_back(std::move(k));
  }
  return KrausChannel::checked(std::move(kraus), {"f1-replacement"});
}

HermitianOperator detexture(const HermitianOperator& a) {
  const int d = a.dim();
  // <f1|A|f1> = (sum of entries)/d, real for Hermitian A.
  const double w = (entry_sum(a.matrix()) / static_cast<double>(d)).real();
  ComplexMatrix m(d, d);
  const double v = w / d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = v;
  return HermitianOperator::checked(std::move(m));
}

}  // namespace qtex
