// SPDX-License-Identifier: Apache-2.0
//
// Reference implementations of the dense complex kernels. Every other
// backend is equivalence-tested against these.

#include <algorithm>
#include <cmath>

#include "kernels_tables.hpp"

namespace qtex::kernels::scalar {

void gemm_nn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  std::fill(c, c + static_cast<long>(m) * n, cplx{});
  for (int i = 0; i < m; ++i) {
    for (int l = 0; l < k; ++l) {
      const cplx av = a[static_cast<long>(i) * k + l];
      const cplx* brow = b + static_cast<long>(l) * n;
      cplx* crow = c + static_cast<long>(i) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void gemm_nh(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i) {
    const cplx* arow = a + static_cast<long>(i) * k;
    for (int j = 0; j < n; ++j) {
      const cplx* brow = b + static_cast<long>(j) * k;
      cplx acc{};
      for (int l = 0; l < k; ++l) acc += arow[l] * std::conj(brow[l]);
      c[static_cast<long>(i) * n + j] = acc;
    }
  }
}

void matvec(const cplx* a, const cplx* x, cplx* y, int m, int n) {
  for (int i = 0; i < m; ++i) {
    const cplx* arow = a + static_cast<long>(i) * n;
    cplx acc{};
    for (int j = 0; j < n; ++j) acc += arow[j] * x[j];
    y[i] = acc;
  }
}

cplx dot_conj(const cplx* x, const cplx* y, int n) {
  cplx acc{};
  for (int i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

cplx sum(const cplx* x, int n) {
  cplx acc{};
  for (int i = 0; i < n; ++i) acc += x[i];
  return acc;
}

void axpby(cplx alpha, const cplx* x, cplx beta, const cplx* y, cplx* out,
           int n) {
  for (int i = 0; i < n; ++i) out[i] = alpha * x[i] + beta * y[i];
}

void scale_cols(const cplx* v, const double* s, cplx* out, int m, int n) {
  for (int i = 0; i < m; ++i) {
    const cplx* vrow = v + static_cast<long>(i) * n;
    cplx* orow = out + static_cast<long>(i) * n;
    for (int j = 0; j < n; ++j) orow[j] = vrow[j] * s[j];
  }
}

double max_abs_diff(const cplx* x, const cplx* y, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx d = x[i] - y[i];
    const double m2 = d.real() * d.real() + d.imag() * d.imag();
    worst = std::max(worst, m2);
  }
  return std::sqrt(worst);
}

double max_abs(const cplx* x, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double m2 = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    worst = std::max(worst, m2);
  }
  return std::sqrt(worst);
}

const OpTable kTable = {gemm_nn, gemm_nh, matvec,     dot_conj,     sum,
                        axpby,   scale_cols, max_abs_diff, max_abs};

}  // namespace qtex::kernels::scalar
