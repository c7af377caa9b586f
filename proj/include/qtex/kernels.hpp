// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace qtex::kernels {

using cplx = std::complex<double>;

/// Instruction-set backends for the dense complex kernels. `scalar` is the
/// portable reference; `avx2` requires both compile-time support and a CPU
/// that advertises AVX2+FMA.
enum class Backend { scalar, avx2 };

/// Function table for the data-parallel inner loops. All buffers are
/// row-major interleaved std::complex<double>; output buffers must not
/// alias inputs unless noted.
struct OpTable {
  /// C(m,n) = A(m,k) * B(k,n)
  void (*gemm_nn)(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);
  /// C(m,n) = A(m,k) * B^dagger with B stored as (n,k)
  void (*gemm_nh)(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);
  /// y(m) = A(m,n) * x(n)
  void (*matvec)(const cplx* a, const cplx* x, cplx* y, int m, int n);
  /// sum_i conj(x_i) * y_i
  cplx (*dot_conj)(const cplx* x, const cplx* y, int n);
  /// sum_i x_i
  cplx (*sum)(const cplx* x, int n);
  /// out = alpha*x + beta*y; out may alias x or y
  void (*axpby)(cplx alpha, const cplx* x, cplx beta, const cplx* y, cplx* out,
                int n);
  /// out(m,n) = V(m,n) * diag(s), s real of length n; out may alias V
  void (*scale_cols)(const cplx* v, const double* s, cplx* out, int m, int n);
  /// max_i |x_i - y_i| (complex modulus)
  double (*max_abs_diff)(const cplx* x, const cplx* y, int n);
  /// max_i |x_i|
  double (*max_abs)(const cplx* x, int n);
};

/// Active table, chosen once at startup: best available backend, or the one
/// named in QTEX_SIMD (scalar | avx2 | auto).
const OpTable& ops();

/// Table for an explicit backend (for equivalence tests).
const OpTable& ops(Backend b);

Backend active_backend();
bool backend_available(Backend b);
/// Force a backend globally. Throws qtex::Error if unavailable.
void set_backend(Backend b);
const char* backend_name(Backend b);

}  // namespace qtex::kernels
