// SPDX-License-Identifier: Apache-2.0
//
// AVX2+FMA backend. Complex doubles are processed two at a time as one
// __m256d [re0, im0, re1, im1]. The complex product (ar+i*ai)(br+i*bi) is
// formed as fmaddsub(ar, b, ai*swap(b)), which yields
// [ar*br - ai*bi, ar*bi + ai*br] per lane pair.

#include "kernels_tables.hpp"

#if defined(QTEX_HAVE_AVX2)
#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace qtex::kernels::avx2 {

namespace {

inline const double* dp(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

// [re0, im0, re1, im1] -> [im0, re0, im1, re1]
inline __m256d swap_ri(__m256d v) { return _mm256_permute_pd(v, 0x5); }

// Elementwise complex product of two packed pairs.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d are = _mm256_movedup_pd(a);          // [ar0, ar0, ar1, ar1]
  const __m256d aim = _mm256_permute_pd(a, 0xF);      // [ai0, ai0, ai1, ai1]
  return _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, swap_ri(b)));
}

// Horizontal sum of the two packed complex lanes.
inline cplx reduce_c(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

inline double reduce_max(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

}  // namespace

void gemm_nn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  std::fill(c, c + static_cast<long>(m) * n, cplx{});
  for (int i = 0; i < m; ++i) {
    double* crow = dp(c + static_cast<long>(i) * n);
    for (int l = 0; l < k; ++l) {
      const cplx av = a[static_cast<long>(i) * k + l];
      const __m256d ar = _mm256_set1_pd(av.real());
      const __m256d ai = _mm256_set1_pd(av.imag());
      const double* brow = dp(b + static_cast<long>(l) * n);
      int j = 0;
      for (; j + 2 <= n; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d prod =
            _mm256_fmaddsub_pd(ar, bv, _mm256_mul_pd(ai, swap_ri(bv)));
        const __m256d cv = _mm256_add_pd(_mm256_loadu_pd(crow + 2 * j), prod);
        _mm256_storeu_pd(crow + 2 * j, cv);
      }
      if (j < n) {
        c[static_cast<long>(i) * n + j] += av * b[static_cast<long>(l) * n + j];
      }
    }
  }
}

namespace {

// sum_l x_l * conj(y_l): shared core of gemm_nh.
inline cplx dot_b_conj(const cplx* x, const cplx* y, int n) {
  // conj(y)*x: re parts accumulate x*y with +,+; im parts accumulate
  // swap(y)*x with signs [-, +] so each pair contributes yr*xi - yi*xr.
  const __m256d neg_even = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const double* xd = dp(x);
  const double* yd = dp(y);
  int i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    const __m256d t = _mm256_mul_pd(swap_ri(yv), xv);
    acc_im = _mm256_add_pd(acc_im, _mm256_xor_pd(t, neg_even));
  }
  // acc_re lanes: [xr*yr, xi*yi, ...] -> re = total sum.
  // acc_im lanes: [-(yi*xr), yr*xi, ...] -> im = total sum.
  const cplx sre = reduce_c(acc_re);
  const cplx sim = reduce_c(acc_im);
  cplx out{sre.real() + sre.imag(), sim.real() + sim.imag()};
  for (; i < n; ++i) out += x[i] * std::conj(y[i]);
  return out;
}

}  // namespace

void gemm_nh(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i) {
    const cplx* arow = a + static_cast<long>(i) * k;
    for (int j = 0; j < n; ++j) {
      c[static_cast<long>(i) * n + j] =
          dot_b_conj(arow, b + static_cast<long>(j) * k, k);
    }
  }
}

void matvec(const cplx* a, const cplx* x, cplx* y, int m, int n) {
  for (int i = 0; i < m; ++i) {
    const cplx* arow = a + static_cast<long>(i) * n;
    __m256d acc = _mm256_setzero_pd();
    int j = 0;
    for (; j + 2 <= n; j += 2) {
      const __m256d av = _mm256_loadu_pd(dp(arow + j));
      const __m256d xv = _mm256_loadu_pd(dp(x + j));
      acc = _mm256_add_pd(acc, cmul(av, xv));
    }
    cplx s = reduce_c(acc);
    for (; j < n; ++j) s += arow[j] * x[j];
    y[i] = s;
  }
}

cplx dot_conj(const cplx* x, const cplx* y, int n) {
  // conj(x)*y: re = xr*yr + xi*yi, im = xr*yi - xi*yr.
  const __m256d neg_even = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const double* xd = dp(x);
  const double* yd = dp(y);
  int i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    const __m256d t = _mm256_mul_pd(swap_ri(xv), yv);
    acc_im = _mm256_add_pd(acc_im, _mm256_xor_pd(t, neg_even));
  }
  const cplx sre = reduce_c(acc_re);
  const cplx sim = reduce_c(acc_im);
  cplx out{sre.real() + sre.imag(), sim.real() + sim.imag()};
  for (; i < n; ++i) out += std::conj(x[i]) * y[i];
  return out;
}

cplx sum(const cplx* x, int n) {
  __m256d acc = _mm256_setzero_pd();
  const double* xd = dp(x);
  int i = 0;
  for (; i + 2 <= n; i += 2) acc = _mm256_add_pd(acc, _mm256_loadu_pd(xd + 2 * i));
  cplx s = reduce_c(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

void axpby(cplx alpha, const cplx* x, cplx beta, const cplx* y, cplx* out,
           int n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const __m256d br = _mm256_set1_pd(beta.real());
  const __m256d bi = _mm256_set1_pd(beta.imag());
  const double* xd = dp(x);
  const double* yd = dp(y);
  double* od = dp(out);
  int i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    const __m256d t1 =
        _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, swap_ri(xv)));
    const __m256d t2 =
        _mm256_fmaddsub_pd(br, yv, _mm256_mul_pd(bi, swap_ri(yv)));
    _mm256_storeu_pd(od + 2 * i, _mm256_add_pd(t1, t2));
  }
  for (; i < n; ++i) out[i] = alpha * x[i] + beta * y[i];
}

void scale_cols(const cplx* v, const double* s, cplx* out, int m, int n) {
  for (int i = 0; i < m; ++i) {
    const double* vrow = dp(v + static_cast<long>(i) * n);
    double* orow = dp(out + static_cast<long>(i) * n);
    int j = 0;
    for (; j + 2 <= n; j += 2) {
      const __m256d sv = _mm256_set_pd(s[j + 1], s[j + 1], s[j], s[j]);
      const __m256d vv = _mm256_loadu_pd(vrow + 2 * j);
      _mm256_storeu_pd(orow + 2 * j, _mm256_mul_pd(vv, sv));
    }
    if (j < n) {
      out[static_cast<long>(i) * n + j] =
          v[static_cast<long>(i) * n + j] * s[j];
    }
  }
}

double max_abs_diff(const cplx* x, const cplx* y, int n) {
  __m256d worst = _mm256_setzero_pd();
  const double* xd = dp(x);
  const double* yd = dp(y);
  int i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(xd + 2 * i), _mm256_loadu_pd(yd + 2 * i));
    const __m256d sq = _mm256_mul_pd(d, d);
    worst = _mm256_max_pd(worst, _mm256_hadd_pd(sq, sq));
  }
  double w = reduce_max(worst);
  for (; i < n; ++i) {
    const cplx d = x[i] - y[i];
    w = std::max(w, d.real() * d.real() + d.imag() * d.imag());
  }
  return std::sqrt(w);
}

double max_abs(const cplx* x, int n) {
  __m256d worst = _mm256_setzero_pd();
  const double* xd = dp(x);
  int i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(xd + 2 * i);
    const __m256d sq = _mm256_mul_pd(v, v);
    worst = _mm256_max_pd(worst, _mm256_hadd_pd(sq, sq));
  }
  double w = reduce_max(worst);
  for (; i < n; ++i) {
    w = std::max(w, x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
  }
  return std::sqrt(w);
}

const OpTable kTable = {gemm_nn, gemm_nh, matvec,     dot_conj,     sum,
                        axpby,   scale_cols, max_abs_diff, max_abs};
const bool kCompiled = true;

}  // namespace qtex::kernels::avx2

#else  // !QTEX_HAVE_AVX2

namespace qtex::kernels::avx2 {
const OpTable kTable = {};
const bool kCompiled = false;
}  // namespace qtex::kernels::avx2

#endif
