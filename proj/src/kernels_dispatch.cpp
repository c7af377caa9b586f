// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "kernels_tables.hpp"
#include "qtex/errors.hpp"
#include "qtex/kernels.hpp"

namespace qtex::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(QTEX_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect_backend() {
  if (const char* env = std::getenv("QTEX_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2::kCompiled && cpu_has_avx2())
      return Backend::avx2;
    // anything else (incl. "auto") falls through to detection
  }
  return (avx2::kCompiled && cpu_has_avx2()) ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend> g_backend{detect_backend()};

}  // namespace

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return avx2::kCompiled && cpu_has_avx2();
  }
  return false;
}

const OpTable& ops(Backend b) {
  return b == Backend::avx2 ? avx2::kTable : scalar::kTable;
}

const OpTable& ops() { return ops(g_backend.load(std::memory_order_relaxed)); }

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b))
    throw Error(std::string("kernel backend unavailable: ") + backend_name(b));
  g_backend.store(b, std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "?";
}

}  // namespace qtex::kernels
