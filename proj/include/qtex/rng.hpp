// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qtex {

/// Deterministic random stream: mt19937_64 raw bits, uniform doubles via the
/// 53-bit mantissa shift, gaussians via Box-Muller (two uniforms per draw,
/// spare discarded). Identical seed + call sequence gives an identical
/// stream; substreams for independent samples come from derive().
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Substream keyed by (seed, path...) through a SplitMix64 mix; used by the
  /// harness so sample i of dimension d is reproducible in isolation.
  static Rng derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Uniform on {0, ..., n-1} by rejection.
  int uniform_int(int n);

  /// Standard normal.
  double gaussian();

  /// Independent N(0,1) real and imaginary parts.
  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    return {re, gaussian()};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qtex
