// SPDX-License-Identifier: Apache-2.0

#include "qtex/rng.hpp"

#include <cmath>
#include <numbers>

#include "qtex/errors.hpp"

namespace qtex {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t p : path) h = splitmix64(h ^ p);
  return Rng(h);
}

int Rng::uniform_int(int n) {
  if (n <= 0) throw DomainError("uniform_int needs n >= 1");
  const std::uint64_t bound = ~0ULL - ~0ULL % static_cast<std::uint64_t>(n);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= bound);
  return static_cast<int>(x % static_cast<std::uint64_t>(n));
}

double Rng::gaussian() {
  // u1 in (0,1] keeps the log finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace qtex
