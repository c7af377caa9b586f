// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qtex/errors.hpp"
#include "qtex/measures.hpp"

using namespace qtex;

namespace {

DensityMatrix maximally_mixed(int d) {
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = 1.0 / d;
  return DensityMatrix::checked(std::move(m));
}

/// Pure state orthogonal to |f1| at d = 2.
DensityMatrix anti_free_qubit() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState::checked({cplx(s, 0.0), cplx(-s, 0.0)}).density();
}

const double kAlphaGrid[] = {0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9};

std::vector<AlphaZParams> param_grid() {
  std::vector<AlphaZParams> out;
  for (double a : kAlphaGrid) {
    const double zmin = std::max(a, 1.0 - a);
    for (double z : {zmin, 0.75, 1.0, 1.5, 2.0}) {
      if (z >= zmin) out.push_back(AlphaZParams::checked(a, z));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("AlphaZParams domain") {
  CHECK_NOTHROW(AlphaZParams::checked(0.5, 0.5));
  CHECK_NOTHROW(AlphaZParams::checked(0.1, 0.9));
  CHECK_THROWS_AS(AlphaZParams::checked(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(AlphaZParams::checked(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(AlphaZParams::checked(0.3, 0.6), DomainError);  // z < 1-alpha
  CHECK_THROWS_AS(AlphaZParams::checked(0.8, 0.7), DomainError);  // z < alpha
}

TEST_CASE("overlap") {
  CHECK(overlap(free_state(3)) == doctest::Approx(1.0).epsilon(1e-14));
  for (int d : {2, 3, 4, 5, 6}) {
    CHECK(overlap(basis_state(d, 0).density()) ==
          doctest::Approx(1.0 / d).epsilon(1e-13));
    CHECK(overlap(maximally_mixed(d)) ==
          doctest::Approx(1.0 / d).epsilon(1e-13));
  }
}

TEST_CASE("f_alpha_z closed forms") {
  SUBCASE("free state gives 1") {
    for (int d : {2, 4}) {
      const StateSpectrum s = spectrum(free_state(d));
      for (const AlphaZParams& p : param_grid())
        CHECK(f_alpha_z(s, p) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("maximally mixed: d^(alpha-1), independent of z") {
    for (int d : {2, 3, 5}) {
      const StateSpectrum s = spectrum(maximally_mixed(d));
      for (const AlphaZParams& p : param_grid()) {
        CHECK(f_alpha_z(s, p) ==
              doctest::Approx(std::pow(d, p.alpha - 1.0)).epsilon(1e-12));
      }
    }
  }
  SUBCASE("basis projector at d=2, alpha=z=1/2") {
    CHECK(f_alpha_z(basis_state(2, 0).density(),
                    AlphaZParams::checked(0.5, 0.5)) ==
          doctest::Approx(0.7071067811865476).epsilon(1e-13));
  }
}

TEST_CASE("dual-path agreement of the trace functional") {
  Rng rng(606);
  for (int rep = 0; rep < 40; ++rep) {
    const int d = 2 + rep % 5;
    const DensityMatrix rho = random_mixed(d, 1 + rep % d, rng);
    const StateSpectrum s = spectrum(rho);
    for (const AlphaZParams& p : param_grid()) {
      CHECK(std::abs(f_alpha_z(s, p) - f_alpha_z_trace_form(rho, p)) <= 1e-8);
    }
  }
}

TEST_CASE("t_gr anchors") {
  CHECK(t_gr(free_state(5), AlphaZParams::checked(0.3, 1.0)).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  for (int d : {2, 3, 4}) {
    for (const AlphaZParams& p : param_grid()) {
      CHECK(t_gr(maximally_mixed(d), p).value ==
            doctest::Approx(1.0 - std::pow(d, p.alpha - 1.0)).epsilon(1e-12));
    }
  }
  const MeasureValue v =
      t_gr(basis_state(2, 0).density(), AlphaZParams::checked(0.5, 0.5));
  CHECK(v.value == doctest::Approx(0.29289321881345254).epsilon(1e-12));
  CHECK(v.id == MeasureId::grenyi);
  CHECK(v.params_string() == "alpha=0.5,z=0.5");
}

TEST_CASE("t_rugosity") {
  CHECK(t_rugosity(free_state(4)).value == doctest::Approx(0.0).epsilon(1e-12));
  for (int d : {2, 3, 4, 6}) {
    CHECK(t_rugosity(basis_state(d, 0).density()).value ==
          doctest::Approx(std::log(static_cast<double>(d))).epsilon(1e-12));
  }
  CHECK(t_rugosity(basis_state(2, 0).density()).value ==
        doctest::Approx(0.6931471805599453).epsilon(1e-13));
  const MeasureValue inf_v = t_rugosity(anti_free_qubit());
  CHECK(inf_v.infinite());
  CHECK(std::isinf(inf_v.value));
}

TEST_CASE("t_fidelity") {
  CHECK(t_fidelity(free_state(3)).value == doctest::Approx(0.0).epsilon(1e-12));
  for (int d : {2, 3, 5}) {
    CHECK(t_fidelity(basis_state(d, 0).density()).value ==
          doctest::Approx(1.0 - 1.0 / d).epsilon(1e-13));
    CHECK(t_fidelity(maximally_mixed(d)).value ==
          doctest::Approx(1.0 - 1.0 / d).epsilon(1e-13));
  }
}

TEST_CASE("t_trace") {
  CHECK(t_trace(free_state(3)).value == doctest::Approx(0.0).epsilon(1e-10));
  // basis state at d=2: sqrt(1 - 1/2); eigenvalue oracle in test_linalg
  CHECK(t_trace(basis_state(2, 0).density()).value ==
        doctest::Approx(0.7071067811865476).epsilon(1e-12));
  // I/2 - f1 has eigenvalues +-1/2
  CHECK(t_trace(maximally_mixed(2)).value ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("t_weight") {
  CHECK(t_weight(free_state(4)).value == doctest::Approx(0.0).epsilon(1e-10));
  for (int d : {2, 3, 5}) {
    Rng rng(d);
    CHECK(t_weight(random_pure(d, rng).density()).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    // I/d: lambda* = 1/<f1| d I |f1> = 1/d
    CHECK(t_weight(maximally_mixed(d)).value ==
          doctest::Approx(1.0 - 1.0 / d).epsilon(1e-10));
    CHECK(std::abs(t_weight(maximally_mixed(d)).value -
                   t_weight_bisection(maximally_mixed(d))) <= 1e-8);
  }
}

TEST_CASE("weight closed form equals the bisection oracle on random states") {
  Rng rng(515);
  for (int rep = 0; rep < 120; ++rep) {
    const int d = 2 + rep % 5;
    const int rank = 1 + rep % d;
    const DensityMatrix rho = random_mixed(d, rank, rng);
    CHECK(std::abs(t_weight(rho).value - t_weight_bisection(rho)) <= 1e-8);
  }
}

TEST_CASE("t_renyi") {
  CHECK_THROWS_AS(t_renyi(free_state(2), 0.4), DomainError);
  CHECK_THROWS_AS(t_renyi(free_state(2), 1.0), DomainError);
  CHECK(t_renyi(free_state(3), 0.7).value == doctest::Approx(0.0).epsilon(1e-12));

  // alpha = 1/2 reduces to twice the fidelity measure
  Rng rng(808);
  for (int rep = 0; rep < 60; ++rep) {
    const int d = 2 + rep % 5;
    const DensityMatrix rho = random_mixed(d, 1 + rep % d, rng);
    CHECK(std::abs(t_renyi(rho, 0.5).value - 2.0 * t_fidelity(rho).value) <=
          1e-12);
  }

  // maximally mixed closed form (1 - 1/d)/(1 - alpha): the inner power is
  // d^{-(1-alpha)/alpha}, and raising to alpha/(1-alpha) collapses it to 1/d.
  for (int d : {2, 3, 4}) {
    for (double a : {0.5, 0.6, 0.75, 0.9}) {
      CHECK(t_renyi(maximally_mixed(d), a).value ==
            doctest::Approx((1.0 - 1.0 / d) / (1.0 - a)).epsilon(1e-12));
    }
  }
  CHECK(t_renyi(maximally_mixed(2), 0.75).value ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("t_bures") {
  CHECK(t_bures(free_state(2)).value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(t_bures(basis_state(2, 0).density()).value ==
        doctest::Approx(0.5857864376269049).epsilon(1e-12));
  Rng rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    const int d = 2 + rep % 5;
    const DensityMatrix rho = random_mixed(d, 1 + rep % d, rng);
    CHECK(std::abs(t_bures(rho).value -
                   2.0 * t_gr(rho, AlphaZParams::checked(0.5, 0.5)).value) <=
          1e-10);
  }
}

TEST_CASE("t_tsallis") {
  CHECK_THROWS_AS(t_tsallis(free_state(2), 0.0), DomainError);
  CHECK_THROWS_AS(t_tsallis(free_state(2), 1.0), DomainError);
  CHECK(t_tsallis(free_state(3), 0.4).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(t_tsallis(maximally_mixed(2), 0.5).value ==
        doctest::Approx(0.5857864376269049).epsilon(1e-12));
  Rng rng(111);
  for (int rep = 0; rep < 100; ++rep) {
    const int d = 2 + rep % 4;
    const DensityMatrix rho = random_mixed(d, 1 + rep % d, rng);
    const double mu = 0.1 + 0.2 * (rep % 5);
    CHECK(std::abs(t_tsallis(rho, mu).value * (1.0 - mu) -
                   t_gr(rho, AlphaZParams::checked(1.0 - mu, 1.0)).value) <=
          1e-12);
  }
}

TEST_CASE("d_alpha_z") {
  Rng rng(202);
  SUBCASE("zero on identical arguments") {
    for (int rep = 0; rep < 20; ++rep) {
      const int d = 2 + rep % 4;
      const DensityMatrix rho = random_mixed(d, d, rng);
      for (const AlphaZParams& p :
           {AlphaZParams::checked(0.3, 1.0), AlphaZParams::checked(0.6, 0.75)}) {
        CHECK(std::abs(d_alpha_z(rho, rho, p)) < 1e-10);
      }
    }
  }
  SUBCASE("ties back to t_gr via the base-2 exponential") {
    for (int rep = 0; rep < 30; ++rep) {
      const int d = 2 + rep % 4;
      const DensityMatrix rho = random_mixed(d, 1 + rep % d, rng);
      for (const AlphaZParams& p : param_grid()) {
        const double dd = d_alpha_z(free_state(d), rho, p);
        const double tgr = t_gr(rho, p).value;
        if (std::isinf(dd)) {
          CHECK(tgr == doctest::Approx(1.0).epsilon(1e-9));
        } else {
          CHECK(std::abs(tgr -
                         (1.0 - std::pow(2.0, (p.alpha - 1.0) * dd))) <= 1e-8);
        }
      }
    }
  }
  SUBCASE("divergence on orthogonal supports") {
    // tau = f1, sigma orthogonal to f1 -> the trace functional vanishes
    const double v =
        d_alpha_z(free_state(2), anti_free_qubit(), AlphaZParams::checked(0.5, 0.5));
    CHECK(std::isinf(v));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(d_alpha_z(free_state(2), free_state(3),
                              AlphaZParams::checked(0.5, 0.5)),
                    DimensionError);
  }
}

TEST_CASE("purity") {
  Rng rng(303);
  CHECK(purity(random_pure(4, rng).density()) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(maximally_mixed(4)) == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("measure value metadata") {
  const MeasureValue v = t_tsallis(maximally_mixed(2), 0.5);
  CHECK(v.id == MeasureId::tsallis);
  CHECK(*v.mu == 0.5);
  CHECK_FALSE(v.infinite());
  CHECK(std::string(measure_name(v.id)) == "tTsallis");
  CHECK(v.params_string() == "mu=0.5");
}
