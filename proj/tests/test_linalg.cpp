// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "qtex/errors.hpp"
#include "qtex/linalg.hpp"
#include "qtex/rng.hpp"
#include "qtex/states.hpp"

using namespace qtex;

namespace {

HermitianOperator random_hermitian(int d, Rng& rng) {
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
  return HermitianOperator::symmetrized(cplx(0.5, 0.0) * (g + g.adjoint()));
}

HermitianOperator diag(std::initializer_list<double> entries) {
  const int d = static_cast<int>(entries.size());
  ComplexMatrix m(d, d);
  int i = 0;
  for (double v : entries) m(i, i) = v, ++i;
  return HermitianOperator::checked(std::move(m));
}

}  // namespace

TEST_CASE("eig on anchors") {
  SUBCASE("identity d=3") {
    const auto e = eig_hermitian(
        HermitianOperator::checked(ComplexMatrix::identity(3)));
    for (double v : e.eigenvalues) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("already diagonal") {
    const auto e = eig_hermitian(diag({0.25, 0.75}));
    CHECK(e.eigenvalues[0] == doctest::Approx(0.25));
    CHECK(e.eigenvalues[1] == doctest::Approx(0.75));
  }
  SUBCASE("pauli X: roots of lambda^2 - 1") {
    const auto x = HermitianOperator::checked(
        ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
    const auto e = eig_hermitian(x);
    CHECK(e.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("eig reconstruction and unitarity invariants") {
  Rng rng(101);
  for (int d = 1; d <= 8; ++d) {
    for (int rep = 0; rep < 20; ++rep) {
      const HermitianOperator m = random_hermitian(d, rng);
      const EigDecomposition e = eig_hermitian(m);
      for (int i = 0; i + 1 < d; ++i)
        CHECK(e.eigenvalues[i] <= e.eigenvalues[i + 1]);
      // V diag V^dagger == M
      ComplexMatrix scaled(d, d);
      kernels::ops().scale_cols(e.eigenvectors.data(), e.eigenvalues.data(),
                                scaled.data(), d, d);
      const ComplexMatrix rec = multiply_adjoint(scaled, e.eigenvectors);
      const double scale = std::max(1.0, max_abs(m.matrix()));
      CHECK(max_abs_diff(rec, m.matrix()) <= kEigTol * scale);
      const ComplexMatrix gram =
          e.eigenvectors.adjoint() * e.eigenvectors;
      CHECK(max_abs_diff(gram, ComplexMatrix::identity(d)) <= kEigTol);
      // values-only path agrees
      const auto vals = eig_hermitian_values(m);
      for (int i = 0; i < d; ++i)
        CHECK(vals[i] == doctest::Approx(e.eigenvalues[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("matrix_power_psd anchors") {
  CHECK(max_abs_diff(
            matrix_power_psd(
                HermitianOperator::checked(ComplexMatrix::identity(4)), 0.5)
                .matrix(),
            ComplexMatrix::identity(4)) < 1e-12);

  const auto half = matrix_power_psd(diag({0.25, 0.75}), 0.5);
  CHECK(half(0, 0).real() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(half(1, 1).real() == doctest::Approx(0.8660254037844386).epsilon(1e-13));

  // projector is idempotent under any positive power
  const auto proj = matrix_power_psd(diag({1.0, 0.0}), 0.37);
  CHECK(proj(0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(proj(1, 1)) < 1e-13);
}

TEST_CASE("matrix_power_psd properties and errors") {
  Rng rng(55);
  for (int d : {2, 3, 5}) {
    ComplexMatrix g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
    const HermitianOperator psd =
        HermitianOperator::symmetrized(multiply_adjoint(g, g));

    CHECK(max_abs_diff(matrix_power_psd(psd, 1.0).matrix(), psd.matrix()) <
          1e-10 * std::max(1.0, max_abs(psd.matrix())));

    const double a = 0.6, b = 1.4;
    const auto lhs = matrix_power_psd(matrix_power_psd(psd, a), b);
    const auto rhs = matrix_power_psd(psd, a * b);
    CHECK(max_abs_diff(lhs.matrix(), rhs.matrix()) <
          1e-8 * std::max(1.0, max_abs(psd.matrix())));

    // result stays PSD
    CHECK(eig_hermitian_values(matrix_power_psd(psd, 0.3)).front() > -1e-12);
  }

  CHECK_THROWS_AS(matrix_power_psd(diag({1.0, -1.0}), 0.5), NumericalError);
  CHECK_THROWS_AS(matrix_power_psd(diag({1.0, 0.0}), -1.0), NumericalError);
  // negative power of a positive-definite operator is fine
  const auto inv = matrix_power_psd(diag({2.0, 4.0}), -1.0);
  CHECK(inv(0, 0).real() == doctest::Approx(0.5));
  CHECK(inv(1, 1).real() == doctest::Approx(0.25));
}

TEST_CASE("trace_norm") {
  CHECK(trace_norm(diag({0.0, 0.0, 0.0})) == doctest::Approx(0.0));
  CHECK(trace_norm(diag({1.0, -1.0})) == doctest::Approx(2.0));  // pauli Z

  // || |0><0| - f1 ||_Tr at d=2; brute-force oracle via the characteristic
  // polynomial of [[.5,-.5],[-.5,-.5]]: tr = 0, det = -1/2, roots +-sqrt(1/2).
  const double oracle = 2.0 * std::sqrt(0.5);
  const HermitianOperator difference =
      basis_state(2, 0).density().op() - free_state(2).op();
  CHECK(trace_norm(difference) == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(trace_norm(difference) == doctest::Approx(1.4142135623730951).epsilon(1e-12));

  Rng rng(7);
  for (int d : {2, 4, 7}) {
    for (int rep = 0; rep < 25; ++rep) {
      const HermitianOperator m = random_hermitian(d, rng);
      double via_eig = 0.0;
      for (double lam : eig_hermitian(m).eigenvalues) via_eig += std::abs(lam);
      CHECK(trace_norm(m) == doctest::Approx(via_eig).epsilon(1e-10));
    }
  }
}

TEST_CASE("tensor") {
  CHECK(max_abs_diff(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                     ComplexMatrix::identity(6)) == 0.0);

  const ComplexMatrix f2 = free_state(2).matrix();
  const ComplexMatrix f4 = tensor(f2, f2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(f4(i, j).real() == doctest::Approx(0.25).epsilon(1e-15));

  const ComplexMatrix p01 =
      tensor(basis_state(2, 0).density().matrix(),
             basis_state(2, 1).density().matrix());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(p01(i, j) - (i == 1 && j == 1 ? cplx(1.0) : cplx(0.0))) <
            1e-15);

  CHECK_THROWS_AS(tensor(ComplexMatrix::identity(9), ComplexMatrix::identity(8)),
                  DimensionError);
}

TEST_CASE("expectation") {
  Rng state_rng(3);
  const DensityMatrix rho = random_mixed(3, 3, state_rng);
  SUBCASE("identity gives the trace") {
    CHECK(expectation(HermitianOperator::checked(ComplexMatrix::identity(3)),
                      rho) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("free state on itself") {
    CHECK(expectation(free_state(4).op(), free_state(4)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("traceless observable on the maximally mixed state") {
    const auto z = HermitianOperator::checked(
        ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}));
    ComplexMatrix half = ComplexMatrix::identity(2);
    half(0, 0) = 0.5;
    half(1, 1) = 0.5;
    CHECK(std::abs(expectation(z, DensityMatrix::checked(half))) < 1e-14);
  }
  SUBCASE("bilinearity on convex combinations") {
    Rng rng(21);
    for (int rep = 0; rep < 30; ++rep) {
      const int d = 2 + rep % 4;
      const HermitianOperator a = random_hermitian(d, rng);
      const HermitianOperator b = random_hermitian(d, rng);
      const DensityMatrix r1 = random_mixed(d, d, rng);
      const DensityMatrix r2 = random_mixed(d, 1 + rep % d, rng);
      const double p = rng.uniform01();
      const HermitianOperator ab = HermitianOperator::symmetrized(
          cplx(p, 0.0) * a.matrix() + cplx(1 - p, 0.0) * b.matrix());
      const DensityMatrix rmix = DensityMatrix::checked(
          HermitianOperator::symmetrized(cplx(p, 0.0) * r1.matrix() +
                                         cplx(1 - p, 0.0) * r2.matrix()));
      CHECK(expectation(ab, r1) ==
            doctest::Approx(p * expectation(a, r1) + (1 - p) * expectation(b, r1))
                .epsilon(1e-10));
      CHECK(expectation(a, rmix) ==
            doctest::Approx(p * expectation(a, r1) + (1 - p) * expectation(a, r2))
                .epsilon(1e-10));
    }
  }
  SUBCASE("dimension mismatch") {
    Rng r(1);
    CHECK_THROWS_AS(
        expectation(HermitianOperator::checked(ComplexMatrix::identity(2)),
                    random_mixed(3, 3, r)),
        DimensionError);
  }
}

TEST_CASE("hermiticity validation") {
  ComplexMatrix bad(2, 2);
  bad(0, 1) = cplx(0.0, 1.0);
  bad(1, 0) = cplx(0.0, 1.0);  // conj would be -i
  CHECK_THROWS_AS(HermitianOperator::checked(std::move(bad)), ValidationError);

  ComplexMatrix nan_m(2, 2);
  nan_m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(HermitianOperator::checked(std::move(nan_m)), ValidationError);
}
