// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include "qtex/errors.hpp"
#include "qtex/matrix_io.hpp"

using namespace qtex;
using qtex::io::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("qtex_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("round trips are exact") {
  TempDir tmp;
  Rng rng(3);

  SUBCASE("density") {
    const DensityMatrix rho = random_mixed(4, 2, rng);
    const std::string p = tmp.file("state.json");
    io::write_matrix_file(p, io::make_state_file(rho, {{"seed", 3}}));
    const io::MatrixFile back = io::read_matrix_file(p);
    CHECK(back.kind == "density");
    CHECK(back.dim == 4);
    CHECK(max_abs_diff(back.matrix, rho.matrix()) == 0.0);
    CHECK(io::as_density(back, p).dim() == 4);
    CHECK(back.meta.at("seed") == 3);
  }
  SUBCASE("unitary") {
    const ComplexMatrix u = random_f1_fixing_unitary(5, rng);
    const std::string p = tmp.file("u.json");
    io::write_matrix_file(p, io::make_unitary_file(u));
    CHECK(max_abs_diff(io::as_unitary(io::read_matrix_file(p), p), u) == 0.0);
  }
  SUBCASE("channel") {
    const KrausChannel ch = random_texture_free_channel(3, 2, rng);
    const std::string p = tmp.file("ch.json");
    io::write_matrix_file(p, io::make_channel_file(ch));
    const KrausChannel back = io::as_channel(io::read_matrix_file(p), p);
    REQUIRE(back.size() == ch.size());
    for (int n = 0; n < ch.size(); ++n)
      CHECK(max_abs_diff(back.kraus()[n], ch.kraus()[n]) == 0.0);
    CHECK(is_texture_free(back).texture_free);
  }
  SUBCASE("witness carries family metadata") {
    const Witness w = witness_theta(4, 2.0);
    const std::string p = tmp.file("w.json");
    io::write_matrix_file(p, io::make_witness_file(w));
    const io::MatrixFile back = io::read_matrix_file(p);
    CHECK(back.kind == "hermitian");
    CHECK(back.meta.at("family") == "theta");
    CHECK(back.meta.at("theta").get<double>() == 2.0);
    CHECK(back.meta.at("threshold").get<double>() ==
          doctest::Approx(theta_threshold(2.0)));
    CHECK(max_abs_diff(io::as_hermitian(back, p).matrix(), w.op.matrix()) ==
          0.0);
  }
}

TEST_CASE("parse diagnostics") {
  TempDir tmp;
  auto write_text = [&](const std::string& name, const std::string& text) {
    const std::string p = tmp.file(name);
    std::ofstream out(p);
    out << text;
    return p;
  };

  CHECK_THROWS_AS(io::read_matrix_file(tmp.file("missing.json")), ParseError);
  CHECK_THROWS_AS(io::read_matrix_file(write_text("bad.json", "{nope")),
                  ParseError);
  CHECK_THROWS_AS(
      io::read_matrix_file(write_text("nodim.json", R"({"kind":"density"})")),
      ParseError);
  CHECK_THROWS_AS(io::read_matrix_file(write_text(
                      "badkind.json", R"({"dim":2,"kind":"wat","matrix":[]})")),
                  ParseError);
  CHECK_THROWS_AS(
      io::read_matrix_file(write_text(
          "ragged.json",
          R"({"dim":2,"kind":"density","matrix":[[[1,0],[0,0]],[[0,0]]]})")),
      ParseError);
  CHECK_THROWS_AS(
      io::read_matrix_file(write_text(
          "badentry.json",
          R"({"dim":1,"kind":"density","matrix":[[["x",0]]]})")),
      ParseError);
  CHECK_THROWS_AS(
      io::read_matrix_file(write_text(
          "shape.json",
          R"({"dim":3,"kind":"density","matrix":[[[1,0]]]})")),
      ParseError);

  // parses but fails domain validation: trace 2
  const std::string p = write_text(
      "trace2.json",
      R"({"dim":2,"kind":"density","matrix":[[[1,0],[0,0]],[[0,0],[1,0]]]})");
  const io::MatrixFile f = io::read_matrix_file(p);
  CHECK_THROWS_AS(io::as_density(f, p), ParseError);
  try {
    io::as_density(f, p);
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("trace") != std::string::npos);
    CHECK(std::string(e.what()).find(p) != std::string::npos);
  }

  // kind mismatch
  CHECK_THROWS_AS(io::as_channel(f, p), ParseError);
  CHECK_THROWS_AS(io::as_unitary(f, p), ParseError);
}

TEST_CASE("non-unitary rejected") {
  io::MatrixFile f;
  f.dim = 2;
  f.kind = "unitary";
  f.matrix = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.5}});
  CHECK_THROWS_AS(io::as_unitary(f, "mem"), ParseError);
}

TEST_CASE("number_or_inf") {
  CHECK(io::number_or_inf(1.5) == json(1.5));
  CHECK(io::number_or_inf(std::numeric_limits<double>::infinity()) ==
        json("inf"));
  CHECK(io::number_or_inf(-std::numeric_limits<double>::infinity()) ==
        json("-inf"));
}

TEST_CASE("report JSON carries the documented fields") {
  SuiteConfig cfg;
  cfg.dims = {2};
  cfg.samples_per_dim = 2;
  const json j = io::report_to_json(run_axiom_suite(cfg));
  for (const char* key :
       {"suite_id", "config", "checks_run", "skipped_infinite",
        "total_violations", "violations", "worst_slack", "warnings",
        "passed"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["config"]["seed"] == 42);
  CHECK(j["passed"].is_boolean());
}
