// SPDX-License-Identifier: Apache-2.0
//
// qtex: compute state-texture measures and witness expectations, generate
// random states/channels/unitaries/witnesses, and run the verification
// suites.
//
// Exit codes: 0 success (and verification pass), 1 verification failure,
// 2 usage or input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtex/errors.hpp"
#include "qtex/harness.hpp"
#include "qtex/matrix_io.hpp"
#include "qtex/measures.hpp"
#include "qtex/witnesses.hpp"

namespace {

using qtex::io::json;

std::string value_string(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return json(v).dump();
}

struct MeasureRequest {
  std::string id;
  std::map<std::string, double> params;
};

MeasureRequest parse_measure_spec(const std::string& spec) {
  MeasureRequest req;
  const auto colon = spec.find(':');
  req.id = spec.substr(0, colon);
  if (colon == std::string::npos) return req;
  std::string rest = spec.substr(colon + 1);
  size_t pos = 0;
  while (pos < rest.size()) {
    size_t comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    const std::string kv = rest.substr(pos, comma - pos);
    const size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw qtex::ParseError("bad measure parameter \"" + kv +
                             "\" (expected key=value)");
    try {
      req.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw qtex::ParseError("bad numeric value in \"" + kv + "\"");
    }
    pos = comma + 1;
  }
  return req;
}

double require_param(const MeasureRequest& req, const std::string& key) {
  const auto it = req.params.find(key);
  if (it == req.params.end())
    throw qtex::ParseError("measure " + req.id + " needs parameter \"" + key +
                           "\" (use " + req.id + ":" + key + "=...)");
  return it->second;
}

qtex::MeasureValue compute_measure(const MeasureRequest& req,
                                   const qtex::DensityMatrix& rho) {
  using namespace qtex;
  if (req.id == "tGR") {
    return t_gr(rho, AlphaZParams::checked(require_param(req, "alpha"),
                                           require_param(req, "z")));
  }
  if (req.id == "tSR") return t_rugosity(rho);
  if (req.id == "tF") return t_fidelity(rho);
  if (req.id == "tTr") return t_trace(rho);
  if (req.id == "tw") return t_weight(rho);
  if (req.id == "tR") return t_renyi(rho, require_param(req, "alpha"));
  if (req.id == "tBures") return t_bures(rho);
  if (req.id == "tTsallis") return t_tsallis(rho, require_param(req, "mu"));
  throw qtex::ParseError(
      "unknown measure \"" + req.id +
      "\" (known: tGR tSR tF tTr tw tR tBures tTsallis all)");
}

std::vector<MeasureRequest> expand_all() {
  return {
      {"tGR", {{"alpha", 0.5}, {"z", 0.5}}},
      {"tSR", {}},
      {"tF", {}},
      {"tTr", {}},
      {"tw", {}},
      {"tR", {{"alpha", 0.5}}},
      {"tBures", {}},
      {"tTsallis", {{"mu", 0.5}}},
  };
}

int cmd_measure(const std::string& state_path,
                const std::vector<std::string>& specs,
                const std::string& format) {
  const qtex::io::MatrixFile file = qtex::io::read_matrix_file(state_path);
  const qtex::DensityMatrix rho = qtex::io::as_density(file, state_path);

  std::vector<MeasureRequest> requests;
  for (const std::string& s : specs) {
    if (s == "all") {
      for (auto& r : expand_all()) requests.push_back(std::move(r));
    } else {
      requests.push_back(parse_measure_spec(s));
    }
  }
  if (requests.empty()) {
    for (auto& r : expand_all()) requests.push_back(std::move(r));
  }

  struct Row {
    std::string id, params, value;
  };
  std::vector<Row> rows;
  json jmeasures = json::array();
  for (const MeasureRequest& req : requests) {
    const qtex::MeasureValue mv = compute_measure(req, rho);
    rows.push_back({req.id, mv.params_string(), value_string(mv.value)});
    json jm;
    jm["id"] = req.id;
    json jp = json::object();
    if (mv.alpha) jp["alpha"] = *mv.alpha;
    if (mv.z) jp["z"] = *mv.z;
    if (mv.mu) jp["mu"] = *mv.mu;
    jm["params"] = std::move(jp);
    jm["value"] = qtex::io::number_or_inf(mv.value);
    jmeasures.push_back(std::move(jm));
  }

  if (format == "json") {
    json out;
    out["state"] = state_path;
    out["dim"] = rho.dim();
    out["measures"] = std::move(jmeasures);
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "id,params,value\n";
    for (const Row& r : rows) {
      std::string p = r.params;
      for (char& c : p)
        if (c == ',') c = ';';
      std::cout << r.id << "," << p << "," << r.value << "\n";
    }
  } else {
    for (const Row& r : rows) {
      std::printf("%-10s %-24s %s\n", r.id.c_str(), r.params.c_str(),
                  r.value.c_str());
    }
  }
  return 0;
}

qtex::Witness parse_witness_spec(const std::string& spec, int dim) {
  using namespace qtex;
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      parts.push_back(s.substr(pos, comma - pos));
      pos = comma + 1;
    }
    return parts;
  };
  try {
    if (head == "w1") return witness_w1(dim);
    if (head == "theta") return witness_theta(dim, std::stod(rest));
    if (head == "jk") {
      const auto p = split(rest);
      if (p.size() != 3) throw ParseError("jk spec needs j,k,phi");
      return witness_jk(dim, std::stoi(p[0]), std::stoi(p[1]), std::stod(p[2]));
    }
    if (head == "imag") {
      const auto p = split(rest);
      if (p.size() != 3 || (p[2] != "+" && p[2] != "-"))
        throw ParseError("imag spec needs j,k,+|-");
      return imaginarity_witness(dim, std::stoi(p[0]), std::stoi(p[1]),
                                 p[2] == "+" ? +1 : -1);
    }
    if (head == "universal") {
      const io::MatrixFile af = io::read_matrix_file(rest);
      return universal_witness(io::as_hermitian(af, rest));
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("bad number in witness spec \"" + spec + "\"");
  }
  throw ParseError("unknown witness spec \"" + spec +
                   "\" (known: w1 | theta:t | jk:j,k,phi | imag:j,k,+|- | "
                   "universal:file)");
}

int cmd_witness(const std::string& spec, const std::string& state_path,
                const std::string& format) {
  const qtex::io::MatrixFile file = qtex::io::read_matrix_file(state_path);
  const qtex::DensityMatrix rho = qtex::io::as_density(file, state_path);
  const qtex::Witness w = parse_witness_spec(spec, rho.dim());
  const qtex::DetectionResult res = qtex::evaluate_witness(w, rho);

  if (format == "json") {
    json out;
    out["witness"] = spec;
    out["family"] = qtex::witness_family_name(res.family);
    out["state"] = state_path;
    out["expectation"] = qtex::io::number_or_inf(res.expectation);
    out["detected"] = res.detected;
    out["boundary"] = res.boundary;
    if (res.derived_tf) out["derived_tf"] = *res.derived_tf;
    if (w.theta) out["threshold"] = qtex::theta_threshold(*w.theta);
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "family,expectation,detected,derived_tf\n";
    std::cout << qtex::witness_family_name(res.family) << ","
              << value_string(res.expectation) << ","
              << (res.detected ? "true" : "false") << ","
              << (res.derived_tf ? value_string(*res.derived_tf) : "") << "\n";
  } else {
    std::printf("family       %s\n", qtex::witness_family_name(res.family));
    std::printf("expectation  %s\n", value_string(res.expectation).c_str());
    std::printf("detected     %s%s\n", res.detected ? "yes" : "no",
                res.boundary ? " (boundary)" : "");
    if (res.derived_tf)
      std::printf("derived tF   %s\n", value_string(*res.derived_tf).c_str());
    if (w.theta)
      std::printf("threshold    %s\n",
                  value_string(qtex::theta_threshold(*w.theta)).c_str());
  }
  return res.detected ? 0 : 0;
}

int cmd_gen(const std::string& kind, const std::string& spec, int dim,
            int rank, int env, int mix, bool haar, std::uint64_t seed,
            const std::string& out_path) {
  using namespace qtex;
  Rng rng(seed);
  io::MatrixFile file;
  json meta;
  meta["seed"] = seed;

  if (kind == "state") {
    const int r = rank > 0 ? rank : dim;
    meta["generator"] = "ginibre";
    meta["rank"] = r;
    file = io::make_state_file(random_mixed(dim, r, rng), std::move(meta));
  } else if (kind == "channel") {
    if (mix > 0) {
      meta["generator"] = "texture-free-unitary-mix";
      meta["terms"] = mix;
      file = io::make_channel_file(
          random_texture_free_unitary_mix(dim, mix, rng), std::move(meta));
    } else {
      meta["generator"] = "texture-free-isometry";
      meta["env_dim"] = env;
      const KrausChannel ch = random_texture_free_channel(dim, env, rng);
      const TextureFreeReport rep = is_texture_free(ch);
      if (!rep.texture_free)
        throw NumericalError("generated channel failed the free check");
      meta["max_free_residual"] = rep.max_residual;
      file = io::make_channel_file(ch, std::move(meta));
    }
  } else if (kind == "unitary") {
    meta["generator"] = haar ? "haar" : "f1-fixing";
    file = io::make_unitary_file(haar ? random_unitary(dim, rng)
                                      : random_f1_fixing_unitary(dim, rng),
                                 std::move(meta));
  } else if (kind == "witness") {
    if (spec.empty())
      throw ParseError("gen witness needs a spec argument (e.g. theta:2.0)");
    file = io::make_witness_file(parse_witness_spec(spec, dim));
    file.meta["seed"] = seed;
  } else {
    throw ParseError("unknown kind \"" + kind +
                     "\" (known: state channel unitary witness)");
  }

  io::write_matrix_file(out_path, file);
  std::cout << out_path << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const std::vector<int>& dims,
               int samples, std::uint64_t seed, double tol,
               const std::string& out_path) {
  using namespace qtex;
  SuiteConfig cfg = SuiteConfig::defaults();
  if (!dims.empty()) cfg.dims = dims;
  if (samples > 0) cfg.samples_per_dim = samples;
  cfg.seed = seed;
  if (tol > 0) cfg.tolerance = tol;

  std::vector<PropertyReport> reports;
  if (suite == "axioms") {
    reports.push_back(run_axiom_suite(cfg));
  } else if (suite == "propositions") {
    reports.push_back(run_proposition_suite(cfg));
  } else if (suite == "witnesses") {
    reports.push_back(run_witness_suite(cfg));
  } else if (suite == "all") {
    reports = run_all(cfg);
  } else {
    throw ParseError("unknown suite \"" + suite +
                     "\" (known: axioms propositions witnesses all)");
  }

  for (const PropertyReport& r : reports) {
    std::printf("%-14s %-4s checks=%-7ld violations=%zu worst_slack=%s\n",
                r.suite_id.c_str(), r.passed ? "PASS" : "FAIL", r.checks_run,
                r.total_violations,
                r.has_slack ? value_string(r.worst_slack).c_str() : "n/a");
    for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) {
      const Violation& v = r.violations[i];
      std::printf("  %s dim=%d sample=%llu %s lhs=%s rhs=%s\n",
                  v.property_id.c_str(), v.dim,
                  static_cast<unsigned long long>(v.sample), v.params.c_str(),
                  value_string(v.lhs).c_str(), value_string(v.rhs).c_str());
    }
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open for writing: " + out_path);
    out << io::reports_to_json(reports).dump(2) << "\n";
  }
  return all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-state texture measures, witnesses, and verification"};
  app.require_subcommand(1);

  // measure
  auto* measure = app.add_subcommand("measure", "evaluate measures on a state");
  std::string m_state, m_format = "text";
  std::vector<std::string> m_specs;
  measure->add_option("state", m_state, "density MatrixFile (JSON)")
      ->required();
  measure->add_option("--measure,-m", m_specs,
                      "measure spec id[:k=v,...]; e.g. tGR:alpha=0.5,z=1");
  measure->add_option("--out", m_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // witness
  auto* witness =
      app.add_subcommand("witness", "evaluate a witness on a state");
  std::string w_spec, w_state, w_format = "text";
  witness
      ->add_option("spec", w_spec,
                   "w1 | theta:t | jk:j,k,phi | imag:j,k,+|- | universal:file")
      ->required();
  witness->add_option("state", w_state, "density MatrixFile (JSON)")
      ->required();
  witness->add_option("--out", w_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate an object to a file");
  std::string g_kind, g_spec, g_out;
  int g_dim = 2, g_rank = 0, g_env = 2, g_mix = 0;
  bool g_haar = false;
  std::uint64_t g_seed = 0;
  gen->add_option("kind", g_kind, "state | channel | unitary | witness")
      ->required();
  gen->add_option("spec", g_spec, "witness spec (for kind=witness)");
  gen->add_option("--dim", g_dim, "Hilbert space dimension")->required();
  gen->add_option("--rank", g_rank, "state rank (default: dim)");
  gen->add_option("--env", g_env, "channel environment dimension");
  gen->add_option("--mix", g_mix, "channel: mixed-unitary terms instead");
  gen->add_flag("--haar", g_haar, "unitary: plain Haar instead of f1-fixing");
  gen->add_option("--seed", g_seed, "RNG seed")->envname("QTEX_SEED");
  gen->add_option("--out", g_out, "output file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string v_suite = "all", v_out;
  std::vector<int> v_dims;
  int v_samples = 0;
  std::uint64_t v_seed = 42;
  double v_tol = 0.0;
  verify->add_option("--suite", v_suite, "axioms|propositions|witnesses|all");
  verify->add_option("--dims", v_dims, "dimensions to sample")
      ->delimiter(',');
  verify->add_option("--samples", v_samples, "samples per dimension");
  verify->add_option("--seed", v_seed, "RNG seed")->envname("QTEX_SEED");
  verify->add_option("--tol", v_tol, "inequality slack tolerance");
  verify->add_option("--out", v_out, "write the report JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (measure->parsed()) return cmd_measure(m_state, m_specs, m_format);
    if (witness->parsed()) return cmd_witness(w_spec, w_state, w_format);
    if (gen->parsed())
      return cmd_gen(g_kind, g_spec, g_dim, g_rank, g_env, g_mix, g_haar,
                     g_seed, g_out);
    if (verify->parsed())
      return cmd_verify(v_suite, v_dims, v_samples, v_seed, v_tol, v_out);
  } catch (const qtex::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
