// SPDX-License-Identifier: Apache-2.0

#include "qtex/matrix_io.hpp"

#include <cmath>
#include <fstream>

#include "qtex/errors.hpp"

namespace qtex::io {

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw ParseError(where + ": \"matrix\" must be a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.front().is_array() ? j.front().size() : 0);
  if (cols == 0) throw ParseError(where + ": empty matrix row");
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError(where + ": row " + std::to_string(i) +
                       " has inconsistent length");
    for (int c = 0; c < cols; ++c) {
      const json& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
          !e[1].is_number()) {
        throw ParseError(where + ": entry (" + std::to_string(i) + "," +
                         std::to_string(c) + ") must be an [re, im] pair");
      }
      m(i, c) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  if (!m.all_finite())
    throw ParseError(where + ": matrix has non-finite entries");
  return m;
}

json to_json(const MatrixFile& f) {
  json j;
  j["dim"] = f.dim;
  j["kind"] = f.kind;
  if (f.kind == "kraus_channel") {
    json ops = json::array();
    for (const ComplexMatrix& k : f.kraus) ops.push_back(matrix_to_json(k));
    j["kraus"] = std::move(ops);
  } else {
    j["matrix"] = matrix_to_json(f.matrix);
  }
  if (!f.meta.empty()) j["meta"] = f.meta;
  return j;
}

MatrixFile matrix_file_from_json(const json& j, const std::string& where) {
  MatrixFile f;
  if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError(where + ": missing integer field \"dim\"");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError(where + ": missing string field \"kind\"");
  f.dim = j["dim"].get<int>();
  f.kind = j["kind"].get<std::string>();
  if (f.dim < 1) throw ParseError(where + ": \"dim\" must be >= 1");
  const bool is_channel = f.kind == "kraus_channel";
  if (f.kind != "density" && f.kind != "hermitian" && f.kind != "unitary" &&
      !is_channel) {
    throw ParseError(where + ": unknown kind \"" + f.kind + "\"");
  }
  if (is_channel) {
    if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty())
      throw ParseError(where + ": kraus_channel needs a nonempty \"kraus\" array");
    int n = 0;
    for (const json& kj : j["kraus"]) {
      ComplexMatrix k =
          matrix_from_json(kj, where + " kraus[" + std::to_string(n) + "]");
      if (k.rows() != f.dim || k.cols() != f.dim)
        throw ParseError(where + ": kraus[" + std::to_string(n) +
                         "] is not dim x dim");
      f.kraus.push_back(std::move(k));
      ++n;
    }
  } else {
    if (!j.contains("matrix"))
      throw ParseError(where + ": missing field \"matrix\"");
    f.matrix = matrix_from_json(j["matrix"], where);
    if (f.matrix.rows() != f.dim || f.matrix.cols() != f.dim)
      throw ParseError(where + ": \"matrix\" is not dim x dim");
  }
  if (j.contains("meta")) f.meta = j["meta"];
  return f;
}

void write_matrix_file(const std::string& path, const MatrixFile& f) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path);
  out << to_json(f).dump(2) << "\n";
  if (!out) throw ParseError("write failed: " + path);
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return matrix_file_from_json(j, path);
}

MatrixFile make_state_file(const DensityMatrix& rho, json meta) {
  MatrixFile f;
  f.dim = rho.dim();
  f.kind = "density";
  f.matrix = rho.matrix();
  f.meta = std::move(meta);
  return f;
}

MatrixFile make_hermitian_file(const HermitianOperator& op, json meta) {
  MatrixFile f;
  f.dim = op.dim();
  f.kind = "hermitian";
  f.matrix = op.matrix();
  f.meta = std::move(meta);
  return f;
}

MatrixFile make_unitary_file(const ComplexMatrix& u, json meta) {
  MatrixFile f;
  f.dim = u.rows();
  f.kind = "unitary";
  f.matrix = u;
  f.meta = std::move(meta);
  return f;
}

MatrixFile make_channel_file(const KrausChannel& ch, json meta) {
  MatrixFile f;
  f.dim = ch.dim();
  f.kind = "kraus_channel";
  f.kraus = ch.kraus();
  f.meta = std::move(meta);
  return f;
}

MatrixFile make_witness_file(const Witness& w) {
  json meta;
  meta["family"] = witness_family_name(w.family);
  if (w.theta) {
    meta["theta"] = *w.theta;
    meta["threshold"] = theta_threshold(*w.theta);
  }
  if (w.phi) meta["phi"] = *w.phi;
  if (w.j) meta["j"] = *w.j;
  if (w.k) meta["k"] = *w.k;
  if (w.sign) meta["sign"] = *w.sign > 0 ? "+" : "-";
  meta["free_expectation"] = w.free_expectation;
  meta["min_eigenvalue"] = w.min_eigenvalue;
  MatrixFile f = make_hermitian_file(w.op, std::move(meta));
  return f;
}

DensityMatrix as_density(const MatrixFile& f, const std::string& where) {
  if (f.kind != "density")
    throw ParseError(where + ": expected kind \"density\", got \"" + f.kind +
                     "\"");
  try {
    return DensityMatrix::checked(f.matrix);
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

HermitianOperator as_hermitian(const MatrixFile& f, const std::string& where) {
  if (f.kind != "hermitian" && f.kind != "density")
    throw ParseError(where + ": expected a Hermitian operator, got \"" +
                     f.kind + "\"");
  try {
    return HermitianOperator::checked(f.matrix);
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

ComplexMatrix as_unitary(const MatrixFile& f, const std::string& where) {
  if (f.kind != "unitary")
    throw ParseError(where + ": expected kind \"unitary\", got \"" + f.kind +
                     "\"");
  const ComplexMatrix gram = f.matrix.adjoint() * f.matrix;
  const double res = max_abs_diff(gram, ComplexMatrix::identity(f.dim));
  if (res > 1e-9)
    throw ParseError(where + ": matrix is not unitary (residual " +
                     std::to_string(res) + ")");
  return f.matrix;
}

KrausChannel as_channel(const MatrixFile& f, const std::string& where) {
  if (f.kind != "kraus_channel")
    throw ParseError(where + ": expected kind \"kraus_channel\", got \"" +
                     f.kind + "\"");
  try {
    return KrausChannel::checked(f.kraus);
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return json(v);
}

json config_to_json(const SuiteConfig& cfg) {
  json j;
  j["dims"] = cfg.dims;
  j["samples_per_dim"] = cfg.samples_per_dim;
  j["seed"] = cfg.seed;
  j["tolerance"] = cfg.tolerance;
  j["alpha_grid"] = cfg.alpha_grid;
  j["z_grid"] = cfg.z_grid;
  j["theta_grid"] = cfg.theta_grid;
  j["mu_grid"] = cfg.mu_grid;
  j["skip_infinite"] = cfg.skip_infinite;
  j["max_dim"] = cfg.max_dim;
  return j;
}

json report_to_json(const PropertyReport& rep) {
  json j;
  j["suite_id"] = rep.suite_id;
  j["config"] = config_to_json(rep.config);
  j["checks_run"] = rep.checks_run;
  j["skipped_infinite"] = rep.skipped_infinite;
  j["total_violations"] = rep.total_violations;
  json viols = json::array();
  for (const Violation& v : rep.violations) {
    json vj;
    vj["property_id"] = v.property_id;
    vj["dim"] = v.dim;
    vj["sample"] = v.sample;
    vj["params"] = v.params;
    vj["lhs"] = number_or_inf(v.lhs);
    vj["rhs"] = number_or_inf(v.rhs);
    vj["slack"] = number_or_inf(v.slack);
    viols.push_back(std::move(vj));
  }
  j["violations"] = std::move(viols);
  j["violations_truncated"] =
      rep.total_violations > rep.violations.size();
  j["worst_slack"] = rep.has_slack ? number_or_inf(rep.worst_slack) : json();
  if (rep.suite_id == "purity_control") j["control_breaks"] = rep.control_breaks;
  j["warnings"] = rep.warnings;
  j["passed"] = rep.passed;
  return j;
}

json reports_to_json(const std::vector<PropertyReport>& reps) {
  json j = json::array();
  for (const PropertyReport& r : reps) j.push_back(report_to_json(r));
  return j;
}

}  // namespace qtex::io
