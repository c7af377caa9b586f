// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qtex/channels.hpp"
#include "qtex/harness.hpp"
#include "qtex/witnesses.hpp"

namespace qtex::io {

using json = nlohmann::ordered_json;

/// On-disk object: {"dim": d, "kind": k, "matrix": [[re,im]...] rows or
/// "kraus": [matrix...], "meta": {...}}. Complex entries are [re, im]
/// pairs; doubles round-trip exactly.
struct MatrixFile {
  int dim = 0;
  std::string kind;  // density | hermitian | unitary | kraus_channel
  ComplexMatrix matrix;
  std::vector<ComplexMatrix> kraus;
  json meta = json::object();
};

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j, const std::string& where);

json to_json(const MatrixFile& f);
MatrixFile matrix_file_from_json(const json& j, const std::string& where);

void write_matrix_file(const std::string& path, const MatrixFile& f);
MatrixFile read_matrix_file(const std::string& path);

MatrixFile make_state_file(const DensityMatrix& rho, json meta = {});
MatrixFile make_hermitian_file(const HermitianOperator& op, json meta = {});
MatrixFile make_unitary_file(const ComplexMatrix& u, json meta = {});
MatrixFile make_channel_file(const KrausChannel& ch, json meta = {});
MatrixFile make_witness_file(const Witness& w);

/// Converters with validation; `where` names the source for diagnostics.
DensityMatrix as_density(const MatrixFile& f, const std::string& where);
HermitianOperator as_hermitian(const MatrixFile& f, const std::string& where);
ComplexMatrix as_unitary(const MatrixFile& f, const std::string& where);
KrausChannel as_channel(const MatrixFile& f, const std::string& where);

json config_to_json(const SuiteConfig& cfg);
json report_to_json(const PropertyReport& rep);
json reports_to_json(const std::vector<PropertyReport>& reps);

/// Finite doubles stay numbers; infinities become the strings "inf"/"-inf"
/// (JSON has no infinity literal).
json number_or_inf(double v);

}  // namespace qtex::io
