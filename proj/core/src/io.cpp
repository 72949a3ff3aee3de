// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#include "holoflow/io.hpp"

#include <json.hpp>

#include "holoflow/errors.hpp"

namespace holoflow {

namespace {

using nlohmann::json;

cplx parse_complex(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(field + ": complex scalar must be a [re, im] number pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError(field + ": expected a nested array of [re, im] pairs");
  std::size_t rows = j.size();
  std::size_t cols = j[0].size();
  if (cols == 0) throw ParseError(field + ": empty row");
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError(field + ": rows have inconsistent lengths");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = parse_complex(j[i][k], field);
  }
  if (!m.is_finite()) throw ParseError(field + ": non-finite entries");
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

json report_to_json(const MonodromyReport& rep) {
  return json{{"proj_residual", rep.proj_residual},
              {"restriction_residual", rep.restriction_residual},
              {"skew_residual", rep.skew_residual},
              {"commutator_norm", rep.commutator_norm},
              {"nontrivial", rep.nontrivial}};
}

}  // namespace

ProblemDocument parse_problem_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document: top level must be an object");

  ProblemDocument doc;
  if (j.contains("ambient_dim")) {
    if (!j["ambient_dim"].is_number_integer() || j["ambient_dim"].get<int>() <= 0)
      throw ParseError("ambient_dim: must be a positive integer");
    doc.ambient_dim = j["ambient_dim"].get<std::size_t>();
  }
  if (j.contains("frame")) doc.frame = parse_matrix(j["frame"], "frame");
  if (j.contains("g0")) doc.g0 = parse_matrix(j["g0"], "g0");
  if (j.contains("omega")) doc.omega = parse_matrix(j["omega"], "omega");
  if (j.contains("winding")) {
    if (!j["winding"].is_number_integer())
      throw ParseError("winding: must be an integer");
    doc.winding = j["winding"].get<int>();
  }
  if (j.contains("pivot")) {
    if (!j["pivot"].is_number_integer() || j["pivot"].get<int>() < 1)
      throw ParseError("pivot: must be a positive integer");
    doc.pivot = j["pivot"].get<std::size_t>();
  }
  if (j.contains("flow")) {
    const json& f = j["flow"];
    if (!f.is_object()) throw ParseError("flow: must be an object");
    FlowConfig cfg;
    if (f.contains("steps")) {
      if (!f["steps"].is_number_integer() || f["steps"].get<int>() < 1)
        throw ParseError("flow.steps: must be a positive integer");
      cfg.steps = f["steps"].get<std::size_t>();
    }
    if (f.contains("stride")) {
      if (!f["stride"].is_number_integer() || f["stride"].get<int>() < 1)
        throw ParseError("flow.stride: must be a positive integer");
      cfg.stride = f["stride"].get<std::size_t>();
    }
    if (f.contains("retraction")) {
      if (!f["retraction"].is_boolean())
        throw ParseError("flow.retraction: must be a boolean");
      cfg.retraction = f["retraction"].get<bool>();
    }
    doc.flow = cfg;
  }
  if (j.contains("H")) doc.h = parse_matrix(j["H"], "H");
  if (j.contains("matrix")) doc.matrix = parse_matrix(j["matrix"], "matrix");

  if (doc.frame && doc.ambient_dim && doc.frame->rows() != *doc.ambient_dim)
    throw ParseError("frame: row count does not match ambient_dim");
  return doc;
}

std::string serialize_result(const ResultDocument& doc) {
  json j{{"H", matrix_to_json(doc.h)},
         {"U", matrix_to_json(doc.u)},
         {"phases", doc.phases},
         {"report", report_to_json(doc.report)},
         {"version", doc.version}};
  return j.dump(2) + "\n";
}

std::string serialize_report(const MonodromyReport& report) {
  json j{{"report", report_to_json(report)}, {"version", kToolVersion}};
  return j.dump(2) + "\n";
}

std::string serialize_expm(const ExpmDocument& doc) {
  json j{{"expm", matrix_to_json(doc.expm)}, {"version", kToolVersion}};
  if (doc.expm_spectral) j["expm_spectral"] = matrix_to_json(*doc.expm_spectral);
  if (doc.disagreement) j["disagreement"] = *doc.disagreement;
  return j.dump(2) + "\n";
}

std::string serialize_matrix_document(const std::string& field,
                                      const ComplexMatrix& m) {
  json j{{field, matrix_to_json(m)}};
  return j.dump(2) + "\n";
}

}  // namespace holoflow
