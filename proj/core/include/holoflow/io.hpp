// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "holoflow/flow.hpp"
#include "holoflow/holonomy.hpp"
#include "holoflow/matrix.hpp"

namespace holoflow {

inline constexpr const char* kToolVersion = "holoflow 1.0.0";

/// Raw problem document, as parsed. Field validation beyond shape (unitarity,
/// orthonormality) happens when the strong types are constructed.
struct ProblemDocument {
  std::optional<std::size_t> ambient_dim;
  std::optional<ComplexMatrix> frame;    // n x m
  std::optional<ComplexMatrix> g0;       // m x m
  std::optional<ComplexMatrix> omega;    // 2 x 2
  int winding = 0;
  std::optional<std::size_t> pivot;      // 1-based
  std::optional<FlowConfig> flow;
  std::optional<ComplexMatrix> h;        // for `verify`
  std::optional<ComplexMatrix> matrix;   // for `expm`
};

struct ResultDocument {
  ComplexMatrix h;
  ComplexMatrix u;
  std::vector<double> phases;
  MonodromyReport report;
  std::string version = kToolVersion;
};

/// Parses a UTF-8 JSON document; complex scalars are [re, im] pairs,
/// matrices row-major nested arrays. Throws ParseError with a message naming
/// the offending field.
ProblemDocument parse_problem_document(const std::string& text);

struct ExpmDocument {
  ComplexMatrix expm;
  std::optional<ComplexMatrix> expm_spectral;  // only for skew-Hermitian input
  std::optional<double> disagreement;          // Frobenius gap of the two routes
};

std::string serialize_result(const ResultDocument& doc);
std::string serialize_report(const MonodromyReport& report);
std::string serialize_expm(const ExpmDocument& doc);

/// Round-trips through parse_problem_document for the matrix-bearing fields.
std::string serialize_matrix_document(const std::string& field,
                                      const ComplexMatrix& m);

}  // namespace holoflow
