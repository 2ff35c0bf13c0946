#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "surfising/multipoly.hpp"

namespace surfising {

/// One machine-readable result record. Polynomials are stored as lists of
/// [[[variable name, exponent], ...], re, im] terms.
struct ResultBlock {
  std::string command;
  std::string fixture;
  std::string method;
  std::string quantity;  // "E", "P", "Z", ...
  std::optional<MultiPoly> snapped;
  std::optional<MultiPoly> raw;
  std::optional<double> scalar;
  double residual = 0.0;
  std::optional<double> seconds;
  nlohmann::json diagnostics = nlohmann::json::object();
  VariableNamer namer = default_variable_name;
};

nlohmann::json to_json(const ResultBlock& b);
nlohmann::json poly_to_json(const MultiPoly& p, const VariableNamer& namer);

struct CompareReport {
  bool comparable = true;
  std::string reason;  // why not comparable
  double max_deviation = 0.0;
  std::vector<std::string> offending;  // monomials whose coefficients differ
  bool equal() const { return comparable && offending.empty(); }
};

/// Coefficientwise comparison of the snapped results (or scalars) of two
/// blocks; terms are matched by variable names.
CompareReport compare(const nlohmann::json& a, const nlohmann::json& b, double tol = 1e-9);

}  // namespace surfising
