#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace hhc {

using Json = nlohmann::ordered_json;

/// A violating sample from a sampling-based checker.
struct Counterexample {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Outcome of evaluating one inequality (or identity) instance.
///
/// Invariant: holds == (margin >= -tolerance), with margin = rhs - lhs.
/// `inputs` echoes everything needed to re-run the check; `terms` keeps the
/// named intermediate values (both candidates of a min, the middle term of a
/// double inequality, residuals).
struct VerificationReport {
  std::string statement_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool holds = false;
  double tolerance = 0.0;
  Json inputs = Json::object();
  std::vector<std::pair<std::string, double>> terms;
  std::vector<std::string> notes;
  std::optional<Counterexample> counterexample;

  /// Sets lhs/rhs and derives margin and holds from the tolerance.
  void set_sides(double left, double right) {
    lhs = left;
    rhs = right;
    margin = right - left;
    holds = margin >= -tolerance;
  }

  void add_term(std::string name, double value) { terms.emplace_back(std::move(name), value); }

  std::optional<double> term(const std::string& name) const {
    for (const auto& [key, value] : terms) {
      if (key == name) return value;
    }
    return std::nullopt;
  }
};

Json to_json(const VerificationReport& report);

/// A finite double as a JSON number; inf and nan as the strings "inf",
/// "-inf" and "nan".
Json json_number(double v);

}  // namespace hhc
