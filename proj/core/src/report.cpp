#include "hhconvex/report.hpp"

#include <cmath>

namespace hhc {
Json json_number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

namespace {
constexpr auto number = json_number;
}  // namespace

Json to_json(const VerificationReport& report) {
  Json out;
  out["statement_id"] = report.statement_id;
  out["lhs"] = number(report.lhs);
  out["rhs"] = number(report.rhs);
  out["margin"] = number(report.margin);
  out["holds"] = report.holds;
  out["tolerance"] = number(report.tolerance);
  out["inputs"] = report.inputs;
  Json terms = Json::object();
  for (const auto& [name, value] : report.terms) {
    terms[name] = number(value);
  }
  out["terms"] = std::move(terms);
  out["notes"] = report.notes;
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    out["counterexample"] = {{"x", number(c.x)}, {"y", number(c.y)}, {"t", number(c.t)},
                             {"lhs", number(c.lhs)}, {"rhs", number(c.rhs)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

}  // namespace hhc
