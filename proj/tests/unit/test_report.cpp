#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "hhconvex/report.hpp"

namespace hhc {
namespace {

TEST(VerificationReport, HoldsFollowsMarginAndTolerance) {
  VerificationReport r;
  r.tolerance = 1e-9;
  r.set_sides(1.0, 2.0);
  EXPECT_DOUBLE_EQ(r.margin, 1.0);
  EXPECT_TRUE(r.holds);
  r.set_sides(1.0 + 5e-10, 1.0);
  EXPECT_TRUE(r.holds);
  r.set_sides(1.0 + 2e-9, 1.0);
  EXPECT_FALSE(r.holds);
}

TEST(VerificationReport, Terms) {
  VerificationReport r;
  r.add_term("left", 1.5);
  r.add_term("right", 2.5);
  EXPECT_EQ(r.term("right"), 2.5);
  EXPECT_FALSE(r.term("missing").has_value());
}

TEST(ReportJson, FieldOrderAndContent) {
  VerificationReport r;
  r.statement_id = "thm-2.2";
  r.tolerance = 1e-9;
  r.inputs = Json{{"a", 1.0}, {"b", 2.0}};
  r.set_sides(1.0, 1.5);
  r.add_term("candidate_a", 1.5);
  r.notes.push_back("note");
  const Json j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"statement_id", "lhs", "rhs", "margin", "holds", "tolerance",
                                            "inputs", "terms", "notes", "counterexample"}));
  EXPECT_EQ(j["terms"]["candidate_a"], 1.5);
  EXPECT_TRUE(j["counterexample"].is_null());
  EXPECT_EQ(j["inputs"]["b"], 2.0);
}

TEST(ReportJson, Counterexample) {
  VerificationReport r;
  r.counterexample = Counterexample{1.0, 2.0, 0.5, 3.0, 2.0};
  const Json j = to_json(r);
  EXPECT_EQ(j["counterexample"]["t"], 0.5);
  EXPECT_EQ(j["counterexample"]["lhs"], 3.0);
}

TEST(JsonNumber, NonFiniteBecomeStrings) {
  EXPECT_EQ(json_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(json_number(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(json_number(std::nan("")), "nan");
  EXPECT_EQ(json_number(0.25), 0.25);
}

TEST(ReportJson, DoublesRoundTrip) {
  VerificationReport r;
  r.set_sides(1.0 / 3.0, 0.1);
  const Json back = Json::parse(to_json(r).dump());
  EXPECT_EQ(back["lhs"].get<double>(), 1.0 / 3.0);
  EXPECT_EQ(back["rhs"].get<double>(), 0.1);
}

}  // namespace
}  // namespace hhc
