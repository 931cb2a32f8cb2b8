#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hhconvex/inequalities.hpp"
#include "hhconvex/report.hpp"

namespace hhc {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/// Seeded fuzz sweep over (statement, function, a, b, alpha, m, q).
///
/// Tuple i is drawn from its own stream (seed, i), so the rows do not
/// depend on the worker count. Each tuple is rejection-sampled until
/// a < b, a, b, a/m and b/m lie in the function's domain and q is admissible
/// for every requested statement (q > 1 when thm-2.5 is present).
struct SweepConfig {
  std::uint64_t seed = 42;
  int count = 100;
  Range a{0.5, 4.0};
  Range b{0.5, 8.0};
  Range alpha{0.0, 1.0};
  Range m{0.1, 1.0};
  Range q{1.0, 4.0};
  std::vector<std::string> functions{"pow:0.5"};
  std::vector<std::string> statements{"thm-2.3"};
  /// Probability with which alpha and m are each set to their upper range
  /// end instead of drawn uniformly. With the default ranges this is
  /// alpha = 1 or m = 1, the strata where most hypotheses can hold.
  double pin_probability = 0.0;
  bool check_hypothesis = false;
  HypothesisScope hypothesis_scope = HypothesisScope::local;
  SampleScheme hypothesis_scheme{17, 2000, 0, 1e-12, true};
  BoundOptions bound{};
  /// 0 selects std::thread::hardware_concurrency().
  int threads = 0;
  /// Number of violations passed to the shrinker (the rest are only listed).
  int max_shrink = 10;
  int max_rejections = 1000;

  /// Throws DomainError for inadmissible ranges or counts and
  /// std::invalid_argument for unknown statements or functions.
  void validate() const;
};

struct SweepTuple {
  std::string function;
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.0;
  double m = 0.0;
  double q = 0.0;
};

enum class HypothesisStatus { not_checked, passed, failed };
std::string_view to_string(HypothesisStatus s);

enum class RowStatus { holds, violated, hypothesis_failed, error };
std::string_view to_string(RowStatus s);

struct SweepRow {
  std::size_t tuple_index = 0;
  std::string statement_id;
  SweepTuple tuple;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool holds = false;
  HypothesisStatus hypothesis = HypothesisStatus::not_checked;
  RowStatus status = RowStatus::holds;
  std::string message;
};

struct ShrunkCounterexample {
  std::size_t tuple_index = 0;
  std::string statement_id;
  SweepTuple original;
  SweepTuple minimized;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  int evaluations = 0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::vector<ShrunkCounterexample> counterexamples;
  std::size_t violations = 0;
  std::size_t hypothesis_failures = 0;
  std::size_t errors = 0;

  /// True iff no row is violated or errored.
  bool ok() const { return violations == 0 && errors == 0; }
};

/// Draws tuple `index` of the sweep. Throws DomainError when
/// max_rejections draws in a row are inadmissible.
SweepTuple draw_tuple(const SweepConfig& config, std::size_t index);

SweepResult run_sweep(const SweepConfig& config);

/// Shrinks a violating tuple toward (alpha, m, q, a, b) =
/// (alpha.hi, m.hi, q.lo, a.lo, b.lo): for each parameter in turn, the
/// distance to a non-violating neighbor is halved while the tuple keeps
/// violating. Returns nullopt if `tuple` does not violate.
/// `tuple_index` selects the hypothesis sampling seed, as in the sweep.
std::optional<ShrunkCounterexample> shrink(const SweepConfig& config, const std::string& statement_id,
                                           const SweepTuple& tuple, std::size_t tuple_index = 0);

Json config_to_json(const SweepConfig& config);
Json sweep_to_json(const SweepResult& result);

/// Column order of the row table in sweep_to_csv.
const std::vector<std::string>& sweep_csv_columns();

/// Row table, then (if any) a "# minimized counterexamples" line followed
/// by its own header and rows. Reals use 17 significant digits.
std::string sweep_to_csv(const SweepResult& result);

}  // namespace hhc
