#include "hhconvex/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hhconvex/errors.hpp"
#include "hhconvex/function.hpp"
#include "hhconvex/rng.hpp"

namespace hhc {

std::string_view to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::not_checked: return "not-checked";
    case HypothesisStatus::passed: return "passed";
    case HypothesisStatus::failed: return "failed";
  }
  return "?";
}

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::holds: return "holds";
    case RowStatus::violated: return "violated";
    case RowStatus::hypothesis_failed: return "hypothesis-failed";
    case RowStatus::error: return "error";
  }
  return "?";
}

namespace {

bool finite_range(const Range& r) { return std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo <= r.hi; }

bool needs_strict_q(const std::string& statement) { return statement == "thm-2.5"; }

bool any_strict_q(const std::vector<std::string>& statements) {
  return std::any_of(statements.begin(), statements.end(), needs_strict_q);
}

bool admissible(const RealFunction& f, const SweepTuple& t, bool strict_q) {
  if (!(t.a > 0.0) || !(t.b > t.a)) return false;
  if (!(t.alpha >= 0.0 && t.alpha <= 1.0)) return false;
  if (!(t.m > 0.0 && t.m <= 1.0)) return false;
  if (strict_q ? !(t.q > 1.0) : !(t.q >= 1.0)) return false;
  const Interval& d = f.domain();
  return d.contains(t.a) && d.contains(t.b) && d.contains(t.a / t.m) && d.contains(t.b / t.m);
}

std::uint64_t hypothesis_seed(std::uint64_t seed, std::size_t index) {
  return mix_seed(seed ^ mix_seed(static_cast<std::uint64_t>(index) + 0x5851f42d4c957f2dULL));
}

SweepRow evaluate_row(const SweepConfig& config, const RealFunction& f, const std::string& statement,
                      const SweepTuple& tuple, std::size_t index) {
  SweepRow row;
  row.tuple_index = index;
  row.statement_id = statement;
  row.tuple = tuple;
  try {
    if (config.check_hypothesis) {
      HypothesisRequest req;
      req.statement_id = statement;
      req.a = tuple.a;
      req.b = tuple.b;
      req.alpha = tuple.alpha;
      req.m = tuple.m;
      req.q = tuple.q;
      req.scope = config.hypothesis_scope;
      req.scheme = config.hypothesis_scheme;
      req.scheme.seed = hypothesis_seed(config.seed, index);
      row.hypothesis = check_hypothesis(f, req).holds ? HypothesisStatus::passed : HypothesisStatus::failed;
    }
    const VerificationReport r =
        evaluate_statement(statement, f, {tuple.a, tuple.b, tuple.alpha, tuple.m, tuple.q}, config.bound);
    row.lhs = r.lhs;
    row.rhs = r.rhs;
    row.margin = r.margin;
    row.tolerance = r.tolerance;
    row.holds = r.holds;
    if (row.hypothesis == HypothesisStatus::failed) {
      row.status = RowStatus::hypothesis_failed;
    } else {
      row.status = r.holds ? RowStatus::holds : RowStatus::violated;
    }
  } catch (const std::exception& e) {
    row.status = RowStatus::error;
    row.message = e.what();
  }
  return row;
}

class FunctionTable {
 public:
  explicit FunctionTable(const std::vector<std::string>& names) {
    for (const auto& name : names) {
      if (!table_.count(name)) table_.emplace(name, parse_function(name));
    }
  }
  const RealFunction& at(const std::string& name) const { return table_.at(name); }

 private:
  std::map<std::string, RealFunction> table_;
};

double& field(SweepTuple& t, int i) {
  switch (i) {
    case 0: return t.alpha;
    case 1: return t.m;
    case 2: return t.q;
    case 3: return t.a;
    default: return t.b;
  }
}

std::string csv_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json range_json(const Range& r) { return Json::array({r.lo, r.hi}); }

Json tuple_json(const SweepTuple& t) {
  return Json{{"function", t.function}, {"a", t.a}, {"b", t.b}, {"alpha", t.alpha}, {"m", t.m}, {"q", t.q}};
}

}  // namespace

void SweepConfig::validate() const {
  if (count < 1) throw DomainError("sweep count must be at least 1");
  for (const Range* r : {&a, &b, &alpha, &m, &q}) {
    if (!finite_range(*r)) throw DomainError("sweep ranges must be finite with lo <= hi");
  }
  if (!(a.lo > 0.0) || !(b.lo > 0.0)) throw DomainError("a and b ranges must be positive");
  if (!(a.lo < b.hi)) throw DomainError("a range must start below the end of the b range");
  if (!(alpha.lo >= 0.0 && alpha.hi <= 1.0)) throw DomainError("alpha range must lie in [0, 1]");
  if (!(m.lo > 0.0 && m.hi <= 1.0)) throw DomainError("m range must lie in (0, 1]");
  if (!(q.lo >= 1.0)) throw DomainError("q range must lie in [1, inf)");
  if (any_strict_q(statements) && !(q.hi > 1.0)) throw DomainError("thm-2.5 needs a q range reaching above 1");
  if (!(pin_probability >= 0.0 && pin_probability <= 1.0)) {
    throw DomainError("pin probability must lie in [0, 1]");
  }
  if (threads < 0) throw DomainError("threads must be nonnegative");
  if (max_rejections < 1) throw DomainError("max_rejections must be positive");
  if (functions.empty()) throw std::invalid_argument("sweep needs at least one function");
  if (statements.empty()) throw std::invalid_argument("sweep needs at least one statement");
  const auto& known = inequality_statements();
  for (const auto& s : statements) {
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw std::invalid_argument("unknown statement id '" + s + "'");
    }
  }
  for (const auto& f : functions) parse_function(f);
  hypothesis_scheme.validate();
}

SweepTuple draw_tuple(const SweepConfig& config, std::size_t index) {
  const FunctionTable table(config.functions);
  SeededUniform rng(config.seed, index);
  SweepTuple t;
  t.function = config.functions[rng.index(config.functions.size())];
  const RealFunction& f = table.at(t.function);
  const bool strict_q = any_strict_q(config.statements);
  for (int attempt = 0; attempt < config.max_rejections; ++attempt) {
    t.a = rng.uniform(config.a.lo, config.a.hi);
    t.b = rng.uniform(config.b.lo, config.b.hi);
    t.alpha = rng.unit() < config.pin_probability ? config.alpha.hi : rng.uniform(config.alpha.lo, config.alpha.hi);
    t.m = rng.unit() < config.pin_probability ? config.m.hi : rng.uniform(config.m.lo, config.m.hi);
    t.q = rng.uniform(config.q.lo, config.q.hi);
    if (admissible(f, t, strict_q)) return t;
  }
  throw DomainError("no admissible tuple for index " + std::to_string(index) + " after " +
                    std::to_string(config.max_rejections) + " draws");
}

std::optional<ShrunkCounterexample> shrink(const SweepConfig& config, const std::string& statement,
                                           const SweepTuple& tuple, std::size_t tuple_index) {
  const RealFunction f = parse_function(tuple.function);
  const bool strict_q = needs_strict_q(statement);
  int evaluations = 0;
  SweepRow last;
  auto violates = [&](const SweepTuple& t) {
    if (!admissible(f, t, strict_q)) return false;
    ++evaluations;
    SweepRow row = evaluate_row(config, f, statement, t, tuple_index);
    if (row.status != RowStatus::violated) return false;
    last = std::move(row);
    return true;
  };

  SweepTuple cur = tuple;
  if (!violates(cur)) return std::nullopt;
  SweepRow best = last;

  const double targets[] = {config.alpha.hi, config.m.hi, config.q.lo, config.a.lo, config.b.lo};
  for (int round = 0; round < 3; ++round) {
    bool moved = false;
    for (int i = 0; i < 5; ++i) {
      const double start = field(cur, i);
      if (start == targets[i]) continue;
      SweepTuple probe = cur;
      field(probe, i) = targets[i];
      if (violates(probe)) {
        cur = probe;
        best = last;
        moved = true;
        continue;
      }
      double bad = start;
      double good = targets[i];
      while (std::fabs(good - bad) > 1e-6 * std::max(1.0, std::fabs(bad))) {
        const double mid = 0.5 * (bad + good);
        field(probe, i) = mid;
        if (violates(probe)) {
          bad = mid;
          best = last;
        } else {
          good = mid;
        }
      }
      if (bad != start) {
        field(cur, i) = bad;
        moved = true;
      }
    }
    if (!moved) break;
  }

  ShrunkCounterexample out;
  out.tuple_index = tuple_index;
  out.statement_id = statement;
  out.original = tuple;
  out.minimized = cur;
  out.lhs = best.lhs;
  out.rhs = best.rhs;
  out.margin = best.margin;
  out.evaluations = evaluations;
  return out;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  SweepResult result;
  result.config = config;

  const std::size_t n = static_cast<std::size_t>(config.count);
  std::vector<SweepTuple> tuples;
  tuples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tuples.push_back(draw_tuple(config, i));

  const FunctionTable table(config.functions);
  const std::size_t per_tuple = config.statements.size();
  result.rows.resize(n * per_tuple);

  unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < n; i = next++) {
      const RealFunction& f = table.at(tuples[i].function);
      for (std::size_t s = 0; s < per_tuple; ++s) {
        result.rows[i * per_tuple + s] = evaluate_row(config, f, config.statements[s], tuples[i], i);
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (const SweepRow& row : result.rows) {
    switch (row.status) {
      case RowStatus::violated:
        if (static_cast<int>(result.counterexamples.size()) < config.max_shrink) {
          if (auto c = shrink(config, row.statement_id, row.tuple, row.tuple_index)) {
            result.counterexamples.push_back(std::move(*c));
          }
        }
        ++result.violations;
        break;
      case RowStatus::hypothesis_failed: ++result.hypothesis_failures; break;
      case RowStatus::error: ++result.errors; break;
      case RowStatus::holds: break;
    }
  }
  return result;
}

Json config_to_json(const SweepConfig& c) {
  return Json{{"seed", c.seed},
              {"count", c.count},
              {"ranges", {{"a", range_json(c.a)},
                          {"b", range_json(c.b)},
                          {"alpha", range_json(c.alpha)},
                          {"m", range_json(c.m)},
                          {"q", range_json(c.q)}}},
              {"functions", c.functions},
              {"statements", c.statements},
              {"pin_probability", c.pin_probability},
              {"check_hypothesis", c.check_hypothesis},
              {"hypothesis_scope", std::string(to_string(c.hypothesis_scope))},
              {"hypothesis_scheme", {{"grid_density", c.hypothesis_scheme.grid_density},
                                     {"random_count", c.hypothesis_scheme.random_count},
                                     {"slack", c.hypothesis_scheme.slack}}},
              {"tolerance", c.bound.tolerance},
              {"thm24_factor", std::string(to_string(c.bound.thm24_factor))}};
}

Json sweep_to_json(const SweepResult& result) {
  Json rows = Json::array();
  for (const SweepRow& r : result.rows) {
    Json row{{"tuple_index", r.tuple_index},
             {"statement_id", r.statement_id},
             {"inputs", tuple_json(r.tuple)},
             {"lhs", json_number(r.lhs)},
             {"rhs", json_number(r.rhs)},
             {"margin", json_number(r.margin)},
             {"tolerance", json_number(r.tolerance)},
             {"holds", r.holds},
             {"hypothesis", std::string(to_string(r.hypothesis))},
             {"status", std::string(to_string(r.status))}};
    if (!r.message.empty()) row["message"] = r.message;
    rows.push_back(std::move(row));
  }
  Json shrunk = Json::array();
  for (const ShrunkCounterexample& c : result.counterexamples) {
    shrunk.push_back({{"tuple_index", c.tuple_index},
                      {"statement_id", c.statement_id},
                      {"original", tuple_json(c.original)},
                      {"minimized", tuple_json(c.minimized)},
                      {"lhs", json_number(c.lhs)},
                      {"rhs", json_number(c.rhs)},
                      {"margin", json_number(c.margin)},
                      {"evaluations", c.evaluations}});
  }
  return Json{{"config", config_to_json(result.config)},
              {"summary", {{"rows", result.rows.size()},
                           {"violations", result.violations},
                           {"hypothesis_failures", result.hypothesis_failures},
                           {"errors", result.errors},
                           {"ok", result.ok()}}},
              {"rows", std::move(rows)},
              {"counterexamples", std::move(shrunk)}};
}

const std::vector<std::string>& sweep_csv_columns() {
  static const std::vector<std::string> cols{"tuple_index", "statement_id", "function", "a",
                                             "b",           "alpha",        "m",        "q",
                                             "lhs",         "rhs",          "margin",   "tolerance",
                                             "holds",       "hypothesis",   "status",   "message"};
  return cols;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::ostringstream out;
  auto header = [&out](const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
  };
  auto tuple_cells = [&out](const SweepTuple& t) {
    out << csv_text(t.function) << ',' << csv_real(t.a) << ',' << csv_real(t.b) << ','
        << csv_real(t.alpha) << ',' << csv_real(t.m) << ',' << csv_real(t.q);
  };
  header(sweep_csv_columns());
  for (const SweepRow& r : result.rows) {
    out << r.tuple_index << ',' << r.statement_id << ',';
    tuple_cells(r.tuple);
    out << ',' << csv_real(r.lhs) << ',' << csv_real(r.rhs) << ',' << csv_real(r.margin) << ','
        << csv_real(r.tolerance) << ',' << (r.holds ? "true" : "false") << ',' << to_string(r.hypothesis)
        << ',' << to_string(r.status) << ',' << csv_text(r.message) << '\n';
  }
  if (!result.counterexamples.empty()) {
    out << "# minimized counterexamples\n";
    header({"tuple_index", "statement_id", "function", "a", "b", "alpha", "m", "q", "lhs", "rhs",
            "margin", "evaluations"});
    for (const ShrunkCounterexample& c : result.counterexamples) {
      out << c.tuple_index << ',' << c.statement_id << ',';
      tuple_cells(c.minimized);
      out << ',' << csv_real(c.lhs) << ',' << csv_real(c.rhs) << ',' << csv_real(c.margin) << ','
          << c.evaluations << '\n';
    }
  }
  return out.str();
}

}  // namespace hhc
