#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hhconvex/coefficients.hpp"
#include "hhconvex/errors.hpp"
#include "hhconvex/inequalities.hpp"
#include "hhconvex/means.hpp"
#include "hhconvex/sweep.hpp"

namespace hhcheck {
namespace {

using hhc::Json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  double tolerance = hhc::kDefaultTolerance;
  bool check_hypothesis = false;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 42;
  std::string scope = "local";
  std::string thm24_factor = "proof";
};

struct VerifyArgs {
  std::string statement;
  std::string fn = "identity";
  double a = 1.0;
  double b = 2.0;
  double alpha = 1.0;
  double m = 1.0;
  double q = 1.0;
  std::optional<double> p;
};

struct CoeffArgs {
  std::string family;
  double alpha = 0.0;
  double q = 1.0;
  double a = 1.0;
  double b = 2.0;
  bool oracle = false;
};

struct MeansArgs {
  double a = 1.0;
  double b = 2.0;
  double alpha = 0.5;
  double q = 2.0;
  double p = 2.0;
};

const std::vector<std::string>& prop_statements() {
  static const std::vector<std::string> ids{"prop-3.1", "prop-3.2", "prop-3.3", "prop-3.4"};
  return ids;
}

std::vector<std::string> verify_statements() {
  std::vector<std::string> ids = hhc::inequality_statements();
  ids.insert(ids.end(), prop_statements().begin(), prop_statements().end());
  return ids;
}

hhc::HypothesisScope parse_scope(const std::string& s) {
  return s == "wide" ? hhc::HypothesisScope::wide : hhc::HypothesisScope::local;
}

hhc::BoundOptions bound_options(const Globals& g) {
  hhc::BoundOptions o;
  o.tolerance = g.tolerance;
  o.thm24_factor = g.thm24_factor == "printed" ? hhc::Thm24Factor::printed : hhc::Thm24Factor::proof;
  return o;
}

// Relative --output paths resolve against HHCHECK_OUTPUT_DIR when it is set.
std::filesystem::path output_path(const std::string& output) {
  std::filesystem::path path(output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("HHCHECK_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  return path;
}

void emit(const Globals& g, const std::string& text, std::ostream& out) {
  if (g.output.empty()) {
    out << text;
    return;
  }
  const auto path = output_path(g.output);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + path.string() + "'");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing output file '" + path.string() + "'");
}

void emit_json(const Globals& g, const Json& j, std::ostream& out) { emit(g, j.dump(2) + "\n", out); }

void require_json(const Globals& g, const char* command) {
  if (g.format != "json") {
    throw std::invalid_argument(std::string("--format csv is only available for sweep, not ") + command);
  }
}

// ---------------------------------------------------------------------------

int cmd_verify(const Globals& g, const VerifyArgs& v, std::ostream& out) {
  require_json(g, "verify");
  const hhc::BoundOptions options = bound_options(g);
  const bool is_prop = v.statement.rfind("prop-", 0) == 0;

  hhc::VerificationReport report;
  std::optional<hhc::VerificationReport> hypothesis;
  hhc::SampleScheme scheme;
  scheme.seed = g.seed;

  if (is_prop) {
    if (v.statement == "prop-3.1") {
      report = hhc::check_prop31(v.a, v.b, v.alpha, options.tolerance);
    } else if (v.statement == "prop-3.2") {
      report = hhc::check_prop32(v.a, v.b, v.alpha, v.q, options.tolerance);
    } else if (v.statement == "prop-3.3") {
      report = hhc::check_prop33(v.a, v.b, v.alpha, v.q, options);
    } else {
      const double p = v.p ? *v.p : hhc::conjugate_exponent(v.q);
      report = hhc::check_prop34(v.a, v.b, v.alpha, v.q, p, options.tolerance);
    }
    if (g.check_hypothesis) hypothesis = hhc::check_prop_hypothesis(v.a, v.b, v.alpha, scheme);
  } else {
    const hhc::RealFunction f = hhc::parse_function(v.fn);
    report = hhc::evaluate_statement(v.statement, f, {v.a, v.b, v.alpha, v.m, v.q}, options);
    if (g.check_hypothesis) {
      hhc::HypothesisRequest req;
      req.statement_id = v.statement;
      req.a = v.a;
      req.b = v.b;
      req.alpha = v.alpha;
      req.m = v.m;
      req.q = v.q;
      req.scope = parse_scope(g.scope);
      req.scheme = scheme;
      hypothesis = hhc::check_hypothesis(f, req);
    }
  }

  Json j = hhc::to_json(report);
  std::string status = report.holds ? "holds" : "violated";
  if (hypothesis) {
    j["hypothesis"] = hhc::to_json(*hypothesis);
    if (!hypothesis->holds) status = "hypothesis-failed";
  }
  j["status"] = status;
  emit_json(g, j, out);
  return status == "violated" ? kViolated : kHolds;
}

Json coefficient_entry(const hhc::Coefficient& c, const std::optional<hhc::Coefficient>& oracle) {
  Json e{{"name", c.name}, {"value", hhc::json_number(c.value)},
         {"provenance", std::string(hhc::to_string(c.provenance))}};
  if (oracle) {
    const hhc::OracleComparison cmp = hhc::compare_with_oracle(c, *oracle);
    e["oracle"] = hhc::json_number(oracle->value);
    e["oracle_error_estimate"] = hhc::json_number(oracle->error_estimate);
    e["relative_difference"] = hhc::json_number(cmp.relative_difference);
    e["agree"] = cmp.agree;
  }
  return e;
}

int cmd_coeff(const Globals& g, const CoeffArgs& c, std::ostream& out) {
  require_json(g, "coeff");
  std::vector<std::pair<hhc::Coefficient, std::optional<hhc::Coefficient>>> values;
  Json inputs;
  Json cross = Json::object();
  if (c.family == "lambda" || c.family == "mu" || c.family == "nu") {
    inputs = {{"alpha", c.alpha}, {"q", c.q}, {"a", c.a}, {"b", c.b}};
    using Fn = hhc::Coefficient (*)(double, double, double, double);
    Fn closed = c.family == "lambda" ? hhc::lambda_coeff : c.family == "mu" ? hhc::mu_coeff : hhc::nu_coeff;
    Fn oracle = c.family == "lambda" ? hhc::lambda_coeff_oracle
                : c.family == "mu"   ? hhc::mu_coeff_oracle
                                     : hhc::nu_coeff_oracle;
    values.emplace_back(closed(c.alpha, c.q, c.a, c.b),
                        c.oracle ? std::optional(oracle(c.alpha, c.q, c.a, c.b)) : std::nullopt);
  } else if (c.family == "lambda123") {
    inputs = {{"a", c.a}, {"b", c.b}};
    const hhc::Lambda123 l = hhc::lambda123(c.a, c.b);
    std::optional<hhc::Lambda123> o;
    if (c.oracle) o = hhc::lambda123_oracle(c.a, c.b);
    values.emplace_back(l.lambda1, o ? std::optional(o->lambda1) : std::nullopt);
    values.emplace_back(l.lambda2, o ? std::optional(o->lambda2) : std::nullopt);
    values.emplace_back(l.lambda3, o ? std::optional(o->lambda3) : std::nullopt);
    cross["lambda3_direct"] = hhc::json_number(hhc::lambda3_direct(c.a, c.b));
  } else if (c.family == "mu12") {
    inputs = {{"q", c.q}, {"a", c.a}, {"b", c.b}};
    const hhc::Mu12 m = hhc::mu12(c.q, c.a, c.b);
    std::optional<hhc::Mu12> o;
    if (c.oracle) o = hhc::mu12_oracle(c.q, c.a, c.b);
    values.emplace_back(m.mu1, o ? std::optional(o->mu1) : std::nullopt);
    values.emplace_back(m.mu2, o ? std::optional(o->mu2) : std::nullopt);
  } else {
    throw std::invalid_argument("unknown coefficient family '" + c.family + "'");
  }

  Json list = Json::array();
  bool agree = true;
  for (const auto& [closed, oracle] : values) {
    Json e = coefficient_entry(closed, oracle);
    if (e.contains("agree") && !e["agree"].get<bool>()) agree = false;
    list.push_back(std::move(e));
  }
  Json j{{"family", c.family}, {"inputs", inputs}, {"values", list}};
  if (!cross.empty()) j["cross_checks"] = cross;
  if (c.oracle) j["oracle_agreement"] = agree;
  emit_json(g, j, out);
  return agree ? kHolds : kViolated;
}

int cmd_means(const Globals& g, const MeansArgs& m, std::ostream& out) {
  require_json(g, "means");
  hhc::MeanParams params{m.a, m.b, m.alpha, m.q, m.p};
  Json means = Json::object();
  for (hhc::MeanKind kind : {hhc::MeanKind::weighted_arithmetic, hhc::MeanKind::arithmetic,
                             hhc::MeanKind::geometric, hhc::MeanKind::harmonic, hhc::MeanKind::logarithmic_p}) {
    means[std::string(hhc::to_string(kind))] = hhc::json_number(hhc::mean(kind, params));
  }

  const hhc::BoundOptions options = bound_options(g);
  Json props = Json::array();
  bool all_hold = true;
  auto run = [&](const std::string& id, auto&& evaluate) {
    try {
      const hhc::VerificationReport r = evaluate();
      all_hold = all_hold && r.holds;
      props.push_back(hhc::to_json(r));
    } catch (const hhc::DomainError& e) {
      props.push_back({{"statement_id", id}, {"skipped", e.what()}});
    }
  };
  run("prop-3.1", [&] { return hhc::check_prop31(m.a, m.b, m.alpha, options.tolerance); });
  run("prop-3.2", [&] { return hhc::check_prop32(m.a, m.b, m.alpha, m.q, options.tolerance); });
  run("prop-3.3", [&] { return hhc::check_prop33(m.a, m.b, m.alpha, m.q, options); });
  run("prop-3.4", [&] { return hhc::check_prop34(m.a, m.b, m.alpha, m.q, m.p, options.tolerance); });

  Json j{{"inputs", {{"a", m.a}, {"b", m.b}, {"alpha", m.alpha}, {"q", m.q}, {"p", m.p}}},
         {"means", means},
         {"propositions", props}};
  emit_json(g, j, out);
  return all_hold ? kHolds : kViolated;
}

int cmd_sweep(const Globals& g, hhc::SweepConfig config, std::ostream& out) {
  config.seed = g.seed;
  config.bound = bound_options(g);
  config.check_hypothesis = g.check_hypothesis;
  config.hypothesis_scope = parse_scope(g.scope);
  const hhc::SweepResult result = hhc::run_sweep(config);
  if (g.format == "csv") {
    emit(g, hhc::sweep_to_csv(result), out);
  } else {
    emit_json(g, hhc::sweep_to_json(result), out);
  }
  return result.ok() ? kHolds : kViolated;
}

void add_range(CLI::App* app, const std::string& name, hhc::Range& range, const std::string& what) {
  app->add_option_function<std::vector<double>>(
         name,
         [&range](const std::vector<double>& v) {
           range.lo = v[0];
           range.hi = v[1];
         },
         what + " range LO HI")
      ->expected(2);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks of trapezoid-type bounds under harmonic (alpha, m)-convexity",
               "hhcheck"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "hhcheck 0.1.0");

  Globals g;
  app.add_option("--tolerance", g.tolerance, "Margin tolerance (absolute)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_flag("--check-hypothesis", g.check_hypothesis,
               "Sample the convexity hypothesis before judging a bound");
  app.add_option("--hypothesis-scope", g.scope, "Where hypotheses are sampled: local = [a, b/m], wide = [a/2, 2b/m]")
      ->check(CLI::IsMember({"local", "wide"}))
      ->capture_default_str();
  app.add_option("--thm24-factor", g.thm24_factor, "Leading factor of the thm-2.4 bound")
      ->check(CLI::IsMember({"proof", "printed"}))
      ->capture_default_str();
  app.add_option("--output", g.output, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format (csv only for sweep)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampling")->capture_default_str();

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Evaluate one statement and print its report");
  verify_cmd->add_option("statement", verify.statement, "Statement id")
      ->required()
      ->check(CLI::IsMember(verify_statements()));
  verify_cmd->add_option("--fn", verify.fn, "Registry function (pow:s, square, identity, neg-identity, log, exp, const:c)")
      ->capture_default_str();
  verify_cmd->add_option("--a", verify.a)->capture_default_str();
  verify_cmd->add_option("--b", verify.b)->capture_default_str();
  verify_cmd->add_option("--alpha", verify.alpha)->capture_default_str();
  verify_cmd->add_option("--m", verify.m)->capture_default_str();
  verify_cmd->add_option("--q", verify.q)->capture_default_str();
  verify_cmd->add_option("--p", verify.p, "Conjugate exponent for prop-3.4 (default q/(q-1))");

  CoeffArgs coeff;
  CLI::App* coeff_cmd = app.add_subcommand("coeff", "Print a coefficient family, optionally with its oracle");
  coeff_cmd->add_option("family", coeff.family, "lambda | mu | nu | lambda123 | mu12")
      ->required()
      ->check(CLI::IsMember({"lambda", "mu", "nu", "lambda123", "mu12"}));
  coeff_cmd->add_option("--alpha", coeff.alpha)->capture_default_str();
  coeff_cmd->add_option("--q", coeff.q)->capture_default_str();
  coeff_cmd->add_option("--a", coeff.a)->capture_default_str();
  coeff_cmd->add_option("--b", coeff.b)->capture_default_str();
  coeff_cmd->add_flag("--oracle", coeff.oracle, "Also integrate the defining integral numerically");

  MeansArgs means;
  CLI::App* means_cmd = app.add_subcommand("means", "Print the special means and the four power-mean inequalities");
  means_cmd->add_option("--a", means.a)->capture_default_str();
  means_cmd->add_option("--b", means.b)->capture_default_str();
  means_cmd->add_option("--alpha", means.alpha)->capture_default_str();
  means_cmd->add_option("--q", means.q)->capture_default_str();
  means_cmd->add_option("--p", means.p)->capture_default_str();

  hhc::SweepConfig sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Seeded fuzz sweep; exit 0 iff no bound is violated");
  sweep_cmd->add_option("--count", sweep.count, "Number of tuples")->capture_default_str();
  sweep_cmd->add_option("--fn", sweep.functions, "Registry functions (repeatable)")->capture_default_str();
  sweep_cmd->add_option("--statement", sweep.statements, "Statement ids (repeatable)")
      ->check(CLI::IsMember(hhc::inequality_statements()))
      ->capture_default_str();
  add_range(sweep_cmd, "--a-range", sweep.a, "a");
  add_range(sweep_cmd, "--b-range", sweep.b, "b");
  add_range(sweep_cmd, "--alpha-range", sweep.alpha, "alpha");
  add_range(sweep_cmd, "--m-range", sweep.m, "m");
  add_range(sweep_cmd, "--q-range", sweep.q, "q");
  sweep_cmd->add_option("--pin-probability", sweep.pin_probability,
                        "Probability of pinning alpha and m to their upper range ends")
      ->capture_default_str();
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = hardware)")->capture_default_str();
  sweep_cmd->add_option("--max-shrink", sweep.max_shrink, "Violations passed to the shrinker")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "hhcheck: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(g, verify, out);
    if (*coeff_cmd) return cmd_coeff(g, coeff, out);
    if (*means_cmd) return cmd_means(g, means, out);
    if (*sweep_cmd) return cmd_sweep(g, sweep, out);
  } catch (const hhc::DomainError& e) {
    err << "hhcheck: domain error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "hhcheck: " << e.what() << "\n";
  } catch (const IoError& e) {
    err << "hhcheck: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "hhcheck: numerical failure: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace hhcheck
