#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hhc {

/// A real interval with independently open/closed ends. Infinite ends are
/// always treated as open.
struct Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = true;
  bool hi_open = true;

  static Interval closed(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval open(double lo, double hi) { return {lo, hi, true, true}; }
  static Interval positive_reals() { return {}; }

  bool contains(double x) const;
  bool bounded() const;
  std::string to_string() const;
};

/// A scalar function on a positive domain, optionally with its analytic
/// derivative. Evaluation outside the domain raises DomainError and a
/// non-finite value raises EvaluationError.
class RealFunction {
 public:
  using Map = std::function<double(double)>;

  RealFunction(std::string name, std::vector<double> params, Map eval,
               std::optional<Map> derivative, Interval domain);

  const std::string& name() const noexcept { return name_; }
  const std::vector<double>& params() const noexcept { return params_; }
  const Interval& domain() const noexcept { return domain_; }
  bool has_derivative() const noexcept { return derivative_.has_value(); }

  /// True when this function's values come from finite differences of some
  /// other function (see derivative_power).
  bool uses_finite_differences() const noexcept { return finite_differences_; }

  double operator()(double x) const;

  /// f'(x): analytic when available, else a central difference with step
  /// h = eps^(1/3) * max(1, |x|). `used_fallback` is set accordingly.
  double derivative(double x, bool* used_fallback = nullptr) const;

  /// Raw evaluation without the domain check, for hot loops where the
  /// caller has already validated the point.
  double eval_unchecked(double x) const { return eval_(x); }

 private:
  friend RealFunction derivative_power(const RealFunction& f, double q);

  std::string name_;
  std::vector<double> params_;
  Map eval_;
  std::optional<Map> derivative_;
  Interval domain_;
  bool finite_differences_ = false;
};

/// x -> |f'(x)|^q on f's domain; the object the derivative-based bounds
/// place their convexity hypothesis on.
RealFunction derivative_power(const RealFunction& f, double q);

/// Formats a double with 17 significant digits (round-trip safe).
std::string format_real(double value);

// ---------------------------------------------------------------------------
// Registry. Names: pow:s, square, identity, neg-identity, log, exp, const:c.

RealFunction make_power(double s);
RealFunction make_square();
RealFunction make_identity();
RealFunction make_neg_identity();
RealFunction make_log();
RealFunction make_exp();
RealFunction make_constant(double c);

/// Parses a registry address. Throws std::invalid_argument for unknown names
/// or malformed parameters.
RealFunction parse_function(std::string_view address);

/// Canonical names of the registry entries, with example parameters.
std::vector<std::string> registry_examples();

}  // namespace hhc
