#include "hhconvex/function.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "hhconvex/errors.hpp"

namespace hhc {

bool Interval::contains(double x) const {
  if (!std::isfinite(x)) return false;
  const bool above = lo_open || std::isinf(lo) ? x > lo : x >= lo;
  const bool below = hi_open || std::isinf(hi) ? x < hi : x <= hi;
  return above && below;
}

bool Interval::bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

std::string Interval::to_string() const {
  std::string out = lo_open ? "(" : "[";
  out += format_real(lo);
  out += ", ";
  out += std::isinf(hi) ? std::string("inf") : format_real(hi);
  out += hi_open ? ")" : "]";
  return out;
}

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

RealFunction::RealFunction(std::string name, std::vector<double> params, Map eval,
                           std::optional<Map> derivative, Interval domain)
    : name_(std::move(name)),
      params_(std::move(params)),
      eval_(std::move(eval)),
      derivative_(std::move(derivative)),
      domain_(domain) {}

double RealFunction::operator()(double x) const {
  if (!domain_.contains(x)) {
    throw DomainError(name_ + ": x = " + format_real(x) + " outside domain " + domain_.to_string());
  }
  const double v = eval_(x);
  if (!std::isfinite(v)) {
    throw EvaluationError(name_ + ": non-finite value at x = " + format_real(x), x);
  }
  return v;
}

double RealFunction::derivative(double x, bool* used_fallback) const {
  if (!domain_.contains(x)) {
    throw DomainError(name_ + ": derivative requested at x = " + format_real(x) +
                      " outside domain " + domain_.to_string());
  }
  if (derivative_) {
    if (used_fallback) *used_fallback = false;
    return (*derivative_)(x);
  }
  if (used_fallback) *used_fallback = true;
  const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::fabs(x));
  double lo = x - h;
  double hi = x + h;
  // One-sided near a domain edge.
  if (!domain_.contains(lo)) lo = x;
  if (!domain_.contains(hi)) hi = x;
  if (lo == hi) {
    throw DomainError(name_ + ": cannot difference at x = " + format_real(x));
  }
  return ((*this)(hi) - (*this)(lo)) / (hi - lo);
}

RealFunction derivative_power(const RealFunction& f, double q) {
  const bool fd = !f.has_derivative();
  RealFunction::Map eval = [f, q](double x) { return std::pow(std::fabs(f.derivative(x)), q); };
  RealFunction out("|d " + f.name() + "|^" + format_real(q), {q}, std::move(eval), std::nullopt,
                   f.domain());
  out.finite_differences_ = fd || f.uses_finite_differences();
  return out;
}

RealFunction make_power(double s) {
  if (!std::isfinite(s)) {
    throw std::invalid_argument("pow: exponent must be finite");
  }
  return RealFunction("pow:" + format_real(s), {s}, [s](double x) { return std::pow(x, s); },
                      [s](double x) { return s * std::pow(x, s - 1.0); },
                      Interval::positive_reals());
}

RealFunction make_square() {
  return RealFunction("square", {}, [](double x) { return x * x; },
                      [](double x) { return 2.0 * x; }, Interval::positive_reals());
}

RealFunction make_identity() {
  return RealFunction("identity", {}, [](double x) { return x; }, [](double) { return 1.0; },
                      Interval::positive_reals());
}

RealFunction make_neg_identity() {
  return RealFunction("neg-identity", {}, [](double x) { return -x; },
                      [](double) { return -1.0; }, Interval::positive_reals());
}

RealFunction make_log() {
  return RealFunction("log", {}, [](double x) { return std::log(x); },
                      [](double x) { return 1.0 / x; }, Interval::positive_reals());
}

RealFunction make_exp() {
  return RealFunction("exp", {}, [](double x) { return std::exp(x); },
                      [](double x) { return std::exp(x); }, Interval::positive_reals());
}

RealFunction make_constant(double c) {
  if (!std::isfinite(c)) {
    throw std::invalid_argument("const: value must be finite");
  }
  return RealFunction("const:" + format_real(c), {c}, [c](double) { return c; },
                      [](double) { return 0.0; }, Interval::positive_reals());
}

namespace {

double parse_parameter(std::string_view text, std::string_view address) {
  // std::from_chars for double is available in libstdc++ 11.
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw std::invalid_argument("malformed parameter in function address '" +
                                std::string(address) + "'");
  }
  return value;
}

}  // namespace

RealFunction parse_function(std::string_view address) {
  const auto colon = address.find(':');
  const std::string_view head = address.substr(0, colon);
  const bool has_param = colon != std::string_view::npos;
  const std::string_view tail = has_param ? address.substr(colon + 1) : std::string_view{};

  if (head == "pow") {
    if (!has_param) throw std::invalid_argument("pow requires an exponent, e.g. pow:0.5");
    return make_power(parse_parameter(tail, address));
  }
  if (head == "const") {
    if (!has_param) throw std::invalid_argument("const requires a value, e.g. const:0");
    return make_constant(parse_parameter(tail, address));
  }
  if (has_param) {
    throw std::invalid_argument("function '" + std::string(head) + "' takes no parameter");
  }
  if (head == "square") return make_square();
  if (head == "identity") return make_identity();
  if (head == "neg-identity") return make_neg_identity();
  if (head == "log") return make_log();
  if (head == "exp") return make_exp();
  throw std::invalid_argument("unknown function '" + std::string(address) + "'");
}

std::vector<std::string> registry_examples() {
  return {"pow:0.5", "square", "identity", "neg-identity", "log", "exp", "const:0"};
}

}  // namespace hhc
