#include "hhconvex/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>

#include "hhconvex/errors.hpp"
#include "hhconvex/specfun.hpp"

namespace hhc {
namespace {

// 15-point Kronrod abscissae (positive half, descending) and weights; the
// odd-indexed nodes are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  double abs_value;  // integral of |f|, sets the round-off floor
};

struct ByError {
  bool operator()(const Segment& x, const Segment& y) const { return x.error < y.error; }
};

double checked_eval(const ScalarFunction& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "integrand is not finite at x = " << x;
    throw EvaluationError(msg.str(), x);
  }
  return v;
}

// QUADPACK qk15 with its error heuristic.
Segment gauss_kronrod(const ScalarFunction& f, double lo, double hi, int& evaluations) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kUflow = std::numeric_limits<double>::min();

  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double abs_half = std::fabs(half);

  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  const double fc = checked_eval(f, center);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];
  double result_abs = std::fabs(result_kronrod);

  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double dx = half * kXgk[jtw];
    const double v1 = checked_eval(f, center - dx);
    const double v2 = checked_eval(f, center + dx);
    f1[jtw] = v1;
    f2[jtw] = v2;
    result_gauss += kWg[j] * (v1 + v2);
    result_kronrod += kWgk[jtw] * (v1 + v2);
    result_abs += kWgk[jtw] * (std::fabs(v1) + std::fabs(v2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double dx = half * kXgk[jtwm1];
    const double v1 = checked_eval(f, center - dx);
    const double v2 = checked_eval(f, center + dx);
    f1[jtwm1] = v1;
    f2[jtwm1] = v2;
    result_kronrod += kWgk[jtwm1] * (v1 + v2);
    result_abs += kWgk[jtwm1] * (std::fabs(v1) + std::fabs(v2));
  }
  evaluations += 15;

  const double mean = result_kronrod * 0.5;
  double result_asc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    result_asc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));
  }

  const double value = result_kronrod * half;
  result_abs *= abs_half;
  result_asc *= abs_half;
  double error = std::fabs((result_kronrod - result_gauss) * half);
  if (result_asc != 0.0 && error != 0.0) {
    error = result_asc * std::min(1.0, std::pow(200.0 * error / result_asc, 1.5));
  }
  if (result_abs > kUflow / (50.0 * kEps)) {
    error = std::max(kEps * 50.0 * result_abs, error);
  }
  return {lo, hi, value, error, result_abs};
}

}  // namespace

QuadratureResult integrate(const ScalarFunction& f, double lo, double hi,
                           const QuadratureSpec& spec) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw DomainError("integrate: requires finite lo < hi");
  }
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0)) {
    throw DomainError("integrate: abs_tol and rel_tol must be positive");
  }
  if (spec.max_subdivisions < 1) {
    throw DomainError("integrate: max_subdivisions must be positive");
  }

  std::vector<double> cuts = spec.breakpoints;
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (double c : cuts) {
    if (!(c > lo && c < hi)) {
      throw DomainError("integrate: breakpoints must lie strictly inside (lo, hi)");
    }
  }
  cuts.insert(cuts.begin(), lo);
  cuts.push_back(hi);

  QuadratureResult out;
  std::vector<Segment> heap;
  heap.reserve(static_cast<std::size_t>(spec.max_subdivisions) + cuts.size());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    heap.push_back(gauss_kronrod(f, cuts[i], cuts[i + 1], out.evaluations));
  }
  std::make_heap(heap.begin(), heap.end(), ByError{});

  auto exact_totals = [&heap]() {
    CompensatedSum value;
    CompensatedSum error;
    CompensatedSum abs_value;
    for (const Segment& s : heap) {
      value.add(s.value);
      error.add(s.error);
      abs_value.add(s.abs_value);
    }
    return std::tuple{value.value(), error.value(), abs_value.value()};
  };

  auto [value, error, abs_value] = exact_totals();
  // Besides the requested tolerance, accept an estimate at the round-off
  // floor: with heavy cancellation rel_tol * |value| can sit below what
  // double precision resolves.
  constexpr double kRoundoff = 100.0 * std::numeric_limits<double>::epsilon();
  auto converged = [&spec](double v, double e, double av) {
    return e <= std::max({spec.abs_tol, spec.rel_tol * std::fabs(v), kRoundoff * av});
  };
  while (!converged(value, error, abs_value)) {
    if (static_cast<int>(heap.size()) >= spec.max_subdivisions) {
      std::tie(value, error, abs_value) = exact_totals();
      if (converged(value, error, abs_value)) break;
      std::ostringstream msg;
      msg.precision(6);
      msg << "integrate: subdivision budget (" << spec.max_subdivisions
          << ") exhausted with error estimate " << error;
      throw AccuracyError(msg.str(), value, error);
    }
    std::pop_heap(heap.begin(), heap.end(), ByError{});
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      // Interval can no longer be split in floating point.
      throw AccuracyError("integrate: interval collapsed before tolerance was met",
                          value, error);
    }
    const Segment left = gauss_kronrod(f, worst.lo, mid, out.evaluations);
    const Segment right = gauss_kronrod(f, mid, worst.hi, out.evaluations);
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), ByError{});
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), ByError{});
    value += (left.value + right.value) - worst.value;
    error += (left.error + right.error) - worst.error;
    abs_value += (left.abs_value + right.abs_value) - worst.abs_value;
    if (converged(value, error, abs_value)) {
      // Running sums drift; confirm against an exact recount.
      std::tie(value, error, abs_value) = exact_totals();
    }
  }

  out.value = value;
  out.error = error;
  out.subdivisions = static_cast<int>(heap.size());
  return out;
}

}  // namespace hhc
