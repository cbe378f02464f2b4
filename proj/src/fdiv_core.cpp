#include "fdiv/fdiv_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fdiv/error.hpp"
#include "fdiv/numeric.hpp"

namespace fdv {

namespace {

// Five-point central difference.
double derivative(const RealFn& fn, double x, double h) {
  return (fn(x - 2 * h) - 8 * fn(x - h) + 8 * fn(x + h) - fn(x + 2 * h)) / (12 * h);
}

constexpr double kNormalizationAtOne = 1e-12;
constexpr double kDerivativeRelTolerance = 1e-6;
constexpr double kRelativeStep = 1e-3;

}  // namespace

std::vector<double> probe_grid() {
  std::vector<double> grid(kProbeGridSize);
  const double lo = std::log(kProbeGridLo);
  const double hi = std::log(kProbeGridHi);
  for (std::size_t i = 0; i < kProbeGridSize; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(kProbeGridSize - 1);
    grid[i] = std::exp(lo + t * (hi - lo));
  }
  grid.front() = kProbeGridLo;
  grid.back() = kProbeGridHi;
  return grid;
}

GeneratorDiagnostics diagnose(const Generator& gen) {
  GeneratorDiagnostics d;
  d.f_at_one = gen.f(1.0);
  d.normalized = std::abs(d.f_at_one) <= kNormalizationAtOne;
  d.convex = true;
  for (double x : probe_grid()) {
    const double h = kRelativeStep * x;
    const double d1 = gen.df(x);
    const double d2 = gen.d2f(x);
    if (!(d2 > 0.0)) d.convex = false;
    const double scale1 = std::max(std::abs(d1), x * std::abs(d2));
    const double err1 = std::abs(derivative(gen.f, x, h) - d1) / scale1;
    const double scale2 = std::max(std::abs(d2), std::abs(d1) / x);
    const double err2 = std::abs(derivative(gen.df, x, h) - d2) / scale2;
    d.df_mismatch = std::max(d.df_mismatch, std::isfinite(err1) ? err1 : HUGE_VAL);
    d.d2f_mismatch = std::max(d.d2f_mismatch, std::isfinite(err2) ? err2 : HUGE_VAL);
  }
  d.consistent = d.df_mismatch <= kDerivativeRelTolerance && d.d2f_mismatch <= kDerivativeRelTolerance;
  return d;
}

double csiszar(const Generator& gen, const DistributionPair& pair) {
  const auto p = pair.p().probs();
  const auto q = pair.q().probs();
  CompensatedSum sum;
  for (std::size_t i = 0; i < p.size(); ++i) sum += q[i] * gen.f(p[i] / q[i]);
  return sum.value();
}

double e_bound(const Generator& gen, const DistributionPair& pair) {
  const auto p = pair.p().probs();
  const auto q = pair.q().probs();
  CompensatedSum sum;
  for (std::size_t i = 0; i < p.size(); ++i) sum += (p[i] - q[i]) * gen.df(p[i] / q[i]);
  return sum.value();
}

double a_bound(const Generator& gen, double r, double big_r) {
  if (!(r > 0.0) || !(r <= big_r)) throw Error(ErrorCode::BadInterval, "need 0 < r <= R");
  if (r == big_r) return 0.0;
  return 0.25 * (big_r - r) * (gen.df(big_r) - gen.df(r));
}

double b_bound(const Generator& gen, double r, double big_r) {
  if (!(r > 0.0) || !(r <= 1.0) || !(1.0 <= big_r)) {
    throw Error(ErrorCode::BadInterval, "need 0 < r <= 1 <= R");
  }
  if (r == big_r) throw Error(ErrorCode::DegenerateInterval, "chord bound needs r != R");
  return ((big_r - 1.0) * gen.f(r) + (1.0 - r) * gen.f(big_r)) / (big_r - r);
}

double log_mean_inverse(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorCode::NonPositiveArgument, "log_mean_inverse needs positive arguments");
  }
  if (a > b) std::swap(a, b);  // same rounding either way round
  if (b - a <= 1e-13 * b) return 1.0 / a;
  // log1p keeps the quotient accurate when b is close to a
  return std::log1p((b - a) / a) / (b - a);
}

DragomirBounds dragomir_bounds(const Generator& gen, const DistributionPair& pair) {
  const double r = pair.min_ratio();
  const double big_r = pair.max_ratio();
  DragomirBounds out;
  out.value = csiszar(gen, pair);
  out.e = e_bound(gen, pair);
  out.a = a_bound(gen, r, big_r);
  if (r != big_r) out.b = b_bound(gen, r, big_r);
  return out;
}

bool bounds_chain_holds(const DragomirBounds& bd) {
  const double slack = inequality_slack(bd.a);
  bool ok = leq_within(0.0, bd.value, slack) && leq_within(bd.value, bd.e, slack) &&
            leq_within(bd.e, bd.a, slack);
  if (bd.b) {
    const double gap = *bd.b - bd.value;
    ok = ok && leq_within(bd.value, *bd.b, slack) && leq_within(*bd.b, bd.a, slack) &&
         leq_within(0.0, gap, slack) && leq_within(gap, bd.a, slack);
  }
  return ok;
}

double golden_section_minimize(const RealFn& fn, double lo, double hi, double tolerance) {
  constexpr double inv_phi = 0.6180339887498948482;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = fn(c);
  double fd = fn(d);
  for (int iter = 0; iter < 500 && (hi - lo) > tolerance; ++iter) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = fn(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = fn(d);
    }
  }
  return 0.5 * (lo + hi);
}

RatioExtrema ratio_extrema(const Generator& num, const Generator& den, double r, double big_r) {
  if (!(r > 0.0) || !(r <= big_r)) throw Error(ErrorCode::BadInterval, "need 0 < r <= R");
  const auto ratio = [&](double x) { return num.d2f(x) / den.d2f(x); };
  if (r == big_r) {
    const double g = ratio(r);
    return {g, g};
  }

  const std::size_t n = kExtremaGridSize;
  const double width = big_r - r;
  const auto node = [&](std::size_t i) {
    return i + 1 == n ? big_r : r + width * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  std::size_t i_min = 0;
  std::size_t i_max = 0;
  double g_min = ratio(r);
  double g_max = g_min;
  for (std::size_t i = 1; i < n; ++i) {
    const double g = ratio(node(i));
    if (g < g_min) {
      g_min = g;
      i_min = i;
    }
    if (g > g_max) {
      g_max = g;
      i_max = i;
    }
  }

  const double tol = 1e-12 * (width + 1.0);
  const auto bracket = [&](std::size_t i) {
    return std::pair{node(i == 0 ? 0 : i - 1), node(std::min(i + 1, n - 1))};
  };
  {
    const auto [lo, hi] = bracket(i_min);
    const double x = golden_section_minimize(ratio, lo, hi, tol);
    g_min = std::min(g_min, ratio(x));
  }
  {
    const auto [lo, hi] = bracket(i_max);
    const double x = golden_section_minimize([&](double t) { return -ratio(t); }, lo, hi, tol);
    g_max = std::max(g_max, ratio(x));
  }
  return {g_min, g_max};
}

ComparisonReport compare(const Generator& num, const Generator& den, const DistributionPair& pair) {
  ComparisonReport out;
  out.extrema = ratio_extrema(num, den, pair.min_ratio(), pair.max_ratio());
  out.lhs = csiszar(num, pair);
  out.rhs = csiszar(den, pair);
  const double upper = out.extrema.big_m * out.rhs;
  const double slack = inequality_slack(upper);
  out.pass = leq_within(out.extrema.m * out.rhs, out.lhs, slack) && leq_within(out.lhs, upper, slack);
  return out;
}

}  // namespace fdv
