#include "fdiv/prop_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fdiv/error.hpp"
#include "fdiv/numeric.hpp"

namespace fdv {

namespace {

enum class Shape { Increasing, Decreasing, PeakAtHalf };

Shape shape(Relation rel) {
  switch (rel) {
    case Relation::DDelta:
    case Relation::DJ:
    case Relation::DI:
      return Shape::Increasing;
    case Relation::FJ:
      return Shape::PeakAtHalf;
    default:
      return Shape::Decreasing;
  }
}

ChainLink link(std::string name, double lhs, double rhs) {
  ChainLink l{std::move(name), lhs, rhs, inequality_slack(std::max(std::abs(lhs), std::abs(rhs))), false};
  l.pass = leq_within(l.lhs, l.rhs, l.slack);
  return l;
}

}  // namespace

const RelationInfo& info(Relation rel) { return kRelations[static_cast<std::size_t>(rel)]; }

std::string_view name(Relation rel) { return info(rel).name; }

std::optional<Relation> parse_relation(std::string_view text) {
  for (const auto& ri : kRelations) {
    if (ri.name == text) return ri.id;
  }
  return std::nullopt;
}

double ratio(Relation rel, double x) {
  switch (rel) {
    case Relation::DDelta: return (x + 1) * (x + 3) / 8;
    case Relation::DJ: return x * x * (x + 3) / ((x + 1) * (x + 1) * (x + 1));
    case Relation::DI: return 2 * x * (x + 3) / (x + 1);
    case Relation::FDelta: return (x + 1) / (8 * x);
    case Relation::FJ: return x / ((x + 1) * (x + 1) * (x + 1));
    case Relation::FI: return 2 / (x + 1);
    case Relation::GDelta: return (x + 1) * (x + 1) / (16 * x * x);
    case Relation::GJ: return 1 / (2 * (x + 1) * (x + 1));
    case Relation::GI: return 1 / x;
    case Relation::GT: return 2 / (1 + x * x);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

RatioExtrema coefficients(Relation rel, double r, double big_r) {
  if (!(r > 0.0) || !(r <= 1.0) || !(1.0 <= big_r) || !std::isfinite(big_r)) {
    throw Error(ErrorCode::BadInterval, "coefficients need 0 < r <= 1 <= R");
  }
  const double at_r = ratio(rel, r);
  const double at_big_r = ratio(rel, big_r);
  switch (shape(rel)) {
    case Shape::Increasing:
      return {at_r, at_big_r};
    case Shape::Decreasing:
      return {at_big_r, at_r};
    case Shape::PeakAtHalf: {
      const double peak = (r <= 0.5 && 0.5 <= big_r) ? ratio(rel, 0.5) : std::max(at_r, at_big_r);
      return {std::min(at_r, at_big_r), peak};
    }
  }
  return {};
}

RelationCheck verify_relation(Relation rel, const DistributionPair& pair) {
  return verify_relation(rel, pair, pair.min_ratio(), pair.max_ratio());
}

RelationCheck verify_relation(Relation rel, const DistributionPair& pair, double r, double big_r) {
  RelationCheck out{rel, coefficients(rel, r, big_r)};
  out.lhs = evaluate(info(rel).lhs, pair);
  out.rhs = evaluate(info(rel).rhs, pair);
  const double upper = out.coeffs.big_m * out.rhs;
  out.slack = inequality_slack(upper);
  out.lower_pass = leq_within(out.coeffs.m * out.rhs, out.lhs, out.slack);
  out.upper_pass = leq_within(out.lhs, upper, out.slack);
  return out;
}

CrossCheck cross_check(Relation rel, double r, double big_r) {
  CrossCheck out;
  out.relation = rel;
  out.analytic = coefficients(rel, r, big_r);
  out.numeric = ratio_extrema(generator(info(rel).lhs), generator(info(rel).rhs), r, big_r);
  out.tolerance = kCrossCheckRelTolerance * std::max(1.0, std::abs(out.analytic.big_m));
  out.pass = std::abs(out.analytic.m - out.numeric.m) <= out.tolerance &&
             std::abs(out.analytic.big_m - out.numeric.big_m) <= out.tolerance;
  return out;
}

std::vector<ChainLink> known_chains(const DistributionPair& pair) {
  const double h = evaluate(Measure::Hellinger, pair);
  const double delta = evaluate(Measure::Triangular, pair);
  const double psi = evaluate(Measure::SymmetricChiSquare, pair);
  const double j = evaluate(Measure::JDivergence, pair);
  const double i = evaluate(Measure::JensenShannon, pair);
  const double t = evaluate(Measure::ArithmeticGeometric, pair);

  return {
      link("half_h_le_quarter_triangular", 0.5 * h, 0.25 * delta),
      link("quarter_triangular_le_h", 0.25 * delta, h),
      link("h_le_sixteenth_sym_chi2", h, psi / 16),
      link("triangular_le_half_j", delta, 0.5 * j),
      link("half_j_le_quarter_sym_chi2", 0.5 * j, 0.25 * psi),
      link("quarter_triangular_le_js", 0.25 * delta, i),
      link("js_le_half_ln2_triangular", i, 0.5 * std::numbers::ln2 * delta),
      link("js_le_h", i, h),
      link("h_le_eighth_j", h, j / 8),
      link("eighth_j_le_ag", j / 8, t),
      link("ag_le_sixteenth_sym_chi2", t, psi / 16),
  };
}

RatioCertificate certificates(const DistributionPair& pair) {
  if (pair.min_ratio() == pair.max_ratio()) {
    throw Error(ErrorCode::DegeneratePair, "certificates are undefined when P == Q");
  }
  const double delta = evaluate(Measure::Triangular, pair);
  const double f = evaluate(Measure::RelativeJS, pair);
  const double g = evaluate(Measure::RelativeAG, pair);
  const double i = evaluate(Measure::JensenShannon, pair);
  const double j = evaluate(Measure::JDivergence, pair);
  const double t = evaluate(Measure::ArithmeticGeometric, pair);

  RatioCertificate c;
  c.zeta1 = delta / (8 * f - delta);
  c.zeta3 = (2 * i - f) / f;
  const double sqrt_delta = std::sqrt(delta);
  c.xi1 = sqrt_delta / (4 * std::sqrt(g) - sqrt_delta);
  const double sqrt_2g = std::sqrt(2 * g);
  c.xi2 = (std::sqrt(j) - sqrt_2g) / sqrt_2g;
  c.xi3 = i / g;
  double excess = 2 * t - g;
  if (excess < 0.0 && excess >= -kXi4ClampTolerance) excess = 0.0;
  c.xi4 = excess < 0.0 ? std::numeric_limits<double>::quiet_NaN() : std::sqrt(excess) / std::sqrt(g);
  return c;
}

bool certificate_contained(double value, double r, double big_r) {
  const double slack = inequality_slack(big_r);
  return value >= r - slack && value <= big_r + slack;
}

}  // namespace fdv
