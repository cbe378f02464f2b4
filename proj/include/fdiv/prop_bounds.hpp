#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdiv/catalog.hpp"
#include "fdiv/fdiv_core.hpp"

namespace fdv {

/// The ten comparisons of a relative (non-symmetric) divergence against a symmetric one.
enum class Relation { DDelta, DJ, DI, FDelta, FJ, FI, GDelta, GJ, GI, GT };

struct RelationInfo {
  Relation id;
  std::string_view name;
  Measure lhs;
  Measure rhs;
};

inline constexpr std::array<RelationInfo, 10> kRelations{{
    {Relation::DDelta, "d-delta", Measure::RelativeJ, Measure::Triangular},
    {Relation::DJ, "d-j", Measure::RelativeJ, Measure::JDivergence},
    {Relation::DI, "d-i", Measure::RelativeJ, Measure::JensenShannon},
    {Relation::FDelta, "f-delta", Measure::RelativeJS, Measure::Triangular},
    {Relation::FJ, "f-j", Measure::RelativeJS, Measure::JDivergence},
    {Relation::FI, "f-i", Measure::RelativeJS, Measure::JensenShannon},
    {Relation::GDelta, "g-delta", Measure::RelativeAG, Measure::Triangular},
    {Relation::GJ, "g-j", Measure::RelativeAG, Measure::JDivergence},
    {Relation::GI, "g-i", Measure::RelativeAG, Measure::JensenShannon},
    {Relation::GT, "g-t", Measure::RelativeAG, Measure::ArithmeticGeometric},
}};

const RelationInfo& info(Relation rel);
std::string_view name(Relation rel);
std::optional<Relation> parse_relation(std::string_view name);

/// Closed form of lhs'' / rhs'' for the relation's generators.
double ratio(Relation rel, double x);

/// Analytic inf/sup of ratio(rel, .) over [r, R]; throws BadInterval unless 0 < r <= 1 <= R.
/// The f-j ratio x / (x + 1)^3 peaks at x = 1/2; its extrema are taken on the interval itself.
RatioExtrema coefficients(Relation rel, double r, double big_r);

struct RelationCheck {
  Relation relation;
  RatioExtrema coeffs;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool lower_pass = false;
  bool upper_pass = false;
  bool pass() const { return lower_pass && upper_pass; }
};

/// m rhs <= lhs <= M rhs on the pair, with (m, M) from `coefficients` at the pair's ratio
/// extremes (or on a wider [r, R] when given).
RelationCheck verify_relation(Relation rel, const DistributionPair& pair);
RelationCheck verify_relation(Relation rel, const DistributionPair& pair, double r, double big_r);

struct CrossCheck {
  Relation relation;
  RatioExtrema analytic;
  RatioExtrema numeric;
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr double kCrossCheckRelTolerance = 1e-8;

/// Analytic coefficients against ratio_extrema on the generators, within 1e-8 max(1, M).
CrossCheck cross_check(Relation rel, double r, double big_r);

/// One link lhs <= rhs of a classical inequality chain between symmetric measures.
struct ChainLink {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
};

std::vector<ChainLink> known_chains(const DistributionPair& pair);

/// Ratios of divergences that must fall inside [r, R]. Labels keep the conventional
/// numbering: zeta1, zeta3, xi1..xi4.
struct RatioCertificate {
  double zeta1 = 0.0;
  double zeta3 = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;
  double xi4 = 0.0;

  std::array<std::pair<std::string_view, double>, 6> entries() const {
    return {{{"zeta1", zeta1}, {"zeta3", zeta3}, {"xi1", xi1}, {"xi2", xi2}, {"xi3", xi3}, {"xi4", xi4}}};
  }
};

/// Negative values of 2T - G down to this are rounding and clamp to zero under the root.
inline constexpr double kXi4ClampTolerance = 1e-12;

/// Throws DegeneratePair when P == Q. A value of 2T - G below -1e-12 yields xi4 = NaN,
/// which fails containment.
RatioCertificate certificates(const DistributionPair& pair);

/// r - slack <= value <= R + slack with slack 1e-9 max(1, R).
bool certificate_contained(double value, double r, double big_r);

}  // namespace fdv
