#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdiv/fdiv_core.hpp"
#include "fdiv/simplex.hpp"

namespace fdv {

enum class Measure {
  ChiSquare,
  KL,
  RelativeJ,
  RelativeJS,
  RelativeAG,
  Hellinger,
  Bhattacharyya,
  Triangular,
  HarmonicMean,
  SymmetricChiSquare,
  JDivergence,
  JensenShannon,
  ArithmeticGeometric,
};

struct MeasureInfo {
  Measure id;
  std::string_view name;  ///< stable CLI/report name
  bool symmetric;
  bool has_closed_forms;  ///< generator and tabulated E/A/B closed forms available
};

inline constexpr std::array<MeasureInfo, 13> kMeasures{{
    {Measure::ChiSquare, "chi2", false, false},
    {Measure::KL, "kl", false, false},
    {Measure::RelativeJ, "rel_j", false, true},
    {Measure::RelativeJS, "rel_js", false, true},
    {Measure::RelativeAG, "rel_ag", false, true},
    {Measure::Hellinger, "hellinger", true, false},
    {Measure::Bhattacharyya, "bhattacharyya", true, false},
    {Measure::Triangular, "triangular", true, true},
    {Measure::HarmonicMean, "harmonic", true, false},
    {Measure::SymmetricChiSquare, "sym_chi2", true, false},
    {Measure::JDivergence, "j", true, true},
    {Measure::JensenShannon, "js", true, true},
    {Measure::ArithmeticGeometric, "ag", true, true},
}};

const MeasureInfo& info(Measure m);
std::string_view name(Measure m);
std::optional<Measure> parse_measure(std::string_view name);

/// Bhattacharyya and HarmonicMean are similarities in (0, 1]; the rest are divergences.
bool is_similarity(Measure m);
/// Measures with a normalized convex generator: everything except the two similarities.
bool has_generator(Measure m);

/// Direct summation of the closed form of `m` on arbitrary positive vectors of equal length.
double evaluate(Measure m, std::span<const double> p, std::span<const double> q);
double evaluate(Measure m, const DistributionPair& pair);

/// K(P||Q) on raw vectors.
double kl(std::span<const double> p, std::span<const double> q);

/// Throws NoGenerator for the similarities.
Generator generator(Measure m);

/// Measures whose divergence is a Csiszar sum of a catalogued generator (eleven of them).
std::vector<Measure> generator_measures();
/// The seven measures carrying tabulated closed-form bounds.
std::vector<Measure> closed_form_measures();

enum class BoundComponent { E, A, B };
std::string_view name(BoundComponent c);

/// Tabulated closed forms for E, A and B of the seven measures that have them, evaluated
/// exactly as tabulated. Throws NoClosedForm for the others.
DragomirBounds closed_bounds(Measure m, const DistributionPair& pair);

/// False for the two tabulated forms that do not reproduce the generic bound: B for the
/// Jensen-Shannon divergence (sign of the second chord term flipped) and A for the
/// arithmetic-geometric divergence (L^{-1}(r+1, R+1) missing its factor 2).
bool closed_form_matches_generic(Measure m, BoundComponent c);

struct IdentityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double bound = 0.0;  ///< 1e-12 max(1, |lhs|)
  bool pass = false;
};

inline constexpr double kIdentityRelTolerance = 1e-12;

IdentityCheck make_identity_check(std::string name, double lhs, double rhs);

/// Every algebraic identity between the measures, evaluated both ways on `pair`.
std::vector<IdentityCheck> identities(const DistributionPair& pair);

/// K(P||U) + K(Q||U) = K(P||M) + K(Q||M) + 2 K(M||U) with M = (P + Q) / 2.
/// Throws LengthMismatch.
IdentityCheck parallelogram(const Distribution& p, const Distribution& q, const Distribution& u);

}  // namespace fdv
