#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fdiv/simplex.hpp"

namespace fdv {

using RealFn = std::function<double(double)>;

/// A convex generator f on (0, inf) with f(1) = 0, bundled with its first two derivatives.
struct Generator {
  std::string name;
  RealFn f;
  RealFn df;
  RealFn d2f;
};

/// Outcome of probing a generator against its invariants on a logarithmic grid.
struct GeneratorDiagnostics {
  double f_at_one = 0.0;
  bool normalized = false;
  bool convex = false;
  /// Largest scaled mismatch between df and a finite difference of f.
  double df_mismatch = 0.0;
  /// Largest relative mismatch between d2f and a finite difference of df.
  double d2f_mismatch = 0.0;
  bool consistent = false;

  bool ok() const { return normalized && convex && consistent; }
};

inline constexpr std::size_t kProbeGridSize = 512;
inline constexpr double kProbeGridLo = 1e-4;
inline constexpr double kProbeGridHi = 1e4;

/// 512 log-spaced points spanning [1e-4, 1e4].
std::vector<double> probe_grid();

/// Normalization within 1e-12, d2f > 0 on the probe grid, and derivative consistency
/// within relative 1e-6 (df is compared on the scale max(|df|, x * d2f) so that the
/// zero of df at x = 1 does not blow up the ratio).
GeneratorDiagnostics diagnose(const Generator& gen);

/// Sum_i q_i f(p_i / q_i).
double csiszar(const Generator& gen, const DistributionPair& pair);

/// Sum_i (p_i - q_i) f'(p_i / q_i).
double e_bound(const Generator& gen, const DistributionPair& pair);

/// (R - r)(f'(R) - f'(r)) / 4. Requires 0 < r <= R.
double a_bound(const Generator& gen, double r, double big_r);

/// Chord bound ((R - 1) f(r) + (1 - r) f(R)) / (R - r). Requires 0 < r <= 1 <= R;
/// throws DegenerateInterval when r == R.
double b_bound(const Generator& gen, double r, double big_r);

/// Reciprocal logarithmic mean (ln b - ln a) / (b - a), continuous at a == b with value 1/a.
/// Throws NonPositiveArgument unless both arguments are positive.
double log_mean_inverse(double a, double b);

struct DragomirBounds {
  double value = 0.0;
  double e = 0.0;
  double a = 0.0;
  std::optional<double> b;

  friend bool operator==(const DragomirBounds&, const DragomirBounds&) = default;
};

DragomirBounds dragomir_bounds(const Generator& gen, const DistributionPair& pair);

/// 0 <= value <= e <= a, and when b is present 0 <= value <= b <= a and b - value <= a,
/// each within 1e-9 * max(1, a).
bool bounds_chain_holds(const DragomirBounds& bounds);

/// inf and sup of a second-derivative ratio over an interval.
struct RatioExtrema {
  double m = 0.0;
  double big_m = 0.0;
};

inline constexpr std::size_t kExtremaGridSize = 2049;

/// Extrema of x -> num.d2f(x) / den.d2f(x) on [r, R]: dense uniform grid, then golden-section
/// refinement around the best grid points until the bracket is narrower than
/// 1e-12 (R - r + 1).
RatioExtrema ratio_extrema(const Generator& num, const Generator& den, double r, double big_r);

/// Golden-section minimization of a unimodal function on [lo, hi]; returns the abscissa.
double golden_section_minimize(const RealFn& fn, double lo, double hi, double tolerance);

struct ComparisonReport {
  RatioExtrema extrema;
  double lhs = 0.0;  ///< C_{f1}
  double rhs = 0.0;  ///< C_{f2}
  bool pass = false;
};

/// Checks m C_{f2} <= C_{f1} <= M C_{f2} with slack 1e-9 max(1, M C_{f2}).
ComparisonReport compare(const Generator& num, const Generator& den, const DistributionPair& pair);

}  // namespace fdv
