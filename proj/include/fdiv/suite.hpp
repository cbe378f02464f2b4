#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fdiv/catalog.hpp"
#include "fdiv/report.hpp"
#include "fdiv/simplex.hpp"

namespace fdv {

/// Ordering checks of the E/A/B chain for one generator, named "dragomir/<gen>/<link>".
std::vector<Check> dragomir_checks(const std::string& gen_name, const DragomirBounds& bounds);

/// The full verification suite on one pair: identities (including the parallelogram law
/// against the uniform distribution), classical chains, the ten relations, the E/A/B chain for
/// every generator, and the ratio certificates (reported as skipped when P == Q).
std::vector<Check> verify_checks(const DistributionPair& pair);

struct FuzzConfig {
  std::uint64_t trials = 10000;
  std::size_t dim_lo = 2;
  std::size_t dim_hi = 50;
  std::uint64_t seed = 42;
  double floor = kDefaultFloor;
  unsigned jobs = 1;
};

/// Pair for trial `index`: the dimension and both distributions derive from
/// trial_seed(seed, index) alone.
DistributionPair fuzz_pair(const FuzzConfig& cfg, std::uint64_t index);

/// Runs verify_checks on every trial and folds the results per check name. The result does not
/// depend on `jobs`.
std::map<std::string, FamilySummary> run_fuzz(const FuzzConfig& cfg);

}  // namespace fdv
