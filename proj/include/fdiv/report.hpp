#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fdv {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// One inequality lhs <= rhs + slack. An identity is encoded as residual <= bound, slack 0.
struct Check {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::string note;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Builds a check whose pass flag is exactly lhs <= rhs + slack.
Check make_check(std::string name, double lhs, double rhs, double slack, std::string note = {});

struct BoundsEntry {
  double value = 0.0;
  double e = 0.0;
  double a = 0.0;
  std::optional<double> b;

  friend bool operator==(const BoundsEntry&, const BoundsEntry&) = default;
};

/// Generic bound component next to its tabulated closed form.
struct ClosedFormEntry {
  double generic = 0.0;
  double closed = 0.0;
  bool agrees = false;
  /// Whether the tabulated form is known to reproduce the generic bound.
  bool expected_to_agree = true;

  friend bool operator==(const ClosedFormEntry&, const ClosedFormEntry&) = default;
};

struct RelationEntry {
  std::string relation;
  double analytic_m = 0.0;
  double analytic_big_m = 0.0;
  double numeric_m = 0.0;
  double numeric_big_m = 0.0;
  double tolerance = 0.0;
  bool agrees = false;

  friend bool operator==(const RelationEntry&, const RelationEntry&) = default;
};

/// Worst-case summary of one check across a fuzz campaign.
struct FamilySummary {
  std::uint64_t evaluated = 0;
  std::uint64_t failures = 0;
  /// min over trials of rhs + slack - lhs; negative means violated
  double worst_margin = 0.0;
  std::uint64_t worst_trial = 0;

  friend bool operator==(const FamilySummary&, const FamilySummary&) = default;
};

struct Metadata {
  std::string command;
  std::string version{kToolVersion};
  std::optional<double> r;
  std::optional<double> big_r;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> dim_lo;
  std::optional<std::uint64_t> dim_hi;
  std::optional<double> floor;

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

struct Report {
  Metadata metadata;
  std::map<std::string, double> measures;
  std::map<std::string, BoundsEntry> bounds;
  std::map<std::string, ClosedFormEntry> closed_forms;
  std::vector<Check> checks;
  std::optional<RelationEntry> relation;
  std::map<std::string, FamilySummary> fuzz;

  /// Every check passes and no fuzz family recorded a failure.
  bool all_pass() const;

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& report);
/// Throws fdv::Error(ParseError) on schema violations.
Report report_from_json(const nlohmann::json& doc);

/// Pretty-printed JSON followed by a newline.
std::string to_json_text(const Report& report);

/// "name,value" rows for the measures, then r and R.
std::string to_csv_text(const Report& report);

/// Shortest decimal text that parses back to the same double.
std::string format_real(double x);

}  // namespace fdv
