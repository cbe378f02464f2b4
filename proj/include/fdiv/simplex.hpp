#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace fdv {

/// Absolute tolerance on the sum of a distribution's entries.
inline constexpr double kNormalizationTolerance = 1e-9;

/// A point of the open probability simplex: n >= 2 strictly positive entries summing to 1.
class Distribution {
 public:
  /// Checks `raw` against the simplex invariants. With `normalize` set the entries are
  /// first divided by their sum. Throws fdv::Error on any violation.
  static Distribution validate(std::span<const double> raw, bool normalize = false);

  std::span<const double> probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {}
  std::vector<double> probs_;
};

/// Two distributions on the same support together with the extremes of p_i / q_i.
class DistributionPair {
 public:
  /// Throws LengthMismatch when the supports differ.
  static DistributionPair make(Distribution p, Distribution q);

  const Distribution& p() const { return p_; }
  const Distribution& q() const { return q_; }
  /// min_i p_i / q_i
  double min_ratio() const { return min_ratio_; }
  /// max_i p_i / q_i
  double max_ratio() const { return max_ratio_; }
  std::size_t size() const { return p_.size(); }

  /// (Q, P)
  DistributionPair swapped() const { return make(q_, p_); }

  friend bool operator==(const DistributionPair&, const DistributionPair&) = default;

 private:
  DistributionPair(Distribution p, Distribution q, double r, double big_r)
      : p_(std::move(p)), q_(std::move(q)), min_ratio_(r), max_ratio_(big_r) {}

  Distribution p_;
  Distribution q_;
  double min_ratio_;
  double max_ratio_;
};

/// Default lower clamp for sampled entries.
inline constexpr double kDefaultFloor = 1e-6;

/// Deterministic pseudo-random source for simplex sampling (64-bit splitmix stream).
class SimplexSampler {
 public:
  explicit SimplexSampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform draw on the open interval (0, 1).
  double next_open_unit();
  /// Uniform integer on [lo, hi].
  std::size_t next_index(std::size_t lo, std::size_t hi);
  /// Uniform point on the simplex, clamped below by `floor` and renormalized.
  Distribution next_distribution(std::size_t n, double floor);

 private:
  std::uint64_t state_;
};

/// Independent uniform-on-simplex draws for P and Q, fully determined by the arguments.
DistributionPair sample_pair(std::uint64_t seed, std::size_t n, double floor = kDefaultFloor);

/// Seed for trial `index` of a campaign started from `base`; independent of evaluation order.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index);

enum class FileFormat { Lines, JsonArray, CsvColumn };

std::optional<FileFormat> parse_file_format(std::string_view name);
/// Guess from the extension: .json -> JsonArray, .csv -> CsvColumn, otherwise Lines.
FileFormat infer_file_format(const std::filesystem::path& path);

/// Parses the numbers of a file in the given format without validating them.
std::vector<double> parse_numbers(std::string_view text, FileFormat format);

/// Reads and validates a distribution. Throws IoError, ParseError, or any validate error.
Distribution load(const std::filesystem::path& path, FileFormat format, bool normalize = false);

}  // namespace fdv
