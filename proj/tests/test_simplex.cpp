#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numeric>
#include <vector>

#include "fdiv/error.hpp"
#include "fdiv/simplex.hpp"

using namespace fdv;

namespace {

const std::filesystem::path kData = FDIV_TEST_DATA_DIR;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected fdv::Error");
  return ErrorCode::EmptyInput;
}

}  // namespace

TEST_CASE("validate accepts a normalized vector as is") {
  const std::vector<double> raw{0.5, 0.5};
  const auto d = Distribution::validate(raw);
  CHECK(d.size() == 2);
  CHECK(d[0] == 0.5);
  CHECK(d[1] == 0.5);
}

TEST_CASE("validate error paths") {
  CHECK(code_of([] { Distribution::validate(std::vector<double>{0.5, 0.4}); }) == ErrorCode::NotNormalized);
  CHECK(code_of([] { Distribution::validate(std::vector<double>{1.0}); }) == ErrorCode::TooShort);
  CHECK(code_of([] { Distribution::validate(std::vector<double>{}); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { Distribution::validate(std::vector<double>{0.0, 1.0}); }) == ErrorCode::NonPositiveEntry);
  CHECK(code_of([] { Distribution::validate(std::vector<double>{-0.5, 1.5}); }) == ErrorCode::NonPositiveEntry);
  CHECK(code_of([] { Distribution::validate(std::vector<double>{NAN, 1.0}); }) == ErrorCode::NonPositiveEntry);
  // zero entries are rejected even when normalizing
  CHECK(code_of([] { Distribution::validate(std::vector<double>{0.0, 2.0}, true); }) ==
        ErrorCode::NonPositiveEntry);
}

TEST_CASE("validate tolerance is 1e-9 absolute") {
  CHECK_NOTHROW(Distribution::validate(std::vector<double>{0.5 + 4e-10, 0.5}));
  CHECK(code_of([] { Distribution::validate(std::vector<double>{0.5 + 2e-9, 0.5}); }) == ErrorCode::NotNormalized);
}

TEST_CASE("validate with normalize scales to the simplex and is idempotent") {
  const auto d = Distribution::validate(std::vector<double>{2.0, 2.0}, true);
  CHECK(d[0] == 0.5);
  CHECK(d[1] == 0.5);

  SimplexSampler rng(99);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.next_index(2, 30);
    std::vector<double> raw(n);
    for (double& x : raw) x = 1e-3 + 100 * rng.next_open_unit();
    const auto once = Distribution::validate(raw, true);
    const auto again = Distribution::validate(once.probs(), false);
    CHECK(again == once);
  }
}

TEST_CASE("pair caches the ratio extremes") {
  const auto half = Distribution::validate(std::vector<double>{0.5, 0.5});
  const auto same = DistributionPair::make(half, half);
  CHECK(same.min_ratio() == 1.0);
  CHECK(same.max_ratio() == 1.0);

  const auto q = Distribution::validate(std::vector<double>{0.25, 0.75});
  const auto pq = DistributionPair::make(half, q);
  // ratios are 2 and 2/3
  CHECK(pq.min_ratio() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(pq.max_ratio() == 2.0);

  const auto three = Distribution::validate(std::vector<double>{0.2, 0.3, 0.5});
  CHECK(code_of([&] { DistributionPair::make(half, three); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("sample_pair is deterministic and normalized") {
  const auto a = sample_pair(1234, 17, 1e-6);
  const auto b = sample_pair(1234, 17, 1e-6);
  CHECK(a == b);
  CHECK_FALSE(a == sample_pair(1235, 17, 1e-6));

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 2 + seed % 49;
    const double floor = seed % 3 == 0 ? 1e-2 / static_cast<double>(n) : 1e-6;
    const auto pair = sample_pair(seed, n, floor);
    for (const auto* d : {&pair.p(), &pair.q()}) {
      const double s = std::accumulate(d->probs().begin(), d->probs().end(), 0.0);
      CHECK(std::abs(s - 1.0) <= 1e-12);
      for (double x : d->probs()) {
        CHECK(x > 0.0);
        CHECK(x >= floor * (1.0 - static_cast<double>(n) * floor));
      }
    }
    CHECK(pair.min_ratio() <= 1.0);
    CHECK(1.0 <= pair.max_ratio());
    CHECK(pair.min_ratio() <= pair.max_ratio());
  }
}

TEST_CASE("sample_pair argument checks") {
  CHECK(code_of([] { sample_pair(1, 1, 1e-6); }) == ErrorCode::BadDimension);
  CHECK(code_of([] { sample_pair(1, 4, 0.25); }) == ErrorCode::BadFloor);
  CHECK(code_of([] { sample_pair(1, 4, 0.0); }) == ErrorCode::BadFloor);
}

TEST_CASE("trial seeds do not depend on evaluation order") {
  std::vector<std::uint64_t> forward;
  for (std::uint64_t i = 0; i < 64; ++i) forward.push_back(trial_seed(42, i));
  for (std::uint64_t i = 64; i-- > 0;) CHECK(trial_seed(42, i) == forward[i]);
  // distinct indices give distinct streams
  std::sort(forward.begin(), forward.end());
  CHECK(std::adjacent_find(forward.begin(), forward.end()) == forward.end());
}

TEST_CASE("load in each file format") {
  const auto lines = load(kData / "half.txt", FileFormat::Lines);
  CHECK(lines[0] == 0.5);
  const auto json = load(kData / "quarter.json", FileFormat::JsonArray);
  CHECK(json[0] == 0.25);
  CHECK(json[1] == 0.75);
  const auto csv = load(kData / "half.csv", FileFormat::CsvColumn);
  CHECK(csv[1] == 0.5);
  const auto scaled = load(kData / "twos.txt", FileFormat::Lines, true);
  CHECK(scaled[0] == 0.5);

  CHECK(code_of([] { load(kData / "garbage.txt", FileFormat::Lines); }) == ErrorCode::ParseError);
  CHECK(code_of([] { load(kData / "half.txt", FileFormat::JsonArray); }) == ErrorCode::ParseError);
  CHECK(code_of([] { load(kData / "negative.txt", FileFormat::Lines); }) == ErrorCode::NonPositiveEntry);
  CHECK(code_of([] { load(kData / "unnormalized.txt", FileFormat::Lines); }) == ErrorCode::NotNormalized);
  CHECK(code_of([] { load(kData / "does-not-exist.txt", FileFormat::Lines); }) == ErrorCode::IoError);
}

TEST_CASE("parse_numbers edge cases") {
  CHECK(parse_numbers("0.5\r\n\n0.5\n\n", FileFormat::Lines) == std::vector<double>{0.5, 0.5});
  CHECK(parse_numbers("+1e-1\n9e-1", FileFormat::Lines) == std::vector<double>{0.1, 0.9});
  CHECK(parse_numbers("[1, 2.5]", FileFormat::JsonArray) == std::vector<double>{1.0, 2.5});
  CHECK(code_of([] { parse_numbers("[1, \"x\"]", FileFormat::JsonArray); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_numbers("{\"a\": 1}", FileFormat::JsonArray); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_numbers("0.5 0.5", FileFormat::Lines); }) == ErrorCode::ParseError);
  CHECK(parse_numbers(" 0.3 , x\n0.7,y", FileFormat::CsvColumn) == std::vector<double>{0.3, 0.7});
}

TEST_CASE("file format names") {
  CHECK(parse_file_format("lines") == FileFormat::Lines);
  CHECK(parse_file_format("json-array") == FileFormat::JsonArray);
  CHECK(parse_file_format("csv-column") == FileFormat::CsvColumn);
  CHECK_FALSE(parse_file_format("tsv").has_value());
  CHECK(infer_file_format("a/b.json") == FileFormat::JsonArray);
  CHECK(infer_file_format("b.csv") == FileFormat::CsvColumn);
  CHECK(infer_file_format("b.dat") == FileFormat::Lines);
}
