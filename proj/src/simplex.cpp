#include "fdiv/simplex.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fdiv/error.hpp"
#include "fdiv/numeric.hpp"

namespace fdv {

namespace {

std::string describe_index(std::size_t i) { return "entry " + std::to_string(i); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view token, std::size_t line) {
  token = trim(token);
  // from_chars rejects a leading '+', text formats commonly allow it
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": not a number: '" + std::string(token) + "'");
  }
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    ++line_no;
    fn(line, line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

}  // namespace

Distribution Distribution::validate(std::span<const double> raw, bool normalize) {
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "distribution has no entries");
  if (raw.size() < 2) {
    throw Error(ErrorCode::TooShort, "distribution needs at least 2 entries, got " +
                                         std::to_string(raw.size()));
  }
  CompensatedSum total;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!(raw[i] > 0.0) || !std::isfinite(raw[i])) {
      throw Error(ErrorCode::NonPositiveEntry,
                  describe_index(i) + " is not a finite positive number");
    }
    total += raw[i];
  }
  std::vector<double> probs(raw.begin(), raw.end());
  if (normalize) {
    const double s = total.value();
    for (double& x : probs) x /= s;
    total = CompensatedSum{};
    for (double x : probs) total += x;
  }
  if (std::abs(total.value() - 1.0) > kNormalizationTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "entries sum to " << total.value();
    throw Error(ErrorCode::NotNormalized, msg.str());
  }
  return Distribution(std::move(probs));
}

DistributionPair DistributionPair::make(Distribution p, Distribution q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::LengthMismatch, "p has " + std::to_string(p.size()) +
                                               " entries, q has " + std::to_string(q.size()));
  }
  double lo = p[0] / q[0];
  double hi = lo;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const double ratio = p[i] / q[i];
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  // Both sum to one, so the ratios straddle 1; rounding may push an extreme a hair past it.
  lo = std::min(lo, 1.0);
  hi = std::max(hi, 1.0);
  return DistributionPair(std::move(p), std::move(q), lo, hi);
}

std::uint64_t SimplexSampler::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SimplexSampler::next_open_unit() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::size_t SimplexSampler::next_index(std::size_t lo, std::size_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::size_t>(next_u64() % span);
}

Distribution SimplexSampler::next_distribution(std::size_t n, double floor) {
  if (n < 2) throw Error(ErrorCode::BadDimension, "dimension must be at least 2");
  if (!(floor > 0.0) || !(floor < 1.0 / static_cast<double>(n))) {
    throw Error(ErrorCode::BadFloor, "floor must lie in (0, 1/n)");
  }
  std::vector<double> draws(n);
  CompensatedSum total;
  for (double& x : draws) {
    x = -std::log(next_open_unit());
    total += x;
  }
  const double s = total.value();
  CompensatedSum clamped_total;
  for (double& x : draws) {
    x = std::max(x / s, floor);
    clamped_total += x;
  }
  const double c = clamped_total.value();
  for (double& x : draws) x /= c;
  return Distribution::validate(draws);
}

DistributionPair sample_pair(std::uint64_t seed, std::size_t n, double floor) {
  SimplexSampler sampler(seed);
  auto p = sampler.next_distribution(n, floor);
  auto q = sampler.next_distribution(n, floor);
  return DistributionPair::make(std::move(p), std::move(q));
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

std::optional<FileFormat> parse_file_format(std::string_view name) {
  if (name == "lines") return FileFormat::Lines;
  if (name == "json-array") return FileFormat::JsonArray;
  if (name == "csv-column") return FileFormat::CsvColumn;
  return std::nullopt;
}

FileFormat infer_file_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".json") return FileFormat::JsonArray;
  if (ext == ".csv") return FileFormat::CsvColumn;
  return FileFormat::Lines;
}

std::vector<double> parse_numbers(std::string_view text, FileFormat format) {
  std::vector<double> values;
  switch (format) {
    case FileFormat::Lines:
      for_each_line(text, [&](std::string_view line, std::size_t no) {
        if (trim(line).empty()) return;
        values.push_back(parse_real(line, no));
      });
      break;
    case FileFormat::CsvColumn:
      for_each_line(text, [&](std::string_view line, std::size_t no) {
        if (trim(line).empty()) return;
        values.push_back(parse_real(line.substr(0, line.find(',')), no));
      });
      break;
    case FileFormat::JsonArray: {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
      }
      if (!doc.is_array()) throw Error(ErrorCode::ParseError, "expected a JSON array of numbers");
      for (const auto& item : doc) {
        if (!item.is_number()) throw Error(ErrorCode::ParseError, "array element is not a number");
        values.push_back(item.get<double>());
      }
      break;
    }
  }
  return values;
}

Distribution load(const std::filesystem::path& path, FileFormat format, bool normalize) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto values = parse_numbers(buf.str(), format);
  return Distribution::validate(values, normalize);
}

}  // namespace fdv
