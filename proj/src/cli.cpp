#include "fdiv/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fdiv/catalog.hpp"
#include "fdiv/error.hpp"
#include "fdiv/numeric.hpp"
#include "fdiv/prop_bounds.hpp"
#include "fdiv/report.hpp"
#include "fdiv/simplex.hpp"
#include "fdiv/suite.hpp"

namespace fdv::cli {

namespace {

/// Bad command-line values that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PairInput {
  std::string p_path;
  std::string q_path;
  std::string input_format = "auto";
  bool normalize = false;

  void attach(CLI::App& sub) {
    sub.add_option("--p", p_path, "File holding P")->required();
    sub.add_option("--q", q_path, "File holding Q")->required();
    sub.add_option("--input-format", input_format, "lines, json-array, csv-column or auto")
        ->check(CLI::IsMember({"auto", "lines", "json-array", "csv-column"}));
    sub.add_flag("--normalize", normalize, "Divide entries by their sum before validating");
  }

  Distribution load_one(const std::string& path) const {
    const auto fmt = input_format == "auto" ? infer_file_format(path) : *parse_file_format(input_format);
    return load(path, fmt, normalize);
  }

  DistributionPair load_pair() const { return DistributionPair::make(load_one(p_path), load_one(q_path)); }
};

Metadata pair_metadata(std::string command, const DistributionPair& pair) {
  Metadata meta;
  meta.command = std::move(command);
  meta.r = pair.min_ratio();
  meta.big_r = pair.max_ratio();
  meta.n = pair.size();
  return meta;
}

std::vector<Measure> parse_measure_list(const std::string& text) {
  if (text.empty()) {
    std::vector<Measure> all;
    for (const auto& mi : kMeasures) all.push_back(mi.id);
    return all;
  }
  std::vector<Measure> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto m = parse_measure(item);
    if (!m) throw UsageError("unknown measure '" + item + "'");
    out.push_back(*m);
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& text) {
  const auto to_size = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("bad dimension range '" + text + "', expected LO..HI");
    }
    return v;
  };
  const auto sep = text.find("..");
  if (sep == std::string::npos) {
    const auto n = to_size(text);
    return {n, n};
  }
  return {to_size(std::string_view(text).substr(0, sep)), to_size(std::string_view(text).substr(sep + 2))};
}

int finish(const Report& report, std::ostream& out) {
  out << to_json_text(report);
  return report.all_pass() ? kOk : kCheckFailed;
}

int cmd_compute(const PairInput& in, const std::string& measures, const std::string& format,
                std::ostream& out) {
  const auto selected = parse_measure_list(measures);
  const auto pair = in.load_pair();
  Report report;
  report.metadata = pair_metadata("compute", pair);
  for (Measure m : selected) report.measures[std::string(name(m))] = evaluate(m, pair);
  if (format == "csv") {
    out << to_csv_text(report);
    return kOk;
  }
  return finish(report, out);
}

int cmd_bounds(const PairInput& in, const std::string& measure_name, std::ostream& out) {
  const auto m = parse_measure(measure_name);
  if (!m) throw UsageError("unknown measure '" + measure_name + "'");
  const auto gen = generator(*m);
  const auto pair = in.load_pair();

  Report report;
  report.metadata = pair_metadata("bounds", pair);
  const auto generic = dragomir_bounds(gen, pair);
  report.measures[gen.name] = generic.value;
  report.bounds[gen.name] = {generic.value, generic.e, generic.a, generic.b};
  report.checks = dragomir_checks(gen.name, generic);

  if (info(*m).has_closed_forms) {
    const auto closed = closed_bounds(*m, pair);
    report.bounds[gen.name + ":closed"] = {closed.value, closed.e, closed.a, closed.b};
    const auto add = [&](BoundComponent c, double g, double k) {
      const bool agrees = std::abs(g - k) <= 1e-8 * std::max(1.0, std::abs(g));
      report.closed_forms[gen.name + "." + std::string(name(c))] = {g, k, agrees,
                                                                     closed_form_matches_generic(*m, c)};
    };
    add(BoundComponent::E, generic.e, closed.e);
    add(BoundComponent::A, generic.a, closed.a);
    if (generic.b && closed.b) add(BoundComponent::B, *generic.b, *closed.b);
  }
  return finish(report, out);
}

int cmd_verify(const PairInput& in, std::ostream& out) {
  const auto pair = in.load_pair();
  Report report;
  report.metadata = pair_metadata("verify", pair);
  for (const auto& mi : kMeasures) report.measures[std::string(mi.name)] = evaluate(mi.id, pair);
  report.checks = verify_checks(pair);
  return finish(report, out);
}

int cmd_fuzz(std::uint64_t trials, const std::string& dims, std::uint64_t seed, double floor, unsigned jobs,
             std::ostream& out) {
  if (trials < 1) throw UsageError("--trials must be at least 1");
  const auto [lo, hi] = parse_dims(dims);
  if (lo < 2 || hi < lo) throw UsageError("--dims must satisfy 2 <= LO <= HI");
  if (!(floor > 0.0) || !(floor < 1.0 / static_cast<double>(hi))) {
    throw UsageError("--floor must lie in (0, 1/HI)");
  }
  FuzzConfig cfg{trials, lo, hi, seed, floor, std::max(1u, jobs)};

  Report report;
  report.metadata.command = "fuzz";
  report.metadata.seed = seed;
  report.metadata.trials = trials;
  report.metadata.dim_lo = lo;
  report.metadata.dim_hi = hi;
  report.metadata.floor = floor;
  report.fuzz = run_fuzz(cfg);
  return finish(report, out);
}

int cmd_relate(const std::string& relation_name, double r, double big_r, std::ostream& out) {
  const auto rel = parse_relation(relation_name);
  if (!rel) throw UsageError("unknown relation '" + relation_name + "'");
  const auto cc = cross_check(*rel, r, big_r);

  Report report;
  report.metadata.command = "relate";
  report.metadata.r = r;
  report.metadata.big_r = big_r;
  report.relation = RelationEntry{relation_name, cc.analytic.m,  cc.analytic.big_m, cc.numeric.m,
                                  cc.numeric.big_m, cc.tolerance, cc.pass};
  const double slack = cc.tolerance;
  report.checks.push_back(
      make_check("relate/" + relation_name + "/m_agreement", std::abs(cc.analytic.m - cc.numeric.m), 0.0, slack));
  report.checks.push_back(make_check("relate/" + relation_name + "/M_agreement",
                                     std::abs(cc.analytic.big_m - cc.numeric.big_m), 0.0, slack));
  return finish(report, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divergence measures, f-divergence bounds and inequality verification", "fdiv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto* compute = app.add_subcommand("compute", "Evaluate divergence measures for a pair");
  PairInput compute_in;
  compute_in.attach(*compute);
  std::string measures;
  std::string format = "json";
  compute->add_option("--measures", measures, "Comma-separated measure names (default: all)");
  compute->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* bounds = app.add_subcommand("bounds", "E, A and B bounds for one measure");
  PairInput bounds_in;
  bounds_in.attach(*bounds);
  std::string bounds_measure;
  bounds->add_option("--measure", bounds_measure, "Measure name")->required();

  auto* verify = app.add_subcommand("verify", "Run every identity and inequality check on a pair");
  PairInput verify_in;
  verify_in.attach(*verify);

  auto* fuzz = app.add_subcommand("fuzz", "Run the verification suite on sampled pairs");
  std::uint64_t trials = 10000;
  std::string dims = "2..50";
  std::uint64_t seed = 42;
  double floor = kDefaultFloor;
  unsigned jobs = 1;
  fuzz->add_option("--trials", trials, "Number of sampled pairs");
  fuzz->add_option("--dims", dims, "Dimension range LO..HI");
  fuzz->add_option("--seed", seed, "Base seed");
  fuzz->add_option("--floor", floor, "Lower clamp for sampled entries");
  fuzz->add_option("--jobs", jobs, "Worker threads (output does not depend on this)");

  auto* relate = app.add_subcommand("relate", "Analytic and numeric coefficients of a relation");
  std::string relation_name;
  double r = 0.0;
  double big_r = 0.0;
  relate->add_option("--relation", relation_name, "Relation name, e.g. d-delta")->required();
  relate->add_option("--r", r, "Lower ratio bound")->required();
  relate->add_option("--R", big_r, "Upper ratio bound")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (compute->parsed()) return cmd_compute(compute_in, measures, format, out);
    if (bounds->parsed()) return cmd_bounds(bounds_in, bounds_measure, out);
    if (verify->parsed()) return cmd_verify(verify_in, out);
    if (fuzz->parsed()) return cmd_fuzz(trials, dims, seed, floor, jobs, out);
    if (relate->parsed()) return cmd_relate(relation_name, r, big_r, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace fdv::cli
