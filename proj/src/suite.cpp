#include "fdiv/suite.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "fdiv/error.hpp"
#include "fdiv/numeric.hpp"
#include "fdiv/prop_bounds.hpp"

namespace fdv {

std::vector<Check> dragomir_checks(const std::string& gen_name, const DragomirBounds& bd) {
  const std::string prefix = "dragomir/" + gen_name + "/";
  const double slack = inequality_slack(bd.a);
  std::vector<Check> out;
  out.push_back(make_check(prefix + "value_nonnegative", 0.0, bd.value, slack));
  out.push_back(make_check(prefix + "value_le_e", bd.value, bd.e, slack));
  out.push_back(make_check(prefix + "e_le_a", bd.e, bd.a, slack));
  if (bd.b) {
    const double gap = *bd.b - bd.value;
    out.push_back(make_check(prefix + "value_le_b", bd.value, *bd.b, slack));
    out.push_back(make_check(prefix + "b_le_a", *bd.b, bd.a, slack));
    out.push_back(make_check(prefix + "b_minus_value_nonnegative", 0.0, gap, slack));
    out.push_back(make_check(prefix + "b_minus_value_le_a", gap, bd.a, slack));
  } else {
    out.push_back(make_check(prefix + "b", 0.0, 0.0, 0.0, "skipped: r == R"));
  }
  return out;
}

std::vector<Check> verify_checks(const DistributionPair& pair) {
  std::vector<Check> out;

  for (const auto& id : identities(pair)) {
    out.push_back(make_check("identity/" + id.name, id.residual, id.bound, 0.0));
  }
  {
    const std::vector<double> flat(pair.size(), 1.0 / static_cast<double>(pair.size()));
    const auto uniform = Distribution::validate(flat);
    const auto id = parallelogram(pair.p(), pair.q(), uniform);
    out.push_back(make_check("identity/parallelogram_uniform", id.residual, id.bound, 0.0));
  }

  for (const auto& l : known_chains(pair)) {
    out.push_back(make_check("chain/" + l.name, l.lhs, l.rhs, l.slack));
  }

  for (const auto& ri : kRelations) {
    const auto rc = verify_relation(ri.id, pair);
    const std::string prefix = "relation/" + std::string(ri.name) + "/";
    out.push_back(make_check(prefix + "lower", rc.coeffs.m * rc.rhs, rc.lhs, rc.slack));
    out.push_back(make_check(prefix + "upper", rc.lhs, rc.coeffs.big_m * rc.rhs, rc.slack));
  }

  for (Measure m : generator_measures()) {
    const auto gen = generator(m);
    const auto checks = dragomir_checks(gen.name, dragomir_bounds(gen, pair));
    out.insert(out.end(), checks.begin(), checks.end());
  }

  const double r = pair.min_ratio();
  const double big_r = pair.max_ratio();
  if (r == big_r) {
    for (const auto& label : {"zeta1", "zeta3", "xi1", "xi2", "xi3", "xi4"}) {
      out.push_back(make_check(std::string("certificate/") + label, 0.0, 0.0, 0.0,
                               "skipped: degenerate pair"));
    }
  } else {
    const auto cert = certificates(pair);
    const double slack = inequality_slack(big_r);
    for (const auto& [label, value] : cert.entries()) {
      const std::string prefix = "certificate/" + std::string(label) + "/";
      out.push_back(make_check(prefix + "ge_r", r, value, slack));
      out.push_back(make_check(prefix + "le_R", value, big_r, slack));
    }
  }
  return out;
}

DistributionPair fuzz_pair(const FuzzConfig& cfg, std::uint64_t index) {
  SimplexSampler sampler(trial_seed(cfg.seed, index));
  const std::size_t n = sampler.next_index(cfg.dim_lo, cfg.dim_hi);
  auto p = sampler.next_distribution(n, cfg.floor);
  auto q = sampler.next_distribution(n, cfg.floor);
  return DistributionPair::make(std::move(p), std::move(q));
}

namespace {

using Summaries = std::map<std::string, FamilySummary>;

void fold(Summaries& acc, const std::string& name, const FamilySummary& s) {
  auto [it, inserted] = acc.try_emplace(name, s);
  if (inserted) return;
  auto& cur = it->second;
  cur.evaluated += s.evaluated;
  cur.failures += s.failures;
  // ties resolve to the earliest trial, so the merge order never shows
  if (s.worst_margin < cur.worst_margin ||
      (s.worst_margin == cur.worst_margin && s.worst_trial < cur.worst_trial)) {
    cur.worst_margin = s.worst_margin;
    cur.worst_trial = s.worst_trial;
  }
}

Summaries run_range(const FuzzConfig& cfg, std::uint64_t begin, std::uint64_t end) {
  Summaries acc;
  for (std::uint64_t t = begin; t < end; ++t) {
    for (const auto& c : verify_checks(fuzz_pair(cfg, t))) {
      const double margin = c.rhs + c.slack - c.lhs;
      fold(acc, c.name, {1, c.pass ? 0u : 1u, std::isnan(margin) ? -HUGE_VAL : margin, t});
    }
  }
  return acc;
}

}  // namespace

std::map<std::string, FamilySummary> run_fuzz(const FuzzConfig& cfg) {
  if (cfg.trials < 1) throw Error(ErrorCode::BadDimension, "trials must be at least 1");
  if (cfg.dim_lo < 2 || cfg.dim_hi < cfg.dim_lo) {
    throw Error(ErrorCode::BadDimension, "dimension range must satisfy 2 <= LO <= HI");
  }
  if (!(cfg.floor > 0.0) || !(cfg.floor < 1.0 / static_cast<double>(cfg.dim_hi))) {
    throw Error(ErrorCode::BadFloor, "floor must lie in (0, 1/HI)");
  }
  const std::uint64_t jobs = std::clamp<std::uint64_t>(cfg.jobs, 1, cfg.trials);
  std::vector<Summaries> parts(jobs);
  const auto chunk_begin = [&](std::uint64_t k) { return cfg.trials * k / jobs; };
  if (jobs == 1) {
    parts[0] = run_range(cfg, 0, cfg.trials);
  } else {
    std::vector<std::jthread> workers;
    for (std::uint64_t k = 0; k < jobs; ++k) {
      workers.emplace_back([&, k] { parts[k] = run_range(cfg, chunk_begin(k), chunk_begin(k + 1)); });
    }
  }
  Summaries merged;
  for (const auto& part : parts) {
    for (const auto& [name, s] : part) fold(merged, name, s);
  }
  return merged;
}

}  // namespace fdv
