#include "fdiv/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "fdiv/error.hpp"

namespace fdv {

using nlohmann::json;

namespace {

// JSON has no NaN or infinities; encode them as strings so they survive a round trip.
json real_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw Error(ErrorCode::ParseError, "expected a real number, got " + j.dump());
}

template <typename T>
void put_optional(json& obj, const char* key, const std::optional<T>& v) {
  if (!v) return;
  if constexpr (std::is_floating_point_v<T>) {
    obj[key] = real_to_json(*v);
  } else {
    obj[key] = *v;
  }
}

template <typename T>
std::optional<T> get_optional(const json& obj, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  if constexpr (std::is_floating_point_v<T>) {
    return real_from_json(obj.at(key));
  } else {
    return obj.at(key).get<T>();
  }
}

}  // namespace

Check make_check(std::string name, double lhs, double rhs, double slack, std::string note) {
  Check c{std::move(name), lhs, rhs, slack, false, std::move(note)};
  c.pass = c.lhs <= c.rhs + c.slack;
  return c;
}

bool Report::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  for (const auto& [family, s] : fuzz) {
    if (s.failures != 0) return false;
  }
  return true;
}

json to_json(const Report& report) {
  json doc = json::object();

  json meta = json::object();
  meta["command"] = report.metadata.command;
  meta["version"] = report.metadata.version;
  put_optional(meta, "r", report.metadata.r);
  put_optional(meta, "R", report.metadata.big_r);
  put_optional(meta, "n", report.metadata.n);
  put_optional(meta, "seed", report.metadata.seed);
  put_optional(meta, "trials", report.metadata.trials);
  put_optional(meta, "dim_lo", report.metadata.dim_lo);
  put_optional(meta, "dim_hi", report.metadata.dim_hi);
  put_optional(meta, "floor", report.metadata.floor);
  doc["metadata"] = meta;

  json measures = json::object();
  for (const auto& [k, v] : report.measures) measures[k] = real_to_json(v);
  doc["measures"] = measures;

  json bounds = json::object();
  for (const auto& [k, b] : report.bounds) {
    json e = {{"value", real_to_json(b.value)}, {"e", real_to_json(b.e)}, {"a", real_to_json(b.a)}};
    put_optional(e, "b", b.b);
    bounds[k] = e;
  }
  doc["bounds"] = bounds;

  json closed = json::object();
  for (const auto& [k, c] : report.closed_forms) {
    closed[k] = {{"generic", real_to_json(c.generic)},
                 {"closed", real_to_json(c.closed)},
                 {"agrees", c.agrees},
                 {"expected_to_agree", c.expected_to_agree}};
  }
  doc["closed_forms"] = closed;

  json checks = json::array();
  for (const auto& c : report.checks) {
    json e = {{"name", c.name},
              {"lhs", real_to_json(c.lhs)},
              {"rhs", real_to_json(c.rhs)},
              {"slack", real_to_json(c.slack)},
              {"pass", c.pass}};
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(e);
  }
  doc["checks"] = checks;

  if (report.relation) {
    const auto& r = *report.relation;
    doc["relation"] = {{"relation", r.relation},
                       {"analytic", {{"m", real_to_json(r.analytic_m)}, {"M", real_to_json(r.analytic_big_m)}}},
                       {"numeric", {{"m", real_to_json(r.numeric_m)}, {"M", real_to_json(r.numeric_big_m)}}},
                       {"tolerance", real_to_json(r.tolerance)},
                       {"agrees", r.agrees}};
  }

  if (!report.fuzz.empty()) {
    json fuzz = json::object();
    for (const auto& [k, s] : report.fuzz) {
      fuzz[k] = {{"evaluated", s.evaluated},
                 {"failures", s.failures},
                 {"worst_margin", real_to_json(s.worst_margin)},
                 {"worst_trial", s.worst_trial}};
    }
    doc["fuzz"] = fuzz;
  }

  doc["pass"] = report.all_pass();
  return doc;
}

Report report_from_json(const json& doc) {
  try {
    Report report;
    const auto& meta = doc.at("metadata");
    report.metadata.command = meta.at("command").get<std::string>();
    report.metadata.version = meta.at("version").get<std::string>();
    report.metadata.r = get_optional<double>(meta, "r");
    report.metadata.big_r = get_optional<double>(meta, "R");
    report.metadata.n = get_optional<std::uint64_t>(meta, "n");
    report.metadata.seed = get_optional<std::uint64_t>(meta, "seed");
    report.metadata.trials = get_optional<std::uint64_t>(meta, "trials");
    report.metadata.dim_lo = get_optional<std::uint64_t>(meta, "dim_lo");
    report.metadata.dim_hi = get_optional<std::uint64_t>(meta, "dim_hi");
    report.metadata.floor = get_optional<double>(meta, "floor");

    for (const auto& [k, v] : doc.at("measures").items()) report.measures[k] = real_from_json(v);
    for (const auto& [k, v] : doc.at("bounds").items()) {
      BoundsEntry b{real_from_json(v.at("value")), real_from_json(v.at("e")), real_from_json(v.at("a")),
                    get_optional<double>(v, "b")};
      report.bounds[k] = b;
    }
    for (const auto& [k, v] : doc.at("closed_forms").items()) {
      report.closed_forms[k] = {real_from_json(v.at("generic")), real_from_json(v.at("closed")),
                                v.at("agrees").get<bool>(), v.at("expected_to_agree").get<bool>()};
    }
    for (const auto& v : doc.at("checks")) {
      Check c;
      c.name = v.at("name").get<std::string>();
      c.lhs = real_from_json(v.at("lhs"));
      c.rhs = real_from_json(v.at("rhs"));
      c.slack = real_from_json(v.at("slack"));
      c.pass = v.at("pass").get<bool>();
      if (v.contains("note")) c.note = v.at("note").get<std::string>();
      report.checks.push_back(std::move(c));
    }
    if (doc.contains("relation")) {
      const auto& v = doc.at("relation");
      report.relation = RelationEntry{v.at("relation").get<std::string>(),
                                      real_from_json(v.at("analytic").at("m")),
                                      real_from_json(v.at("analytic").at("M")),
                                      real_from_json(v.at("numeric").at("m")),
                                      real_from_json(v.at("numeric").at("M")),
                                      real_from_json(v.at("tolerance")),
                                      v.at("agrees").get<bool>()};
    }
    if (doc.contains("fuzz")) {
      for (const auto& [k, v] : doc.at("fuzz").items()) {
        report.fuzz[k] = {v.at("evaluated").get<std::uint64_t>(), v.at("failures").get<std::uint64_t>(),
                          real_from_json(v.at("worst_margin")), v.at("worst_trial").get<std::uint64_t>()};
      }
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string to_json_text(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string to_csv_text(const Report& report) {
  std::string out = "name,value\n";
  for (const auto& [k, v] : report.measures) out += k + "," + format_real(v) + "\n";
  if (report.metadata.r) out += "r," + format_real(*report.metadata.r) + "\n";
  if (report.metadata.big_r) out += "R," + format_real(*report.metadata.big_r) + "\n";
  return out;
}

}  // namespace fdv
