#include <doctest.h>

#include <cmath>
#include <limits>

#include "fdiv/error.hpp"
#include "fdiv/report.hpp"
#include "fdiv/simplex.hpp"

using namespace fdv;

namespace {

double awkward_real(SimplexSampler& rng) {
  switch (rng.next_index(0, 5)) {
    case 0: return std::ldexp(rng.next_open_unit(), static_cast<int>(rng.next_index(0, 200)) - 100);
    case 1: return -rng.next_open_unit() / 3.0;
    case 2: return std::nextafter(1.0, 2.0);
    case 3: return std::numeric_limits<double>::denorm_min() * static_cast<double>(rng.next_index(1, 9));
    case 4: return std::numeric_limits<double>::quiet_NaN();
    default: return rng.next_index(0, 1) ? std::numeric_limits<double>::infinity() : 0.1 + 0.2;
  }
}

Report random_report(std::uint64_t seed) {
  SimplexSampler rng(seed);
  Report rep;
  rep.metadata.command = "verify";
  rep.metadata.r = awkward_real(rng);
  rep.metadata.big_r = 1.0 / 3.0;
  if (rng.next_index(0, 1)) rep.metadata.n = rng.next_index(2, 100);
  if (rng.next_index(0, 1)) rep.metadata.seed = rng.next_u64();
  rep.metadata.floor = 1e-6;
  for (int i = 0; i < 4; ++i) rep.measures["m" + std::to_string(i)] = awkward_real(rng);
  rep.bounds["j"] = {awkward_real(rng), awkward_real(rng), awkward_real(rng),
                     rng.next_index(0, 1) ? std::optional<double>(awkward_real(rng)) : std::nullopt};
  rep.closed_forms["j.e"] = {awkward_real(rng), awkward_real(rng), true, false};
  for (int i = 0; i < 5; ++i) {
    rep.checks.push_back(make_check("c" + std::to_string(i), awkward_real(rng), awkward_real(rng), 1e-9,
                                    i == 2 ? "skipped" : ""));
  }
  if (rng.next_index(0, 1)) rep.relation = RelationEntry{"g-t", 0.4, 18.0 / 13.0, 0.4, 18.0 / 13.0, 1e-8, true};
  if (rng.next_index(0, 1)) rep.fuzz["identity/x"] = {10, 0, awkward_real(rng), 3};
  return rep;
}

// NaN != NaN, so compare through the serialized text instead of operator==
bool same_bits(const Report& a, const Report& b) { return to_json_text(a) == to_json_text(b); }

}  // namespace

TEST_CASE("make_check pass flag follows lhs <= rhs + slack") {
  CHECK(make_check("a", 1.0, 1.0, 0.0).pass);
  CHECK(make_check("a", 1.0 + 1e-10, 1.0, 1e-9).pass);
  CHECK_FALSE(make_check("a", 1.0 + 1e-8, 1.0, 1e-9).pass);
  CHECK_FALSE(make_check("a", NAN, 1.0, 1e-9).pass);
}

TEST_CASE("report round trip property") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto rep = random_report(seed);
    const auto text = to_json_text(rep);
    const auto back = report_from_json(nlohmann::json::parse(text));
    CHECK(same_bits(rep, back));
    if (text.find("\"nan\"") == std::string::npos) CHECK(back == rep);
  }
}

TEST_CASE("round trip keeps full double precision") {
  Report rep;
  rep.metadata.command = "compute";
  rep.measures["x"] = 0.1 + 0.2;
  rep.measures["y"] = std::nextafter(1.0 / 3.0, 1.0);
  rep.measures["z"] = 5e-324;
  const auto back = report_from_json(nlohmann::json::parse(to_json_text(rep)));
  CHECK(back.measures.at("x") == 0.1 + 0.2);
  CHECK(back.measures.at("y") == std::nextafter(1.0 / 3.0, 1.0));
  CHECK(back.measures.at("z") == 5e-324);
}

TEST_CASE("pass flags in serialized checks stay consistent") {
  const auto rep = random_report(7);
  const auto doc = to_json(rep);
  for (const auto& b : report_from_json(doc).checks) CHECK(b.pass == (b.lhs <= b.rhs + b.slack));
  CHECK(doc.at("pass").get<bool>() == rep.all_pass());
}

TEST_CASE("all_pass accounts for fuzz failures") {
  Report rep;
  rep.metadata.command = "fuzz";
  rep.fuzz["a"] = {5, 0, 1.0, 0};
  CHECK(rep.all_pass());
  rep.fuzz["b"] = {5, 1, -1.0, 2};
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("malformed reports raise ParseError") {
  for (const char* text : {R"({})", R"({"metadata": {"command": "x"}})",
                           R"({"metadata": {"command": "x", "version": "1"}, "measures": {"a": "oops"},
                               "bounds": {}, "closed_forms": {}, "checks": []})"}) {
    try {
      report_from_json(nlohmann::json::parse(text));
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("csv output") {
  Report rep;
  rep.metadata.command = "compute";
  rep.metadata.r = 2.0 / 3.0;
  rep.metadata.big_r = 2.0;
  rep.measures["chi2"] = 1.0 / 3.0;
  CHECK(to_csv_text(rep) == "name,value\nchi2,0.3333333333333333\nr,0.6666666666666666\nR,2\n");
  CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}
