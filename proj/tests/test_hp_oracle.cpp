// 50-digit reference computations, independent of the double-precision library code paths.
#include <doctest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <vector>

#include "fdiv/catalog.hpp"
#include "fdiv/simplex.hpp"

using namespace fdv;
using Real = boost::multiprecision::cpp_dec_float_50;
using Vec = std::vector<Real>;

namespace {

Vec to_hp(const Distribution& d) {
  Vec v;
  Real s = 0;
  for (double x : d.probs()) {
    v.emplace_back(x);
    s += v.back();
  }
  for (auto& x : v) x /= s;
  return v;
}

Real sum(const Vec& p, const Vec& q, auto term) {
  Real s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += term(p[i], q[i]);
  return s;
}

Real kl(const Vec& p, const Vec& q) {
  return sum(p, q, [](const Real& a, const Real& b) { return a * log(a / b); });
}
Real rel_j(const Vec& p, const Vec& q) {
  return sum(p, q, [](const Real& a, const Real& b) { return (a - b) * log((a + b) / (2 * b)); });
}
Real rel_js(const Vec& p, const Vec& q) {
  return sum(p, q, [](const Real& a, const Real& b) { return a * log(2 * a / (a + b)); });
}
Real rel_ag(const Vec& p, const Vec& q) {
  return sum(p, q, [](const Real& a, const Real& b) { return (a + b) / 2 * log((a + b) / (2 * a)); });
}
Vec midpoint(const Vec& p, const Vec& q) {
  Vec m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = (p[i] + q[i]) / 2;
  return m;
}

// Jensen-Shannon generator and the arithmetic-geometric first derivative
Real f_js(const Real& x) { return x / 2 * log(x) + (x + 1) / 2 * log(2 / (x + 1)); }
Real df_ag(const Real& x) { return (1 - 1 / x + 2 * log((x + 1) / (2 * sqrt(x)))) / 4; }
Real lmi(const Real& a, const Real& b) { return (log(b) - log(a)) / (b - a); }

const Real kTiny("1e-45");

}  // namespace

TEST_CASE("D(Q||P) equals 2 (F + G), not (F + G) / 2, at 50 digits") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pair = sample_pair(seed + 123456, 2 + seed % 10, 1e-6);
    const auto p = to_hp(pair.p());
    const auto q = to_hp(pair.q());
    const Real d_qp = rel_j(q, p);
    const Real fg = rel_js(p, q) + rel_ag(p, q);
    CHECK(abs(d_qp - 2 * fg) < kTiny);
    CHECK(abs(d_qp - fg / 2) > Real("1e-6"));
  }
}

TEST_CASE("D(P||Q) equals 2 [K(Q||M) + K(M||Q)] at 50 digits") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pair = sample_pair(seed + 777, 2 + seed % 10, 1e-6);
    const auto p = to_hp(pair.p());
    const auto q = to_hp(pair.q());
    const auto m = midpoint(p, q);
    const Real d = rel_j(p, q);
    CHECK(abs(d - 2 * (kl(q, m) + kl(m, q))) < kTiny);
    CHECK(abs(d - (kl(q, m) + kl(m, q)) / 2) > Real("1e-6"));
    // the other K-representations hold as tabulated
    CHECK(abs(rel_js(p, q) - kl(p, m)) < kTiny);
    CHECK(abs(rel_ag(p, q) - kl(m, p)) < kTiny);
  }
}

TEST_CASE("double-precision identity residuals track the 50-digit truth") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pair = sample_pair(seed + 31, 2 + seed % 49, 1e-6);
    const auto p = to_hp(pair.p());
    const auto q = to_hp(pair.q());
    const double d_qp = evaluate(Measure::RelativeJ, pair.q().probs(), pair.p().probs());
    CHECK(std::abs(d_qp - rel_j(q, p).convert_to<double>()) <= 1e-13);
    const double f = evaluate(Measure::RelativeJS, pair);
    CHECK(std::abs(f - rel_js(p, q).convert_to<double>()) <= 1e-13);
  }
}

TEST_CASE("chord bound for Jensen-Shannon: '+' between the chord terms, not '-'") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pair = sample_pair(seed + 4242, 2 + seed % 10, 1e-6);
    const Real r(pair.min_ratio());
    const Real big_r(pair.max_ratio());
    const Real chord = ((big_r - 1) * f_js(r) + (1 - r) * f_js(big_r)) / (big_r - r);
    const Real plus = ((big_r - 1) * (r * log(r) + (r + 1) * log(2 / (r + 1))) +
                       (1 - r) * (big_r * log(big_r) + (big_r + 1) * log(2 / (big_r + 1)))) /
                      (2 * (big_r - r));
    const Real minus = ((big_r - 1) * (r * log(r) + (r + 1) * log(2 / (r + 1))) -
                        (1 - r) * (big_r * log(big_r) + (big_r + 1) * log(2 / (big_r + 1)))) /
                       (2 * (big_r - r));
    CHECK(abs(chord - plus) < kTiny);
    CHECK(abs(chord - minus) > Real("1e-8"));
    const double tabulated = *closed_bounds(Measure::JensenShannon, pair).b;
    CHECK(std::abs(tabulated - minus.convert_to<double>()) <= 1e-12 * std::max(1.0, std::abs(tabulated)));
  }
}

TEST_CASE("endpoint bound for the arithmetic-geometric divergence carries 2 L(r+1, R+1)") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pair = sample_pair(seed + 999, 2 + seed % 10, 1e-6);
    const Real r(pair.min_ratio());
    const Real big_r(pair.max_ratio());
    const Real endpoint = (big_r - r) * (df_ag(big_r) - df_ag(r)) / 4;
    const Real w2 = (big_r - r) * (big_r - r);
    const Real doubled = w2 / 16 * (1 / (r * big_r) + 2 * lmi(r + 1, big_r + 1) - lmi(r, big_r));
    const Real single = w2 / 16 * (1 / (r * big_r) + lmi(r + 1, big_r + 1) - lmi(r, big_r));
    CHECK(abs(endpoint - doubled) < kTiny);
    CHECK(abs(endpoint - single) > Real("1e-12"));
    const double generic = dragomir_bounds(generator(Measure::ArithmeticGeometric), pair).a;
    CHECK(std::abs(generic - endpoint.convert_to<double>()) <= 1e-12 * std::max(1.0, generic));
  }
}
