#include "fdiv/catalog.hpp"

#include <cmath>

#include "fdiv/error.hpp"
#include "fdiv/numeric.hpp"

namespace fdv {

namespace {

template <typename Term>
double sum_terms(std::span<const double> p, std::span<const double> q, Term&& term) {
  if (p.size() != q.size()) throw Error(ErrorCode::LengthMismatch, "vectors differ in length");
  CompensatedSum s;
  for (std::size_t i = 0; i < p.size(); ++i) s += term(p[i], q[i]);
  return s.value();
}

std::vector<double> midpoint(std::span<const double> p, std::span<const double> q) {
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = 0.5 * (p[i] + q[i]);
  return m;
}

// Logs of ratios near 1 go through log1p of an exactly formed difference; far from 1 the
// difference is the inaccurate part, so the plain log is used there.
constexpr double kLog1pRange = 0.5;

// ln(a/b)
double log_ratio(double a, double b) {
  const double d = (a - b) / b;
  return std::abs(d) <= kLog1pRange ? std::log1p(d) : std::log(a / b);
}

// ln(2a/(a+b))
double log_to_mid(double a, double b) {
  const double u = (a - b) / (a + b);
  return std::abs(u) <= kLog1pRange ? std::log1p(u) : std::log(2 * a / (a + b));
}

// ln((a+b)/(2 sqrt(ab)))
double log_am_gm(double a, double b) {
  const double u = (a - b) / (a + b);
  return std::abs(u) <= kLog1pRange ? -0.5 * std::log1p(-u * u) : std::log((a + b) / (2 * std::sqrt(a * b)));
}


}  // namespace

const MeasureInfo& info(Measure m) { return kMeasures[static_cast<std::size_t>(m)]; }

std::string_view name(Measure m) { return info(m).name; }

std::optional<Measure> parse_measure(std::string_view text) {
  for (const auto& mi : kMeasures) {
    if (mi.name == text) return mi.id;
  }
  return std::nullopt;
}

bool is_similarity(Measure m) {
  return m == Measure::Bhattacharyya || m == Measure::HarmonicMean;
}

bool has_generator(Measure m) { return !is_similarity(m); }

double kl(std::span<const double> p, std::span<const double> q) {
  return sum_terms(p, q, [](double a, double b) { return a * log_ratio(a, b); });
}

double evaluate(Measure m, std::span<const double> p, std::span<const double> q) {
  switch (m) {
    case Measure::ChiSquare:
      return sum_terms(p, q, [](double a, double b) { return (a - b) * (a - b) / b; });
    case Measure::KL:
      return kl(p, q);
    case Measure::RelativeJ:
      return sum_terms(p, q, [](double a, double b) { return (a - b) * std::log((a + b) / (2 * b)); });
    case Measure::RelativeJS:
      return sum_terms(p, q, [](double a, double b) { return a * log_to_mid(a, b); });
    case Measure::RelativeAG:
      return sum_terms(p, q, [](double a, double b) {
        return -0.5 * (a + b) * log_to_mid(a, b);
      });
    case Measure::Hellinger:
      return 0.5 * sum_terms(p, q, [](double a, double b) {
               const double d = std::sqrt(a) - std::sqrt(b);
               return d * d;
             });
    case Measure::Bhattacharyya:
      return sum_terms(p, q, [](double a, double b) { return std::sqrt(a * b); });
    case Measure::Triangular:
      return sum_terms(p, q, [](double a, double b) { return (a - b) * (a - b) / (a + b); });
    case Measure::HarmonicMean:
      return sum_terms(p, q, [](double a, double b) { return 2 * a * b / (a + b); });
    case Measure::SymmetricChiSquare:
      return sum_terms(p, q, [](double a, double b) { return (a - b) * (a - b) * (a + b) / (a * b); });
    case Measure::JDivergence:
      return sum_terms(p, q, [](double a, double b) { return (a - b) * std::log(a / b); });
    case Measure::JensenShannon:
      return 0.5 * sum_terms(p, q, [](double a, double b) {
               return a * log_to_mid(a, b) + b * log_to_mid(b, a);
             });
    case Measure::ArithmeticGeometric:
      return sum_terms(p, q, [](double a, double b) {
        return 0.5 * (a + b) * log_am_gm(a, b);
      });
  }
  return 0.0;
}

double evaluate(Measure m, const DistributionPair& pair) {
  return evaluate(m, pair.p().probs(), pair.q().probs());
}

Generator generator(Measure m) {
  using std::log;
  using std::sqrt;
  switch (m) {
    case Measure::ChiSquare:
      return {"chi2", [](double x) { return (x - 1) * (x - 1); },
              [](double x) { return 2 * (x - 1); }, [](double) { return 2.0; }};
    case Measure::KL:
      return {"kl", [](double x) { return x * log(x); }, [](double x) { return 1 + log(x); },
              [](double x) { return 1 / x; }};
    case Measure::Hellinger:
      return {"hellinger",
              [](double x) {
                const double d = sqrt(x) - 1;
                return 0.5 * d * d;
              },
              [](double x) { return 0.5 * (1 - 1 / sqrt(x)); },
              [](double x) { return 0.25 / (x * sqrt(x)); }};
    case Measure::SymmetricChiSquare:
      return {"sym_chi2", [](double x) { return (x - 1) * (x - 1) * (x + 1) / x; },
              [](double x) { return 2 * x - 1 - 1 / (x * x); },
              [](double x) { return 2 + 2 / (x * x * x); }};
    case Measure::RelativeJ:
      return {"rel_j", [](double x) { return (x - 1) * log((x + 1) / 2); },
              [](double x) { return (x - 1) / (x + 1) + log((x + 1) / 2); },
              [](double x) { return (x + 3) / ((x + 1) * (x + 1)); }};
    case Measure::RelativeJS:
      return {"rel_js", [](double x) { return x * log_to_mid(x, 1) - (x - 1) / 2; },
              [](double x) { return log_to_mid(x, 1) - 0.5 * (x - 1) / (x + 1); },
              [](double x) { return 1 / (x * (x + 1) * (x + 1)); }};
    case Measure::RelativeAG:
      return {"rel_ag", [](double x) { return (x - 1) / 2 - (x + 1) / 2 * log_to_mid(x, 1); },
              [](double x) { return 0.5 * ((x - 1) / x - log_to_mid(x, 1)); },
              [](double x) { return 1 / (2 * x * x * (x + 1)); }};
    case Measure::Triangular:
      return {"triangular", [](double x) { return (x - 1) * (x - 1) / (x + 1); },
              [](double x) { return (x - 1) * (x + 3) / ((x + 1) * (x + 1)); },
              [](double x) { return 8 / ((x + 1) * (x + 1) * (x + 1)); }};
    case Measure::JDivergence:
      return {"j", [](double x) { return (x - 1) * log(x); },
              [](double x) { return 1 - 1 / x + log(x); },
              [](double x) { return (x + 1) / (x * x); }};
    case Measure::JensenShannon:
      return {"js",
              [](double x) {
                return 0.5 * (x * log_to_mid(x, 1) + log_to_mid(1, x));
              },
              [](double x) { return 0.5 * log_to_mid(x, 1); },
              [](double x) { return 1 / (2 * x * (x + 1)); }};
    case Measure::ArithmeticGeometric:
      return {"ag",
              [](double x) {
                return 0.5 * (x + 1) * log_am_gm(x, 1);
              },
              [](double x) {
                return 0.25 * (1 - 1 / x + 2 * log_am_gm(x, 1));
              },
              [](double x) { return 0.25 * (1 + x * x) / (x * x + x * x * x); }};
    case Measure::Bhattacharyya:
    case Measure::HarmonicMean:
      break;
  }
  throw Error(ErrorCode::NoGenerator,
              std::string(name(m)) + " is a similarity and has no normalized convex generator");
}

std::vector<Measure> generator_measures() {
  std::vector<Measure> out;
  for (const auto& mi : kMeasures) {
    if (has_generator(mi.id)) out.push_back(mi.id);
  }
  return out;
}

std::vector<Measure> closed_form_measures() {
  std::vector<Measure> out;
  for (const auto& mi : kMeasures) {
    if (mi.has_closed_forms) out.push_back(mi.id);
  }
  return out;
}

std::string_view name(BoundComponent c) {
  switch (c) {
    case BoundComponent::E: return "e";
    case BoundComponent::A: return "a";
    case BoundComponent::B: return "b";
  }
  return "?";
}

bool closed_form_matches_generic(Measure m, BoundComponent c) {
  if (m == Measure::JensenShannon && c == BoundComponent::B) return false;
  if (m == Measure::ArithmeticGeometric && c == BoundComponent::A) return false;
  return true;
}

DragomirBounds closed_bounds(Measure m, const DistributionPair& pair) {
  if (!info(m).has_closed_forms) {
    throw Error(ErrorCode::NoClosedForm, std::string(name(m)) + " has no tabulated bounds");
  }
  using std::log;
  using std::sqrt;
  const auto p = pair.p().probs();
  const auto q = pair.q().probs();
  const double r = pair.min_ratio();
  const double big_r = pair.max_ratio();
  const double w = big_r - r;
  const bool degenerate = r == big_r;
  const auto lmi = log_mean_inverse;

  DragomirBounds out;
  out.value = evaluate(m, pair);
  switch (m) {
    case Measure::RelativeJ:
      out.e = evaluate(Measure::RelativeJ, p, q) + evaluate(Measure::Triangular, p, q);
      out.a = 0.25 * w * w * (2 / ((big_r + 1) * (r + 1)) + lmi(r + 1, big_r + 1));
      if (!degenerate) out.b = (big_r - 1) * (1 - r) * lmi(r + 1, big_r + 1);
      break;
    case Measure::RelativeJS: {
      const double l = lmi(r / (r + 1), big_r / (big_r + 1));
      out.e = evaluate(Measure::RelativeJ, q, p) - 0.5 * evaluate(Measure::Triangular, p, q);
      out.a = 0.25 * w * w / ((big_r + 1) * (r + 1)) * (l - 1);
      if (!degenerate) {
        out.b = (big_r * log(2 * big_r / (big_r + 1)) - r * log(2 * r / (r + 1))) / w -
                r * big_r / ((big_r + 1) * (r + 1)) * l;
      }
      break;
    }
    case Measure::RelativeAG: {
      const double l = lmi((r + 1) / r, (big_r + 1) / big_r);
      out.e = 0.5 * (evaluate(Measure::ChiSquare, q, p) - evaluate(Measure::RelativeJ, q, p));
      out.a = w * w / (8 * r * big_r) * (1 - l);
      if (!degenerate) {
        out.b = 0.5 * log((r + 1) * (big_r + 1) / (4 * r * big_r)) -
                (1 - big_r * r) / (2 * r * big_r) * l;
      }
      break;
    }
    case Measure::Triangular:
      out.e = sum_terms(p, q, [](double a, double b) {
        const double t = (a - b) / (a + b);
        return t * t * (a + 3 * b);
      });
      out.a = w * w * (big_r + r + 2) / ((big_r + 1) * (big_r + 1) * (r + 1) * (r + 1));
      if (!degenerate) out.b = 2 * (big_r - 1) * (1 - r) / ((big_r + 1) * (1 + r));
      break;
    case Measure::JDivergence:
      out.e = evaluate(Measure::JDivergence, p, q) + evaluate(Measure::ChiSquare, q, p);
      out.a = 0.25 * w * w * (1 / (r * big_r) + lmi(r, big_r));
      if (!degenerate) out.b = (big_r - 1) * (1 - r) * lmi(r, big_r);
      break;
    case Measure::JensenShannon:
      out.e = 0.5 * evaluate(Measure::RelativeJ, q, p);
      out.a = 0.125 * w * w / ((big_r + 1) * (r + 1)) * lmi(r / (r + 1), big_r / (big_r + 1));
      if (!degenerate) {
        out.b = ((big_r - 1) * (r * log(r) + (r + 1) * log(2 / (r + 1))) -
                 (1 - r) * (big_r * log(big_r) + (big_r + 1) * log(2 / (big_r + 1)))) /
                (2 * w);
      }
      break;
    case Measure::ArithmeticGeometric:
      out.e = 0.25 * evaluate(Measure::ChiSquare, q, p) +
              0.5 * sum_terms(p, q, [](double a, double b) {
                return (a - b) * log((a + b) / (2 * sqrt(a * b)));
              });
      out.a = w * w / 16 * (1 / (r * big_r) + lmi(r + 1, big_r + 1) - lmi(r, big_r));
      if (!degenerate) {
        out.b = ((big_r - 1) * (r + 1) * log((r + 1) / (2 * sqrt(r))) +
                 (1 - r) * (big_r + 1) * log((big_r + 1) / (2 * sqrt(big_r)))) /
                (2 * w);
      }
      break;
    default:
      break;
  }
  return out;
}

IdentityCheck make_identity_check(std::string name, double lhs, double rhs) {
  IdentityCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = std::abs(lhs - rhs);
  c.bound = kIdentityRelTolerance * std::max(1.0, std::abs(lhs));
  c.pass = c.residual <= c.bound;
  return c;
}

std::vector<IdentityCheck> identities(const DistributionPair& pair) {
  const auto p = pair.p().probs();
  const auto q = pair.q().probs();
  const auto mid = midpoint(p, q);
  const std::span<const double> m(mid);
  const auto ev = [](Measure id, std::span<const double> a, std::span<const double> b) {
    return evaluate(id, a, b);
  };

  const double j = ev(Measure::JDivergence, p, q);
  const double i = ev(Measure::JensenShannon, p, q);
  const double t = ev(Measure::ArithmeticGeometric, p, q);
  const double d_pq = ev(Measure::RelativeJ, p, q);
  const double d_qp = ev(Measure::RelativeJ, q, p);
  const double f_pq = ev(Measure::RelativeJS, p, q);
  const double f_qp = ev(Measure::RelativeJS, q, p);
  const double g_pq = ev(Measure::RelativeAG, p, q);
  const double g_qp = ev(Measure::RelativeAG, q, p);

  std::vector<IdentityCheck> out;
  out.push_back(make_identity_check("j_eq_kl_sum", j, kl(p, q) + kl(q, p)));
  out.push_back(make_identity_check("j_eq_rel_j_sum", j, d_pq + d_qp));
  out.push_back(make_identity_check("hellinger_eq_one_minus_bhattacharyya",
                                    ev(Measure::Hellinger, p, q),
                                    1.0 - ev(Measure::Bhattacharyya, p, q)));
  out.push_back(make_identity_check("triangular_eq_two_one_minus_harmonic",
                                    ev(Measure::Triangular, p, q),
                                    2.0 * (1.0 - ev(Measure::HarmonicMean, p, q))));
  out.push_back(make_identity_check("sym_chi2_eq_chi2_sum", ev(Measure::SymmetricChiSquare, p, q),
                                    ev(Measure::ChiSquare, p, q) + ev(Measure::ChiSquare, q, p)));
  out.push_back(make_identity_check("js_eq_half_rel_js_sum", i, 0.5 * (f_pq + f_qp)));
  out.push_back(make_identity_check("ag_eq_half_rel_ag_sum", t, 0.5 * (g_pq + g_qp)));
  out.push_back(make_identity_check("j_eq_four_js_plus_ag", j, 4.0 * (i + t)));
  // (F + G)(P||Q) = sum (m - p) ln(m / p) = D(Q||P) / 2
  out.push_back(make_identity_check("rel_j_reversed_eq_two_rel_js_plus_rel_ag", d_qp,
                                    2.0 * (f_pq + g_pq)));
  out.push_back(make_identity_check("js_eq_half_kl_to_mid", i, 0.5 * (kl(p, m) + kl(q, m))));
  out.push_back(make_identity_check("j_eq_kl_both_ways", j, kl(p, q) + kl(q, p)));
  out.push_back(make_identity_check("ag_eq_half_kl_from_mid", t, 0.5 * (kl(m, p) + kl(m, q))));
  // K(M||Q) + K(Q||M) = sum (m - q) ln(m / q) = D(P||Q) / 2
  out.push_back(make_identity_check("rel_j_eq_two_kl_q_mid_both_ways", d_pq,
                                    2.0 * (kl(q, m) + kl(m, q))));
  out.push_back(make_identity_check("rel_js_eq_kl_p_to_mid", f_pq, kl(p, m)));
  out.push_back(make_identity_check("rel_ag_eq_kl_mid_to_p", g_pq, kl(m, p)));
  return out;
}

IdentityCheck parallelogram(const Distribution& p, const Distribution& q, const Distribution& u) {
  if (p.size() != q.size() || p.size() != u.size()) {
    throw Error(ErrorCode::LengthMismatch, "parallelogram needs three distributions of equal length");
  }
  const auto mid = midpoint(p.probs(), q.probs());
  const std::span<const double> m(mid);
  const double lhs = kl(p.probs(), u.probs()) + kl(q.probs(), u.probs());
  const double rhs = kl(p.probs(), m) + kl(q.probs(), m) + 2.0 * kl(m, u.probs());
  return make_identity_check("parallelogram", lhs, rhs);
}

}  // namespace fdv
