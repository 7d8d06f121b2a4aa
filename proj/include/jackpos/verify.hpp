#pragma once

// Named checkers for the linear identities between the ϑ^λ_μ, the rectangular
// table, the extension in independent (alpha, beta), and positivity audits.

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jackpos/errors.hpp"
#include "jackpos/expr_parse.hpp"
#include "jackpos/jack.hpp"
#include "jackpos/json_io.hpp"
#include "jackpos/parallel.hpp"
#include "jackpos/rect.hpp"
#include "jackpos/theta.hpp"

namespace jackpos {

enum class Verdict { pass, fail, finding };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::finding: return "finding";
  }
  return "?";
}

struct Report {
  std::string check_id;
  json params = json::object();
  Verdict verdict = Verdict::pass;
  std::optional<json> witness;
  long runtime_ms = 0;
};

inline json to_json(const Report& r, bool with_timing = false) {
  json j{{"check_id", r.check_id}, {"params", r.params}, {"verdict", verdict_name(r.verdict)}};
  if (r.witness) j["witness"] = *r.witness;
  if (with_timing) j["runtime_ms"] = r.runtime_ms;
  return j;
}

struct Summary {
  std::size_t pass = 0, fail = 0, finding = 0;
  std::vector<Report> first_failures;
};

inline Summary summarize(const std::vector<Report>& reports, std::size_t keep = 5) {
  Summary s;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::finding: ++s.finding; break;
      case Verdict::fail:
        ++s.fail;
        if (s.first_failures.size() < keep) s.first_failures.push_back(r);
        break;
    }
  }
  return s;
}

inline json to_json(const Summary& s) {
  json ff = json::array();
  for (const auto& r : s.first_failures) ff.push_back(to_json(r));
  return {{"pass", s.pass}, {"fail", s.fail}, {"finding", s.finding}, {"first_failures", ff}};
}

/// {"nonneg", "integer", "unit"} plus the offending terms and a unit term.
inline json audit_to_json(const MPoly& f) {
  const auto a = coefficient_audit(f);
  auto term = [&](const std::pair<Exponent, Rational>& t) { return MPoly(f.vars(), {t}).to_string(); };
  json j{{"nonneg", a.all_nonnegative}, {"integer", a.all_integer}, {"unit", a.has_unit_coefficient}};
  if (!a.offending.empty()) {
    json off = json::array();
    for (std::size_t i = 0; i < a.offending.size() && i < 5; ++i) off.push_back(term(a.offending[i]));
    j["offending"] = off;
  }
  if (a.unit_witness) j["unit_witness"] = term(*a.unit_witness);
  return j;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline long elapsed_ms(Clock::time_point t0) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
}

inline Report compare(std::string id, json params, const RatFunc& lhs, const RatFunc& rhs, Clock::time_point t0) {
  Report r{std::move(id), std::move(params)};
  const RatFunc diff = lhs - rhs;
  if (!diff.is_zero()) {
    r.verdict = Verdict::fail;
    r.witness = to_json(diff);
  }
  r.runtime_ms = elapsed_ms(t0);
  return r;
}

inline Report compare(std::string id, json params, const MPoly& lhs, const MPoly& rhs, Clock::time_point t0) {
  Report r{std::move(id), std::move(params)};
  const MPoly diff = lhs - rhs;
  if (!diff.is_zero()) {
    r.verdict = Verdict::fail;
    r.witness = to_json(diff);
  }
  r.runtime_ms = elapsed_ms(t0);
  return r;
}

inline Integer binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

/// ϑ^λ_ρ for any ρ, zero when ρ is heavier than λ.
inline RatFunc vt(const Partition& lambda, const Partition& rho) {
  return RatFunc(theta_hat_general_or_zero(lambda, rho));
}

inline RatFunc vt(const Partition& lambda, const std::optional<Partition>& rho) {
  return rho ? vt(lambda, *rho) : RatFunc();
}

inline std::vector<int> distinct_parts(const Partition& mu) {
  std::vector<int> v;
  for (int x : mu.parts())
    if (v.empty() || v.back() != x) v.push_back(x);
  return v;
}

inline json lm_params(const Partition& lambda, const Partition& mu) {
  return {{"lambda", lambda.to_string()}, {"mu", mu.to_string()}};
}

inline void require_weights(const Partition& lambda, const Partition& mu) {
  require_no_ones(mu);
  if (mu.weight() > lambda.weight())
    throw MuTooHeavy("|mu| exceeds |lambda|: " + mu.to_string() + " vs " + lambda.to_string());
}

inline RatFunc alpha_rf() { return RatFunc(alpha_var()); }
inline RatFunc beta_rf() { return RatFunc(alpha_var() - Rational(1)); }

/// λ_i - (i-1)/alpha
inline RatFunc shifted_part(const Partition& lambda, int i) {
  return RatFunc(Rational(lambda.part(i))) - RatFunc(Rational(i - 1)) / alpha_rf();
}

/// Σ_{r,s} rs m_r (m_s - δ_rs) ϑ_{μ↓(rs)}
inline RatFunc pair_down_sum(const Partition& lambda, const Partition& mu, MuMove move) {
  RatFunc s;
  for (int r : distinct_parts(mu))
    for (int t : distinct_parts(mu)) {
      const int c = r * t * mu.multiplicity(r) * (mu.multiplicity(t) - (r == t ? 1 : 0));
      if (c) s += RatFunc(Rational(c)) * vt(lambda, mu_modify(mu, move, r, t));
    }
  return s;
}

}  // namespace detail

// Every checker accepts `perturb`, added to one scalar coefficient of the identity
// (named per checker); a nonzero value must make a sound checker fail.

/// binom(n-k+m_1, n-r) θ^λ_{μ,1^{n-k}} = Σ_{|ρ|=r} binom(λ,ρ) θ^ρ_{μ,1^{r-k}}.
/// perturb shifts the binomial on the left.
inline Report check_I1_binomial_sum(const Partition& lambda, const Partition& mu, int r,
                                    const Rational& perturb = 0) {
  const auto t0 = detail::Clock::now();
  const int n = lambda.weight(), k = mu.weight();
  if (k > r || r > n) throw Error("I1 needs |mu| <= r <= |lambda|");
  const RatFunc c(Rational(detail::binomial(n - k + mu.multiplicity(1), n - r)) + perturb);
  const RatFunc lhs = c * RatFunc(theta(lambda, mu.with_ones(n - k)));
  RatFunc rhs;
  for (const auto& rho : enumerate_partitions(r, lambda))
    rhs += binom_or_zero(lambda, rho) * RatFunc(theta(rho, mu.with_ones(r - k)));
  json params = detail::lm_params(lambda, mu);
  params["r"] = r;
  return detail::compare("I1_binomial_sum", params, lhs, rhs, t0);
}

/// (n-k) ϑ^λ_μ = Σ_i binom(λ,λ_(i)) ϑ^{λ_(i)}_μ. perturb shifts (n-k).
inline Report check_I2_p1_lower(const Partition& lambda, const Partition& mu, const Rational& perturb = 0) {
  const auto t0 = detail::Clock::now();
  detail::require_weights(lambda, mu);
  const RatFunc lhs = RatFunc(Rational(lambda.weight() - mu.weight()) + perturb) * detail::vt(lambda, mu);
  RatFunc rhs;
  for (const auto& [i, smaller] : box_moves(lambda).remove)
    rhs += binom_one_box(lambda, i) * detail::vt(smaller, mu);
  return detail::compare("I2_p1_lower", detail::lm_params(lambda, mu), lhs, rhs, t0);
}

/// ϑ^λ_μ = Σ_i c_i(λ) ϑ^{λ^(i)}_μ. perturb shifts the unit coefficient on the left.
inline Report check_I3_E0_raise(const Partition& lambda, const Partition& mu, const Rational& perturb = 0) {
  const auto t0 = detail::Clock::now();
  detail::require_weights(lambda, mu);
  const RatFunc lhs = RatFunc(1 + perturb) * detail::vt(lambda, mu);
  RatFunc rhs;
  for (const auto& [i, bigger] : box_moves(lambda).add) rhs += pieri_c(lambda, i) * detail::vt(bigger, mu);
  return detail::compare("I3_E0_raise", detail::lm_params(lambda, mu), lhs, rhs, t0);
}

/// ϑ^λ_{μ,2} + Σ_r r m_r ϑ^λ_{μ↑(r)} = α Σ_i binom(λ,λ_(i)) (λ_i - 1 - (i-1)/α) ϑ^{λ_(i)}_μ.
/// perturb shifts the constant -1 inside the bracket on the right.
inline Report check_I4_E2(const Partition& lambda, const Partition& mu, const Rational& perturb = 0) {
  const auto t0 = detail::Clock::now();
  detail::require_weights(lambda, mu);
  std::vector<int> with2 = mu.parts();
  with2.push_back(2);
  RatFunc lhs = detail::vt(lambda, Partition::sorted(with2));
  for (int r : detail::distinct_parts(mu))
    lhs += RatFunc(Rational(r * mu.multiplicity(r))) * detail::vt(lambda, mu_modify(mu, MuMove::up_r, r));
  RatFunc rhs;
  for (const auto& [i, smaller] : box_moves(lambda).remove)
    rhs += binom_one_box(lambda, i) * (detail::shifted_part(lambda, i) - RatFunc(1 - perturb)) *
           detail::vt(smaller, mu);
  rhs *= detail::alpha_rf();
  return detail::compare("I4_E2", detail::lm_params(lambda, mu), lhs, rhs, t0);
}

/// Σ•_r r m_r ϑ^λ_{μ↓(r)} = Σ_i c_i(λ) (λ_i - (i-1)/α) ϑ^{λ^(i)}_μ.
/// perturb shifts the coefficient of ϑ^λ_μ, which is zero in the identity.
inline Report check_I5_E0_N0(const Partition& lambda, const Partition& mu, const Rational& perturb = 0) {
  const auto t0 = detail::Clock::now();
  detail::require_weights(lambda, mu);
  RatFunc lhs = RatFunc(perturb) * detail::vt(lambda, mu);
  for (int r : detail::distinct_parts(mu))
    lhs += RatFunc(Rational(r * mu.multiplicity(r))) * detail::vt(lambda, mu_modify(mu, MuMove::down_r, r));
  RatFunc rhs;
  for (const auto& [i, bigger] : box_moves(lambda).add)
    rhs += pieri_c(lambda, i) * detail::shifted_part(lambda, i) * detail::vt(bigger, mu);
  return detail::compare("I5_E0_N0", detail::lm_params(lambda, mu), lhs, rhs, t0);
}

/// Σ_{r,s} rs m_r(m_s-δ) ϑ_{μ↓(rs)} + β Σ• r(r-1) m_r ϑ_{μ↓(r)} + α Σ• r m_r Σ_{i=1}^{r-2} ϑ_{μ↑(i,r-i-1)}
///   = -(n+k) ϑ_μ + α Σ_i c_i(λ) (λ_i - (i-1)/α)^2 ϑ^{λ^(i)}_μ.
/// perturb shifts -(n+k).
inline Report check_I6_D1(const Partition& lambda, const Partition& mu, const Rational& perturb = 0) {
  const auto t0 = detail::Clock::now();
  detail::require_weights(lambda, mu);
  RatFunc lhs = detail::pair_down_sum(lambda, mu, MuMove::down_rs), twist;
  for (int r : detail::distinct_parts(mu)) {
    const int m = mu.multiplicity(r);
    lhs += detail::beta_rf() * RatFunc(Rational(r * (r - 1) * m)) *
           detail::vt(lambda, mu_modify(mu, MuMove::down_r, r));
    for (int i = 1; i <= r - 2; ++i)
      twist += RatFunc(Rational(r * m)) * detail::vt(lambda, mu_modify(mu, MuMove::up_rs, i, r - i - 1));
  }
  lhs += detail::alpha_rf() * twist;
  RatFunc rhs;
  for (const auto& [i, bigger] : box_moves(lambda).add)
    rhs += pieri_c(lambda, i) * detail::shifted_part(lambda, i).pow(2) * detail::vt(bigger, mu);
  rhs = detail::alpha_rf() * rhs +
        RatFunc(Rational(-(lambda.weight() + mu.weight())) + perturb) * detail::vt(lambda, mu);
  return detail::compare("I6_D1", detail::lm_params(lambda, mu), lhs, rhs, t0);
}

namespace detail {

/// Left side of the D2-dagger identity minus its right side, for a given ϑ-evaluator.
inline RatFunc d2dag_residual(const Partition& mu, const std::function<RatFunc(const std::optional<Partition>&)>& v,
                              const RatFunc& two_alpha_d1, const RatFunc& alpha, const RatFunc& beta,
                              const Rational& perturb) {
  RatFunc lhs, twist;
  for (int r : distinct_parts(mu))
    for (int t : distinct_parts(mu)) {
      const int c = r * t * mu.multiplicity(r) * (mu.multiplicity(t) - (r == t ? 1 : 0));
      if (c) lhs += RatFunc(Rational(c)) * v(mu_modify(mu, MuMove::Down_rs, r, t));
    }
  int cr = 0;
  for (int r : distinct_parts(mu)) {
    const int m = mu.multiplicity(r);
    cr += r * (r - 1) * m;
    for (int i = 1; i <= r - 1; ++i) twist += RatFunc(Rational(r * m)) * v(mu_modify(mu, MuMove::Up_rs, i, r - i));
    lhs += RatFunc(Rational(2 * r * m)) * v(mu_modify(mu, MuMove::up_r, r));
  }
  std::vector<int> with2 = mu.parts();
  with2.push_back(2);
  lhs += alpha * twist + v(Partition::sorted(with2));
  const RatFunc rhs = (two_alpha_d1 * RatFunc(1 + perturb / 2) - beta * RatFunc(Rational(cr))) * v(mu);
  return lhs - rhs;
}

}  // namespace detail

/// Σ_{r,s} rs m_r(m_s-δ) ϑ_{μ⇓(rs)} + α Σ• r m_r Σ_{i=1}^{r-1} ϑ_{μ⇑(i,r-i)} + 2 Σ_r r m_r ϑ_{μ↑(r)} + ϑ_{μ,2}
///   = (2α d_1(λ) - β Σ_r r(r-1) m_r) ϑ_μ.  perturb shifts the 2 in 2α d_1.
inline Report check_I7_D2dag(const Partition& lambda, const Partition& mu, const Rational& perturb = 0) {
  const auto t0 = detail::Clock::now();
  detail::require_weights(lambda, mu);
  auto v = [&](const std::optional<Partition>& rho) { return detail::vt(lambda, rho); };
  const RatFunc res = detail::d2dag_residual(mu, v, RatFunc(alpha_d1(lambda) * Rational(2)), detail::alpha_rf(),
                                             detail::beta_rf(), perturb);
  return detail::compare("I7_D2dag", detail::lm_params(lambda, mu), res, RatFunc(), t0);
}

/// With f = α^{k-l(μ)} p_μ (parts 1 allowed):
///   (i)  (p_1^r/r! f)^#(λ) = binom(n-k, r) f^#(λ)
///   (ii) binom(n-k, r-k) f^#(λ) = Σ_{|ρ|=r} binom(λ,ρ) f^#(ρ).
/// perturb shifts both binomials.
inline Report check_prop1(const Partition& lambda, const Partition& mu, int r, const Rational& perturb = 0) {
  const auto t0 = detail::Clock::now();
  const int n = lambda.weight(), k = mu.weight();
  if (k > r || r > n) throw Error("prop1 needs |mu| <= r <= |lambda|");
  const RatFunc f = detail::vt(lambda, mu);
  Rational rfact = 1;
  for (int t = 2; t <= r; ++t) rfact *= t;
  const RatFunc lhs1 = detail::vt(lambda, mu.with_ones(r)) * RatFunc(1 / rfact);
  const RatFunc rhs1 = RatFunc(Rational(detail::binomial(n - k, r)) + perturb) * f;
  const RatFunc lhs2 = RatFunc(Rational(detail::binomial(n - k, r - k)) + perturb) * f;
  RatFunc rhs2;
  for (const auto& rho : enumerate_partitions(r, lambda)) rhs2 += binom_or_zero(lambda, rho) * detail::vt(rho, mu);
  json params = detail::lm_params(lambda, mu);
  params["r"] = r;
  Report rep{"prop1", params};
  const RatFunc d1 = lhs1 - rhs1, d2 = lhs2 - rhs2;
  if (!d1.is_zero() || !d2.is_zero()) {
    rep.verdict = Verdict::fail;
    rep.witness = json{{"part_i", to_json(d1)}, {"part_ii", to_json(d2)}};
  }
  rep.runtime_ms = detail::elapsed_ms(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Rectangles

struct TableRelation {
  std::string name;
  MPoly lhs, rhs;
};

/// The recurrence table for k <= 6, each relation with recurrence values substituted.
inline std::vector<TableRelation> table6_relations() {
  auto V = [](const Partition& mu) { return rect_recurrence(mu).value; };
  auto P = [](std::string_view s) { return parse_poly(s); };
  const MPoly t2 = V({2}), t3 = V({3}), t4 = V({4}), t22 = V({2, 2}), t5 = V({5}), t32 = V({3, 2}), t6 = V({6}),
              t42 = V({4, 2}), t33 = V({3, 3}), t222 = V({2, 2, 2});
  auto L = [&](int b) { return P("p - alpha q + " + std::to_string(b) + " beta"); };
  return {
      {"2", -t2, P("p q (p - alpha q + beta)")},
      {"3", -t3, t2 * L(2) + P("alpha p q (p q - 1)")},
      {"4", -t4, t3 * L(3) + P("2 alpha (p q - 2)") * t2},
      {"2,2", -t22, t3 * Rational(2) + L(1) * P("p q - 2") * t2},
      {"5", -t5, t4 * L(4) + P("2 alpha (p q - 3)") * t3 + P("alpha") * t22},
      {"3,2", t32 * Rational(-5),
       t4 * Rational(12) + L(1) * P("2 (p q - 3)") * t3 + L(2) * t22 * Rational(3) +
           P("3 alpha (p q - 2)(p q - 3)") * t2},
      {"6", -t6, t5 * L(5) + P("2 alpha (p q - 4)") * t4 + P("2 alpha") * t32},
      {"4,2", t42 * Rational(-6),
       t5 * Rational(16) + L(1) * P("2 (p q - 4)") * t4 + L(3) * t32 * Rational(4) + P("8 alpha (p q - 4)") * t22},
      {"3,3", -t33, t5 * Rational(3) + L(2) * t32 + P("alpha (p q - 3)(p q - 4)") * t3},
      {"2,2,2", -t222, t32 * Rational(4) + L(1) * P("p q - 4") * t22},
  };
}

inline std::vector<Report> check_table6(const Rational& perturb = 0) {
  std::vector<Report> out;
  for (const auto& rel : table6_relations()) {
    const auto t0 = detail::Clock::now();
    out.push_back(detail::compare("table6", json{{"mu", rel.name}}, rel.lhs + MPoly::constant(perturb), rel.rhs, t0));
  }
  return out;
}

/// (-1)^k ϑ in (p, -q, β) has nonnegative coefficients; integrality is a separate finding.
inline std::vector<Report> check_theorem1(const Partition& mu) {
  const auto t0 = detail::Clock::now();
  const auto t = rect_recurrence(mu);
  const MPoly f = rect_positive_form(t);
  const auto audit = coefficient_audit(f);
  json params{{"mu", mu.to_string()}};
  Report sign{"theorem1_nonneg", params};
  if (!audit.all_nonnegative) {
    sign.verdict = Verdict::fail;
    sign.witness = audit_to_json(f);
  }
  sign.runtime_ms = detail::elapsed_ms(t0);
  Report integ{"theorem1_integrality", params, Verdict::finding, audit_to_json(f), sign.runtime_ms};
  return {sign, integ};
}

/// Conjecture audit of (-1)^k ϑ on m rectangles with q negated: always a finding.
inline Report check_conjecture1(int m, const Partition& mu) {
  const auto t0 = detail::Clock::now();
  const auto rp = rect_theta_symbolic(m, mu, m == 1 ? RectMode::closed_form_m1 : RectMode::interpolate);
  const MPoly f = negate_q(rp.poly, m, mu.weight());
  Report r{"conjecture1", json{{"m", m}, {"mu", mu.to_string()}}, Verdict::finding, audit_to_json(f)};
  r.runtime_ms = detail::elapsed_ms(t0);
  return r;
}

/// True when a conjecture1 report shows nonnegative integers with a unit coefficient.
inline bool conjecture1_holds(const Report& r) {
  if (!r.witness) return false;
  const json& w = *r.witness;
  return w.at("nonneg").get<bool>() && w.at("integer").get<bool>() && w.at("unit").get<bool>();
}

/// The rectangular sum: polynomial with nonnegative (p, q, β) coefficients, and equal to ϑ after
/// p -> p/α, q -> -q, times (-1)^k α.  perturb is added to the bridged value.
inline std::vector<Report> check_thm2(const Partition& mu, const Rational& perturb = 0) {
  json params{{"mu", mu.to_string()}};
  std::vector<Report> out;
  auto t0 = detail::Clock::now();
  const MPoly t = theorem2_sum(mu);
  const MPoly in_beta = alpha_to_beta(t);
  Report sign{"thm2_nonneg", params};
  if (!coefficient_audit(in_beta).all_nonnegative) {
    sign.verdict = Verdict::fail;
    sign.witness = audit_to_json(in_beta);
  }
  sign.runtime_ms = detail::elapsed_ms(t0);
  out.push_back(sign);

  t0 = detail::Clock::now();
  const RatFunc a = detail::alpha_rf();
  RatFunc bridged = RatFunc(t).substitute(std::map<std::string, RatFunc>{
                        {"p", RatFunc(MPoly::variable("p")) / a}, {"q", RatFunc(-MPoly::variable("q"))}}) *
                    a;
  if (mu.weight() % 2) bridged = -bridged;
  const RatFunc rec(beta_to_alpha(rect_recurrence(mu).value));
  out.push_back(detail::compare("thm2_bridge", params, bridged + RatFunc(perturb), rec, t0));
  return out;
}

/// The printed μ = (3,2) value of the rectangular sum, with β = α - 1.
inline Report check_thm2_display(const Rational& perturb = 0) {
  const auto t0 = detail::Clock::now();
  const MPoly display = beta_to_alpha(parse_poly(
      "p q ((p^4 q + 4 p^3 q^2 + 4 p^2 q^3 + p q^4) alpha^4 + (4 p^3 q + 9 p^2 q^2 + 4 p q^3) alpha^3 beta"
      " + 5 (p^2 q + p q^2) alpha^2 beta^2 + 2 p q alpha beta^3 + (6 p^3 + 31 p^2 q + 31 p q^2 + 6 q^3) alpha^3"
      " + (30 p^2 + 79 p q + 30 q^2) alpha^2 beta + 48 (p + q) alpha beta^2 + 24 beta^3"
      " + 18 (p + q) alpha^2 + 24 alpha beta)"));
  return detail::compare("thm2_display", json{{"mu", "3,2"}}, theorem2_sum({3, 2}) + MPoly::constant(perturb),
                         display, t0);
}

/// binom(p×q, ρ) in closed form against the recursive value at a concrete rectangle.
inline Report check_rect_binom(int p, int q, const Partition& rho, const Rational& perturb = 0) {
  const auto t0 = detail::Clock::now();
  const RatFunc closed = rect_binom(MPoly::constant(p), MPoly::constant(q), rho);
  return detail::compare("rect_binom", json{{"p", p}, {"q", q}, {"rho", rho.to_string()}},
                         closed + RatFunc(perturb), binom_or_zero(Partition::rectangle(p, q), rho), t0);
}

/// The three printed values of the extension beyond the rectangle.
inline std::vector<Report> check_extension_values(const Rational& perturb = 0) {
  struct Case {
    Partition mu;
    int p, q;
    const char* value;
  };
  const std::vector<Case> cases{{{2}, 1, 1, "alpha - beta - 1"},
                                {{3}, 1, 1, "(alpha - beta - 1)(alpha - 2 beta - 1)"},
                                {{3, 2}, 3, 1, "-9 (alpha - beta - 1)(alpha - 2 beta - 3)(alpha - 3 beta - 9)"}};
  std::vector<Report> out;
  for (const auto& c : cases) {
    const auto t0 = detail::Clock::now();
    const auto d = extension_divisibility(c.mu, c.p, c.q);
    out.push_back(detail::compare("extension_value", json{{"mu", c.mu.to_string()}, {"p", c.p}, {"q", c.q}},
                                  d.value + MPoly::constant(perturb), parse_poly(c.value), t0));
  }
  return out;
}

/// ϑ^{p×q}_μ(α, β) is a multiple of α - β - 1 when |μ| > pq.
inline Report check_extension_divisibility(const Partition& mu, int p, int q) {
  const auto t0 = detail::Clock::now();
  const auto d = extension_divisibility(mu, p, q);
  Report r{"extension_divisibility", json{{"mu", mu.to_string()}, {"p", p}, {"q", q}}};
  if (!d.divisible) {
    r.verdict = Verdict::fail;
    r.witness = to_json(d.value);
  }
  r.runtime_ms = detail::elapsed_ms(t0);
  return r;
}

/// The D2-dagger identity on p×q with recurrence values, n = pq and 2α d_1 = pq(αq - p - β),
/// α and β independent. Holding or not is a finding.
inline Report check_independence(const Partition& mu, const Rational& perturb = 0) {
  const auto t0 = detail::Clock::now();
  require_no_ones(mu);
  auto v = [](const std::optional<Partition>& rho) {
    return rho ? RatFunc(detail::rect_tilde(*rho)) : RatFunc();
  };
  const RatFunc res = detail::d2dag_residual(mu, v, RatFunc(parse_poly("p q (alpha q - p - beta)")),
                                             RatFunc(alpha_var()), RatFunc(MPoly::variable("beta")), perturb);
  Report r{"independence", json{{"mu", mu.to_string()}}, Verdict::finding};
  r.witness = json{{"holds", res.is_zero()}};
  if (!res.is_zero()) (*r.witness)["residual"] = to_json(res);
  r.runtime_ms = detail::elapsed_ms(t0);
  return r;
}

/// The two printed instances of the identity above, as polynomial identities in (p, q, α, β).
inline std::vector<Report> check_independence_displays(const Rational& perturb = 0) {
  auto V = [](const Partition& mu) { return rect_recurrence(mu, false).value; };
  auto P = [](std::string_view s) { return parse_poly(s); };
  const MPoly d = P("p q (alpha q - p - beta)");  // 2 α d_1 on p×q
  std::vector<Report> out;
  auto t0 = detail::Clock::now();
  out.push_back(detail::compare(
      "independence_display", json{{"mu", "2"}, {"form", "expanded"}},
      d.pow(2) + MPoly::constant(perturb),
      P("2 beta p q (alpha q - p - beta) + 2 p q (alpha q - p - beta)(alpha q - p - 2 beta)"
        " + p q (p q - 2)(alpha q - p - beta)^2"),
      t0));
  t0 = detail::Clock::now();
  out.push_back(detail::compare("independence_display", json{{"mu", "2"}, {"form", "recurrence"}},
                                (d - P("2 beta")) * V({2}) + MPoly::constant(perturb),
                                P("2 alpha p q (p q - 1)") + V({3}) * Rational(4) + V({2, 2}), t0));
  t0 = detail::Clock::now();
  out.push_back(detail::compare("independence_display", json{{"mu", "3,2"}, {"form", "recurrence"}},
                                (d - P("8 beta")) * V({3, 2}) + MPoly::constant(perturb),
                                V({5}) * Rational(12) + P("2 alpha (p q - 3)(p q - 4)") * V({3}) +
                                    P("6 alpha (p q - 4)") * V({2, 2}) + V({4, 2}) * Rational(6) +
                                    V({3, 3}) * Rational(4) + V({3, 2, 2}),
                                t0));
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

inline const std::vector<std::string>& identity_check_ids() {
  static const std::vector<std::string> ids{"I1", "I2", "I3", "I4", "I5", "I6", "I7", "prop1"};
  return ids;
}

struct SweepOptions {
  int min_n = 0;
  int max_n = 7;
  int max_k = -1;          // largest |μ|; -1 means up to |λ|
  std::size_t sample = 0;  // 0: exhaustive; otherwise a seeded sample of this many cases
  unsigned seed = 42;
};

struct SweepCase {
  std::string check;
  Partition lambda, mu;
  int r = 0;
};

inline std::vector<SweepCase> sweep_cases(const std::vector<std::string>& ids, const SweepOptions& o) {
  for (const auto& id : ids)
    if (std::find(identity_check_ids().begin(), identity_check_ids().end(), id) == identity_check_ids().end())
      throw Error("unknown check id " + id);
  std::vector<SweepCase> cases;
  for (const auto& id : ids)
    for (int n = std::max(0, o.min_n); n <= o.max_n; ++n)
      for (const auto& la : enumerate_partitions(n))
        for (int k = 0; k <= n && (o.max_k < 0 || k <= o.max_k); ++k) {
          // Prop 1 also takes parts equal to 1.
          const auto mus = id == "prop1" ? enumerate_partitions(k) : enumerate_without_ones(k);
          for (const auto& mu : mus) {
            if (id == "I1" || id == "prop1") {
              for (int r = k; r <= n; ++r) cases.push_back({id, la, mu, r});
            } else {
              cases.push_back({id, la, mu, 0});
            }
          }
        }
  if (o.sample > 0 && o.sample < cases.size()) {
    std::vector<std::size_t> idx(cases.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::mt19937 rng(o.seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(o.sample);
    std::sort(idx.begin(), idx.end());
    std::vector<SweepCase> picked;
    for (auto i : idx) picked.push_back(cases[i]);
    cases = std::move(picked);
  }
  return cases;
}

inline Report run_case(const SweepCase& c, const Rational& perturb = 0) {
  if (c.check == "I1") return check_I1_binomial_sum(c.lambda, c.mu, c.r, perturb);
  if (c.check == "I2") return check_I2_p1_lower(c.lambda, c.mu, perturb);
  if (c.check == "I3") return check_I3_E0_raise(c.lambda, c.mu, perturb);
  if (c.check == "I4") return check_I4_E2(c.lambda, c.mu, perturb);
  if (c.check == "I5") return check_I5_E0_N0(c.lambda, c.mu, perturb);
  if (c.check == "I6") return check_I6_D1(c.lambda, c.mu, perturb);
  if (c.check == "I7") return check_I7_D2dag(c.lambda, c.mu, perturb);
  if (c.check == "prop1") return check_prop1(c.lambda, c.mu, c.r, perturb);
  throw Error("unknown check id " + c.check);
}

/// Runs the identity checkers over all (or a seeded sample of) cases; results keep case order.
inline std::vector<Report> sweep(const std::vector<std::string>& ids, const SweepOptions& o = {}) {
  const auto cases = sweep_cases(ids, o);
  return parallel_map(cases, [](const SweepCase& c) { return run_case(c); });
}

}  // namespace jackpos
