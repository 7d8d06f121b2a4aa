#pragma once

// ϑ^{p×q}_μ from the rectangular recurrence, with alpha and beta kept as separate
// symbols, plus the one-box neighbours of the rectangle.

#include <string>
#include <vector>

#include "jackpos/errors.hpp"
#include "jackpos/memo.hpp"
#include "jackpos/mpoly.hpp"
#include "jackpos/partition.hpp"
#include "jackpos/theta.hpp"

namespace jackpos {

struct RectTheta {
  Partition mu;
  MPoly value;  // in (p, q, alpha, beta)
  bool beta_linked = true;
  bool integral = true;

  /// value with beta = alpha - 1 when linked; value itself otherwise.
  MPoly specialized() const { return beta_linked ? beta_to_alpha(value) : value; }
};

namespace detail {

inline const std::vector<std::string>& rect_vars() {
  static const std::vector<std::string> v{"p", "q", "alpha", "beta"};
  return v;
}

inline MPoly rect_n() { return MPoly::variable("p") * MPoly::variable("q"); }

inline MPoly rect_value(const Partition& mu);

/// ϑ for a partition that may contain ones: (n-|ρ|+1)...(n-|ρ|+s) ϑ_{ρ̄}.
inline MPoly rect_tilde(const Partition& rho) {
  const int s = rho.multiplicity(1);
  MPoly f = MPoly::constant(1);
  const MPoly n = rect_n();
  for (int t = 1; t <= s; ++t) f *= n + Rational(t - rho.weight());
  return f * rect_value(rho.without_ones());
}

/// Σ• r m_r(μ) ϑ̃_{μ↓(r)}
inline MPoly rect_down_sum(const Partition& mu) {
  MPoly s(rect_vars());
  for (int r = 2; r <= mu.weight(); ++r) {
    const int m = mu.multiplicity(r);
    if (m == 0) continue;
    s += rect_tilde(*mu_modify(mu, MuMove::down_r, r)) * Rational(r * m);
  }
  return s;
}

inline Memo<Partition, MPoly, PartitionHash>& rect_memo() {
  static Memo<Partition, MPoly, PartitionHash> m;
  return m;
}

inline MPoly rect_value(const Partition& mu) {
  if (mu.empty()) return MPoly::constant(1, rect_vars());
  MPoly cached;
  if (rect_memo().find(mu, cached)) return cached;
  const int k = mu.weight();
  const MPoly p = MPoly::variable("p"), q = MPoly::variable("q"), a = MPoly::variable("alpha"),
              b = MPoly::variable("beta");
  std::vector<int> values;
  for (int x : mu.parts())
    if (values.empty() || values.back() != x) values.push_back(x);

  MPoly bracket(rect_vars());
  for (int r : values)
    for (int s : values) {
      const int c = r * s * mu.multiplicity(r) * (mu.multiplicity(s) - (r == s ? 1 : 0));
      if (c == 0) continue;
      bracket += rect_tilde(*mu_modify(mu, MuMove::down_rs, r, s)) * Rational(c);
    }
  MPoly twist(rect_vars());
  for (int r : values) {
    const int m = mu.multiplicity(r);
    const MPoly down = rect_tilde(*mu_modify(mu, MuMove::down_r, r));
    bracket += b * down * Rational(r * (r - 1) * m);
    bracket += (p - a * q) * down * Rational(r * m);
    for (int i = 1; i <= r - 2; ++i) twist += rect_tilde(*mu_modify(mu, MuMove::up_rs, i, r - i - 1)) * Rational(r * m);
  }
  bracket += a * twist;
  MPoly v = (bracket * Rational(-1, k)).over(rect_vars());
  return rect_memo().insert(mu, std::move(v));
}

}  // namespace detail

/// ϑ^{p×q}_μ by induction on |μ|.
inline RectTheta rect_recurrence(const Partition& mu, bool beta_linked = true) {
  require_no_ones(mu);
  RectTheta out{mu, detail::rect_value(mu), beta_linked, true};
  out.integral = coefficient_audit(out.value).all_integer;
  return out;
}

enum class RectBoundary { add_row_top, add_row_bottom, remove_box };

inline RectBoundary rect_boundary_from_string(const std::string& s) {
  if (s == "add_row_top") return RectBoundary::add_row_top;
  if (s == "add_row_bottom") return RectBoundary::add_row_bottom;
  if (s == "remove_box") return RectBoundary::remove_box;
  throw ParseError("unknown boundary shape " + s);
}

/// ϑ for (q+1,q,...,q), (q,...,q,1) or (q,...,q,q-1), in (p, q, alpha, beta).
inline MPoly rect_boundary(const Partition& mu, RectBoundary which) {
  require_no_ones(mu);
  const MPoly v = detail::rect_value(mu), p = MPoly::variable("p"), q = MPoly::variable("q");
  MPoly out;
  switch (which) {
    case RectBoundary::add_row_top:
      out = v + divide_exact(MPoly::variable("alpha") * detail::rect_down_sum(mu), p);
      break;
    case RectBoundary::add_row_bottom:
      out = v - divide_exact(detail::rect_down_sum(mu), q);
      break;
    case RectBoundary::remove_box:
      out = divide_exact((detail::rect_n() - Rational(mu.weight())) * v, detail::rect_n());
      break;
  }
  return out.over(detail::rect_vars());
}

struct ExtensionDivisibility {
  bool divisible = false;
  MPoly value;     // ϑ at the given (p, q), in (alpha, beta)
  MPoly quotient;  // value / (alpha - beta - 1) when divisible
};

/// For |μ| > pq, tests whether the independent-beta value is a multiple of alpha - beta - 1.
inline ExtensionDivisibility extension_divisibility(const Partition& mu, int p, int q) {
  if (p < 1 || q < 1) throw Error("p and q must be positive");
  if (mu.weight() <= p * q) throw Error("extension divisibility needs |mu| > pq");
  const MPoly v = rect_recurrence(mu, false)
                      .value.evaluate({{"p", Rational(p)}, {"q", Rational(q)}})
                      .over({"alpha", "beta"});
  const MPoly d = MPoly::variable("alpha") - MPoly::variable("beta") - Rational(1);
  ExtensionDivisibility out;
  out.value = v;
  if (auto quo = try_divide(v, d)) {
    out.divisible = true;
    out.quotient = quo->over({"alpha", "beta"});
  }
  return out;
}

/// (-1)^k ϑ with q negated and alpha = beta + 1, in (p, q, beta).
inline MPoly rect_positive_form(const RectTheta& t) {
  MPoly f = negate_q(alpha_to_beta(t.value), 1, t.mu.weight());
  return f.over({"p", "q", "beta"});
}

}  // namespace jackpos
