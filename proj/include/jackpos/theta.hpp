#pragma once

// ϑ^λ_μ = z_μ θ^λ_{μ,1^{n-k}}: evaluation at concrete λ, on (multi)rectangles
// as polynomials, and the rectangular binomial sum.

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "jackpos/errors.hpp"
#include "jackpos/interpolate.hpp"
#include "jackpos/jack.hpp"
#include "jackpos/memo.hpp"
#include "jackpos/parallel.hpp"
#include "jackpos/partition.hpp"

namespace jackpos {

inline void require_no_ones(const Partition& mu) {
  if (mu.multiplicity(1) > 0) throw MuHasOnes("mu must have no part equal to 1: " + mu.to_string());
}

/// z_μ Σ_{|ρ|=k} binom(λ,ρ) θ^ρ_μ, a polynomial in alpha.
inline MPoly theta_hat(const Partition& lambda, const Partition& mu) {
  require_no_ones(mu);
  if (mu.weight() > lambda.weight())
    throw MuTooHeavy("|mu| exceeds |lambda|: " + mu.to_string() + " vs " + lambda.to_string());
  static Memo<detail::PairKey, MPoly, detail::PairKeyHash> memo;
  detail::PairKey key{lambda, mu};
  MPoly out;
  if (memo.find(key, out)) return out;
  RatFunc s;
  for (const auto& rho : enumerate_partitions(mu.weight(), lambda))
    s += binom_or_zero(lambda, rho) * RatFunc(theta(rho, mu));
  if (!s.is_polynomial()) throw Error("theta_hat is not polynomial in alpha for " + lambda.to_string());
  MPoly v = (s.as_poly() * Rational(mu.z_factor())).with_vars({"alpha"});
  if (!coefficient_audit(v).all_integer)
    throw Error("theta_hat has non-integral coefficients for " + lambda.to_string() + ", " + mu.to_string());
  return memo.insert(key, v.over({"alpha"}));
}

/// z_μ θ^λ_{μ,1^{n-k}} read directly from the Jack expansion of λ.
inline MPoly theta_hat_direct(const Partition& lambda, const Partition& mu) {
  require_no_ones(mu);
  if (mu.weight() > lambda.weight()) throw MuTooHeavy("|mu| exceeds |lambda|");
  return theta(lambda, mu.with_ones(lambda.weight() - mu.weight())) * Rational(mu.z_factor());
}

/// The #-image of alpha^{|ρ|-l(ρ)} p_ρ at λ for any ρ (parts 1 allowed):
/// (n-|ρ|+1)(n-|ρ|+2)...(n-|ρ|+s) · ϑ^λ_{ρ̄}, with s = m_1(ρ) and ρ̄ = ρ without its ones.
inline MPoly theta_hat_general(const Partition& lambda, const Partition& rho) {
  if (rho.weight() > lambda.weight())
    throw RhoTooHeavy("|rho| exceeds |lambda|: " + rho.to_string() + " vs " + lambda.to_string());
  const int n = lambda.weight(), s = rho.multiplicity(1);
  Integer f = 1;
  for (int t = 1; t <= s; ++t) f *= n - rho.weight() + t;
  return theta_hat(lambda, rho.without_ones()) * Rational(f);
}

/// Same value, with ϑ taken as zero when |ρ| > |λ|.
inline MPoly theta_hat_general_or_zero(const Partition& lambda, const Partition& rho) {
  if (rho.weight() > lambda.weight()) return MPoly::constant(0, {"alpha"});
  return theta_hat_general(lambda, rho);
}

// ---------------------------------------------------------------------------
// Numeric evaluation at a fixed alpha for many shapes at once.

/// binom(λ, λ_(i)) at alpha = a.
inline Rational binom_one_box_at(const Partition& lambda, int i, const Rational& a) {
  const int l = lambda.length(), li = lambda.part(i);
  Rational v = Rational(li) + Rational(l - i) / a;
  for (int j = 1; j <= l; ++j) {
    if (j == i) continue;
    Rational base = a * (li - lambda.part(j));
    v *= (base + (j - i - 1)) / (base + (j - i));
  }
  return v;
}

/// binom(ν, ρ) at alpha = a for every ρ ⊢ k and every ν in `wanted`.
/// Shapes are swept bottom-up inside the union of the wanted shapes.
inline std::unordered_map<Partition, std::vector<Rational>, PartitionHash> binom_sweep(
    int k, const Rational& a, const std::vector<Partition>& wanted) {
  using Level = std::unordered_map<Partition, std::vector<Rational>, PartitionHash>;
  Level out;
  if (wanted.empty()) return out;
  std::vector<int> hull;
  int top = 0;
  for (const auto& w : wanted) {
    if (w.length() > static_cast<int>(hull.size())) hull.resize(static_cast<std::size_t>(w.length()), 0);
    for (int i = 1; i <= w.length(); ++i)
      hull[static_cast<std::size_t>(i - 1)] = std::max(hull[static_cast<std::size_t>(i - 1)], w.part(i));
    top = std::max(top, w.weight());
  }
  const Partition bound(hull);
  std::unordered_map<Partition, bool, PartitionHash> want;
  for (const auto& w : wanted) want.emplace(w, true);

  const auto rhos = enumerate_partitions(k);
  Level prev;
  for (std::size_t r = 0; r < rhos.size(); ++r) {
    if (!bound.contains(rhos[r])) continue;
    std::vector<Rational> e(rhos.size(), 0);
    e[r] = 1;
    prev.emplace(rhos[r], std::move(e));
  }
  for (const auto& w : wanted)
    if (w.weight() < k) out.emplace(w, std::vector<Rational>(rhos.size(), 0));
    else if (w.weight() == k) out.emplace(w, prev.at(w));
  for (int level = k + 1; level <= top; ++level) {
    Level cur;
    const Rational inv(1, level - k);
    for (const auto& nu : enumerate_partitions(level, bound)) {
      std::vector<Rational> v(rhos.size(), 0);
      for (int i = 1; i <= nu.length(); ++i) {
        auto down = nu.remove_box(i);
        if (!down) continue;
        auto it = prev.find(*down);
        if (it == prev.end()) continue;
        const Rational b = binom_one_box_at(nu, i, a);
        for (std::size_t r = 0; r < rhos.size(); ++r)
          if (it->second[r] != 0) v[r] += b * it->second[r];
      }
      for (auto& x : v) x *= inv;
      if (want.count(nu)) out.emplace(nu, v);
      cur.emplace(nu, std::move(v));
    }
    prev = std::move(cur);
  }
  return out;
}

/// ϑ^λ_μ at alpha = a for each λ in `lambdas` (same order). With `light_is_zero`,
/// shapes smaller than μ give 0 instead of throwing.
inline std::vector<Rational> theta_hat_at(const std::vector<Partition>& lambdas, const Partition& mu,
                                          const Rational& a, bool light_is_zero = false) {
  require_no_ones(mu);
  const int k = mu.weight();
  const auto rhos = enumerate_partitions(k);
  std::vector<Rational> th(rhos.size());
  for (std::size_t r = 0; r < rhos.size(); ++r) th[r] = theta(rhos[r], mu).evaluate_all({{"alpha", a}});
  auto table = binom_sweep(k, a, lambdas);
  const Rational z(mu.z_factor());
  std::vector<Rational> out;
  out.reserve(lambdas.size());
  for (const auto& la : lambdas) {
    if (la.weight() < k && !light_is_zero) throw MuTooHeavy("|mu| exceeds |lambda|: " + mu.to_string() + " vs " + la.to_string());
    const auto& b = table.at(la);
    Rational s = 0;
    for (std::size_t r = 0; r < rhos.size(); ++r) s += b[r] * th[r];
    out.push_back(s * z);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multirectangles

/// (q_1^{p_1}, q_2^{p_2}, ...); requires q_1 >= q_2 >= ... >= 1 and p_i >= 0.
inline Partition multirectangle(const std::vector<int>& p, const std::vector<int>& q) {
  if (p.size() != q.size()) throw Error("p and q must have the same length");
  std::vector<int> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || q[i] < 1) throw Error("multirectangle needs p_i >= 0 and q_i >= 1");
    if (i > 0 && q[i] > q[i - 1]) throw Error("multirectangle needs q_1 >= q_2 >= ...");
    parts.insert(parts.end(), static_cast<std::size_t>(p[i]), q[i]);
  }
  return Partition(std::move(parts));
}

/// Variable names p, q for one rectangle; p1..pm, q1..qm otherwise.
inline std::vector<std::string> rect_p_vars(int m) {
  if (m == 1) return {"p"};
  std::vector<std::string> v;
  for (int i = 1; i <= m; ++i) v.push_back("p" + std::to_string(i));
  return v;
}

inline std::vector<std::string> rect_q_vars(int m) {
  if (m == 1) return {"q"};
  std::vector<std::string> v;
  for (int i = 1; i <= m; ++i) v.push_back("q" + std::to_string(i));
  return v;
}

/// alpha -> beta + 1.
inline MPoly alpha_to_beta(const MPoly& f) {
  return f.substitute({{"alpha", MPoly::variable("beta") + Rational(1)}});
}

/// beta -> alpha - 1.
inline MPoly beta_to_alpha(const MPoly& f) {
  return f.substitute({{"beta", MPoly::variable("alpha") - Rational(1)}});
}

/// (-1)^k f with every q-variable negated.
inline MPoly negate_q(const MPoly& f, int m, int k) {
  std::map<std::string, MPoly> b;
  for (const auto& v : rect_q_vars(m))
    if (f.var_index(v) >= 0) b.emplace(v, -MPoly::variable(v));
  MPoly g = f.substitute(b);
  return k % 2 ? -g : g;
}

enum class RectMode { interpolate, closed_form_m1 };

struct RectPoly {
  int m = 1;
  Partition mu;
  MPoly poly;  // in (p.., q.., beta)
};

namespace detail {

struct RectPoint {
  std::vector<int> p, q;
  Rational a;
};

inline std::vector<RectPoint> rect_check_points(int m, int k) {
  std::vector<RectPoint> pts;
  if (m == 1) {
    pts = {{{k + 2}, {1}, 2},
           {{1}, {k + 2}, Rational(1, 2)},
           {{k + 2}, {2}, 3},
           {{2}, {k + 3}, k + 1},
           {{k + 2}, {k + 2}, Rational(3, 2)}};
  } else if (m == 2) {
    pts = {{{2, 1}, {3, 1}, k + 1},
           {{1, 2}, {4, 2}, Rational(1, 2)},
           {{k + 2, 1}, {k + 3, 1}, 2},
           {{1, k + 2}, {k + 3, k + 2}, 3},
           {{2, 2}, {2 * k + 3, 1}, Rational(3, 2)},
           {{1, 2}, {2, 2}, 2}};  // merged rectangles
  } else {
    for (int t = 0; t < 5; ++t) {
      std::vector<int> p(static_cast<std::size_t>(m)), q(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        p[static_cast<std::size_t>(i)] = 1 + (i + t) % 2 + (t == 4 ? k + 1 : 0);
        q[static_cast<std::size_t>(i)] = (m - i) * (k + 3) + t;
      }
      pts.push_back({p, q, Rational(t + 3, 2)});
    }
    std::vector<int> p(static_cast<std::size_t>(m), 1), q(static_cast<std::size_t>(m), 2);
    pts.push_back({p, q, 2});
  }
  return pts;
}

inline MPoly rect_interpolate_once(int m, const Partition& mu, int deg) {
  const int k = mu.weight();
  std::vector<GridAxis> axes;
  const auto pv = rect_p_vars(m), qv = rect_q_vars(m);
  for (int i = 0; i < m; ++i) {
    GridAxis ax{pv[static_cast<std::size_t>(i)], {}};
    for (int x = 1; x <= deg + 1; ++x) ax.nodes.emplace_back(x);
    axes.push_back(ax);
  }
  for (int i = 0; i < m; ++i) {
    // q_1 in the highest band, q_m in {1..deg+1}.
    GridAxis ax{qv[static_cast<std::size_t>(i)], {}};
    const int lo = (m - 1 - i) * (deg + 1);
    for (int x = 1; x <= deg + 1; ++x) ax.nodes.emplace_back(lo + x);
    axes.push_back(ax);
  }
  GridAxis alpha_axis{"alpha", {}};
  for (int x = 1; x <= std::max(deg, 1); ++x) alpha_axis.nodes.emplace_back(x);
  const std::size_t na = alpha_axis.nodes.size();
  axes.push_back(alpha_axis);

  // Shapes of the (p, q) grid in row-major order.
  std::vector<Partition> shapes;
  const std::size_t dims = static_cast<std::size_t>(2 * m);
  std::vector<std::size_t> idx(dims, 0);
  for (;;) {
    std::vector<int> p(static_cast<std::size_t>(m)), q(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      p[static_cast<std::size_t>(i)] = axes[static_cast<std::size_t>(i)].nodes[idx[static_cast<std::size_t>(i)]].get_num().get_si();
      q[static_cast<std::size_t>(i)] = axes[static_cast<std::size_t>(m + i)].nodes[idx[static_cast<std::size_t>(m + i)]].get_num().get_si();
    }
    shapes.push_back(multirectangle(p, q));
    std::size_t d = dims;
    while (d > 0 && ++idx[d - 1] == axes[d - 1].nodes.size()) idx[--d] = 0;
    if (d == 0) break;
  }
  auto per_alpha = parallel_map(axes.back().nodes, [&](const Rational& a) { return theta_hat_at(shapes, mu, a, true); });
  std::vector<Rational> values(shapes.size() * na);
  for (std::size_t s = 0; s < shapes.size(); ++s)
    for (std::size_t t = 0; t < na; ++t) values[s * na + t] = per_alpha[t][s];
  return interpolate_tensor(axes, std::move(values));
}

inline bool rect_poly_checks(const MPoly& f, int m, const Partition& mu) {
  const auto pv = rect_p_vars(m), qv = rect_q_vars(m);
  for (const auto& pt : rect_check_points(m, mu.weight())) {
    Partition la = multirectangle(pt.p, pt.q);
    std::map<std::string, Rational> at{{"alpha", pt.a}};
    for (int i = 0; i < m; ++i) {
      at[pv[static_cast<std::size_t>(i)]] = pt.p[static_cast<std::size_t>(i)];
      at[qv[static_cast<std::size_t>(i)]] = pt.q[static_cast<std::size_t>(i)];
    }
    if (f.evaluate_all(at) != theta_hat_at({la}, mu, pt.a, true).front()) return false;
  }
  return true;
}

}  // namespace detail

/// ϑ^{p×q}_μ as a polynomial in (p.., q.., beta) with alpha = beta + 1.
inline RectPoly rect_theta_symbolic(int m, const Partition& mu, RectMode mode = RectMode::interpolate) {
  require_no_ones(mu);
  if (m < 1) throw Error("need at least one rectangle");
  RectPoly out{m, mu, {}};
  const int k = mu.weight();
  auto finish = [&](const MPoly& in_alpha) {
    std::vector<std::string> vars = rect_p_vars(m);
    for (const auto& v : rect_q_vars(m)) vars.push_back(v);
    vars.push_back("beta");
    return alpha_to_beta(in_alpha).with_vars(vars).trimmed().with_vars(vars);
  };
  if (k == 0) {
    out.poly = finish(MPoly::constant(1));
    return out;
  }
  if (mode == RectMode::closed_form_m1) {
    if (m != 1) throw Error("closed form is only available for one rectangle");
    const MPoly p = MPoly::variable("p"), q = MPoly::variable("q");
    RatFunc s;
    for (const auto& rho : enumerate_partitions(k)) s += rect_binom(p, q, rho) * RatFunc(theta(rho, mu));
    out.poly = finish(s.as_poly() * Rational(mu.z_factor()));
    return out;
  }
  for (int deg = k; deg <= k + 1; ++deg) {
    MPoly f = detail::rect_interpolate_once(m, mu, deg);
    if (detail::rect_poly_checks(f, m, mu)) {
      out.poly = finish(f);
      return out;
    }
  }
  throw DegreeBoundViolated("rectangle polynomial for mu = " + mu.to_string() + " failed its off-grid checks");
}

/// α^{2k-1} z_μ Σ_{|ρ|=k} (p)_ρ (q)_ρ θ^ρ_μ / j_ρ, a polynomial in (p, q, alpha).
inline MPoly theorem2_sum(const Partition& mu) {
  require_no_ones(mu);
  const int k = mu.weight();
  if (k == 0) return MPoly::constant(1);
  const MPoly a = alpha_var(), p = MPoly::variable("p"), q = MPoly::variable("q");
  RatFunc s;
  for (const auto& rho : enumerate_partitions(k))
    s += RatFunc(alpha_raising(rho, a * p) * alpha_raising(rho, a * q) * theta(rho, mu), hook_products(rho).j);
  s = s * RatFunc(Rational(mu.z_factor())) / RatFunc(a);
  if (!s.is_polynomial()) throw Error("theorem 2 sum is not a polynomial for mu = " + mu.to_string());
  return s.as_poly();
}

}  // namespace jackpos
