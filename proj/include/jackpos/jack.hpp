#pragma once

#include <atomic>
#include <functional>
#include <unordered_map>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "jackpos/errors.hpp"
#include "jackpos/interpolate.hpp"
#include "jackpos/memo.hpp"
#include "jackpos/partition.hpp"
#include "jackpos/ratfunc.hpp"
#include "jackpos/symfun.hpp"

namespace jackpos {

// ---------------------------------------------------------------------------
// Configuration

namespace detail {
inline int initial_max_weight() {
  if (const char* env = std::getenv("JACK_MAX_WEIGHT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 64) return static_cast<int>(v);
  }
  return 8;
}
inline std::atomic<int>& max_weight_slot() {
  static std::atomic<int> w{initial_max_weight()};
  return w;
}
}  // namespace detail

inline int max_weight() { return detail::max_weight_slot().load(); }

inline void set_max_weight(int w) {
  if (w < 1) throw Error("max weight must be at least 1");
  detail::max_weight_slot().store(w);
}

inline MPoly alpha_var() { return MPoly::variable("alpha"); }

// ---------------------------------------------------------------------------
// Jack polynomials

struct JackExpansion {
  Partition lambda;
  SymFun in_p{Basis::PowerSum};
  SymFun in_m{Basis::Monomial};
};

/// All θ^λ_ρ(alpha) of one weight, indexed like transition(n)->parts.
struct JackTable {
  std::shared_ptr<const Transition> t;
  std::vector<std::vector<MPoly>> theta;  // theta[λ][ρ]
};

namespace detail {

/// θ^λ_ρ at the numeric value alpha = a, by Gram-Schmidt on the monomials in
/// increasing lexicographic order under the alpha-pairing.
inline std::vector<std::vector<Rational>> jack_theta_at(const Transition& t, const Rational& a) {
  const std::size_t N = t.parts.size();
  const int n = t.weight;
  std::vector<Rational> w(N);
  for (std::size_t r = 0; r < N; ++r) {
    Rational x = 1;
    for (int k = 0; k < t.parts[r].length(); ++k) x *= a;
    w[r] = x * Rational(t.parts[r].z_factor());
  }
  const auto& M = t.m_to_p;
  std::vector<std::vector<Rational>> G(N, std::vector<Rational>(N, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      Rational s = 0;
      for (std::size_t r = 0; r < N; ++r)
        if (M[i][r] != 0 && M[j][r] != 0) s += M[i][r] * M[j][r] * w[r];
      G[i][j] = G[j][i] = s;
    }
  std::vector<std::vector<Rational>> P(N), GP(N);  // P in m-coordinates, GP = G * P
  std::vector<Rational> norm(N);
  for (std::size_t i = N; i-- > 0;) {
    std::vector<Rational> c(N, 0);
    c[i] = 1;
    for (std::size_t j = i + 1; j < N; ++j) {
      // ⟨m_i, P_j⟩ / ⟨P_j, P_j⟩
      const Rational proj = GP[j][i] / norm[j];
      if (proj == 0) continue;
      for (std::size_t k = 0; k < N; ++k)
        if (P[j][k] != 0) c[k] -= proj * P[j][k];
    }
    std::vector<Rational> g(N, 0);
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k)
        if (c[k] != 0) g[r] += G[r][k] * c[k];
    norm[i] = g[i];
    P[i] = std::move(c);
    GP[i] = std::move(g);
  }
  Rational nfact = 1;
  for (int k = 2; k <= n; ++k) nfact *= k;
  std::vector<std::vector<Rational>> theta(N, std::vector<Rational>(N, 0));
  for (std::size_t i = 0; i < N; ++i) {
    const Rational scale = nfact / P[i][N - 1];
    for (std::size_t k = 0; k < N; ++k) {
      if (P[i][k] == 0) continue;
      for (std::size_t r = 0; r < N; ++r)
        if (M[k][r] != 0) theta[i][r] += P[i][k] * M[k][r];
    }
    for (auto& x : theta[i]) x *= scale;
  }
  return theta;
}

inline std::shared_ptr<const JackTable> build_jack_table(int n) {
  auto table = std::make_shared<JackTable>();
  table->t = transition(n);
  const std::size_t N = table->t->parts.size();
  table->theta.assign(N, std::vector<MPoly>(N));
  if (n == 0) {
    table->theta[0][0] = MPoly::constant(1, {"alpha"});
    return table;
  }
  // θ has degree < n in alpha: n nodes determine it, two more check it.
  std::vector<Rational> nodes;
  for (int a = 1; a <= n; ++a) nodes.emplace_back(a);
  std::vector<std::vector<std::vector<Rational>>> samples;
  for (const auto& a : nodes) samples.push_back(jack_theta_at(*table->t, a));
  const auto vinv = interpolation_matrix(nodes);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t r = 0; r < N; ++r) {
      std::vector<std::pair<Exponent, Rational>> terms;
      for (std::size_t d = 0; d < nodes.size(); ++d) {
        Rational c = 0;
        for (std::size_t k = 0; k < nodes.size(); ++k) c += vinv[d][k] * samples[k][i][r];
        if (c != 0) terms.push_back({Exponent{static_cast<unsigned>(d)}, c});
      }
      table->theta[i][r] = MPoly({"alpha"}, terms);
    }
  for (const Rational& a : {Rational(n + 1), Rational(1, 2)}) {
    auto check = jack_theta_at(*table->t, a);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t r = 0; r < N; ++r)
        if (table->theta[i][r].evaluate_all({{"alpha", a}}) != check[i][r])
          throw Error("Jack interpolation check failed for " + table->t->parts[i].to_string());
  }
  return table;
}

}  // namespace detail

inline std::shared_ptr<const JackTable> jack_table(int n) {
  if (n > max_weight())
    throw WeightLimitExceeded("weight " + std::to_string(n) + " exceeds the configured maximum " +
                              std::to_string(max_weight()));
  static std::shared_mutex mu;
  static std::map<int, std::shared_ptr<const JackTable>> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto built = detail::build_jack_table(n);
  std::unique_lock lock(mu);
  return cache.try_emplace(n, std::move(built)).first->second;
}

inline JackExpansion jack(const Partition& lambda) {
  auto table = jack_table(lambda.weight());
  const auto& t = *table->t;
  const std::size_t i = t.index.at(lambda);
  JackExpansion out;
  out.lambda = lambda;
  for (std::size_t r = 0; r < t.parts.size(); ++r)
    if (!table->theta[i][r].is_zero()) out.in_p.add(t.parts[r], RatFunc(table->theta[i][r]));
  out.in_m = convert(out.in_p, Basis::Monomial);
  return out;
}

/// Coefficient of p_ρ in J_λ, a polynomial in alpha.
inline MPoly theta(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight())
    throw WeightMismatch("theta needs |rho| = |lambda|: " + lambda.to_string() + " vs " + rho.to_string());
  auto table = jack_table(lambda.weight());
  const auto& t = *table->t;
  return table->theta[t.index.at(lambda)][t.index.at(rho)].over({"alpha"});
}

// ---------------------------------------------------------------------------
// Pieri coefficients and generalized binomial coefficients

/// c_i(λ): coefficient of J_{λ^{(i)}} in p_1 J_λ.
inline RatFunc pieri_c(const Partition& lambda, int i) {
  if (!lambda.add_box(i))
    throw InvalidMove("no box can be added in row " + std::to_string(i) + " of " + lambda.to_string());
  const MPoly a = alpha_var();
  const int l = lambda.length();
  MPoly num = MPoly::constant(1), den = a * Rational(lambda.part(i)) + Rational(l - i + 2);
  for (int j = 1; j <= l + 1; ++j) {
    if (j == i) continue;
    MPoly base = a * Rational(lambda.part(i) - lambda.part(j));
    num *= base + Rational(j - i + 1);
    den *= base + Rational(j - i);
  }
  return RatFunc(num, den);
}

/// binom(λ, λ_(i)).
inline RatFunc binom_one_box(const Partition& lambda, int i) {
  if (!lambda.remove_box(i))
    throw InvalidMove("no box can be removed from row " + std::to_string(i) + " of " + lambda.to_string());
  const MPoly a = alpha_var();
  const int l = lambda.length();
  MPoly num = a * Rational(lambda.part(i)) + Rational(l - i), den = a;
  for (int j = 1; j <= l; ++j) {
    if (j == i) continue;
    MPoly base = a * Rational(lambda.part(i) - lambda.part(j));
    num *= base + Rational(j - i - 1);
    den *= base + Rational(j - i);
  }
  return RatFunc(num, den);
}

namespace detail {

struct PairKey {
  Partition a, b;
  bool operator==(const PairKey&) const = default;
};
struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    PartitionHash h;
    return h(k.a) * 1000003u ^ h(k.b);
  }
};

inline Memo<PairKey, RatFunc, PairKeyHash>& binom_memo() {
  static Memo<PairKey, RatFunc, PairKeyHash> m;
  return m;
}

}  // namespace detail

/// binom(λ, μ), or zero when μ is not contained in λ.
inline RatFunc binom_or_zero(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return RatFunc();
  if (lambda == mu) return RatFunc(1);
  if (mu.empty()) return RatFunc(1);
  detail::PairKey key{lambda, mu};
  RatFunc out;
  if (detail::binom_memo().find(key, out)) return out;
  RatFunc s;
  for (const auto& [i, smaller] : box_moves(lambda).remove) {
    if (!smaller.contains(mu)) continue;
    s += binom_one_box(lambda, i) * binom_or_zero(smaller, mu);
  }
  s *= RatFunc(Rational(1, lambda.weight() - mu.weight()));
  return detail::binom_memo().insert(key, std::move(s));
}

inline RatFunc binom(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu))
    throw NotContained(mu.to_string() + " is not contained in " + lambda.to_string());
  return binom_or_zero(lambda, mu);
}

/// binom(p×q, ρ) in closed form; p and q may be symbolic.
inline RatFunc rect_binom(const MPoly& p, const MPoly& q, const Partition& rho) {
  const MPoly a = alpha_var();
  MPoly num = alpha_raising(rho, p) * alpha_raising(rho, -(a * q));
  if (rho.weight() % 2) num = -num;
  return RatFunc(num, hook_products(rho).j);
}

/// J_λ(1^N) = alpha^{|λ|} (N/alpha)_λ.
inline RatFunc jack_principal(const Partition& lambda, const MPoly& N) {
  return RatFunc(alpha_raising(lambda, N));
}

}  // namespace jackpos
