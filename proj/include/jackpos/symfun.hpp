#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "jackpos/errors.hpp"
#include "jackpos/json_io.hpp"
#include "jackpos/partition.hpp"
#include "jackpos/ratfunc.hpp"

namespace jackpos {

enum class Basis { PowerSum, Monomial };

inline const char* basis_name(Basis b) { return b == Basis::PowerSum ? "p" : "m"; }

/// Finite linear combination of p_λ or m_λ with coefficients rational in alpha.
class SymFun {
 public:
  using Terms = std::map<Partition, RatFunc, DescendingLex>;

  explicit SymFun(Basis b = Basis::PowerSum) : basis_(b) {}

  static SymFun single(Basis b, const Partition& index, const RatFunc& c = RatFunc(1)) {
    SymFun f(b);
    f.add(index, c);
    return f;
  }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RatFunc coefficient(const Partition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? RatFunc() : it->second;
  }

  void add(const Partition& index, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(index, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SymFun& operator+=(const SymFun& o) {
    require_same_basis(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }

  SymFun& operator-=(const SymFun& o) {
    require_same_basis(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }

  SymFun& operator*=(const RatFunc& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
  friend SymFun operator*(SymFun a, const RatFunc& s) { return a *= s; }

  friend bool operator==(const SymFun& a, const SymFun& b) {
    if (a.basis_ != b.basis_ || a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*" + basis_name(basis_) + "[" + k.to_string() + "]";
    }
    return s;
  }

 private:
  void require_same_basis(const SymFun& o) const {
    if (o.basis_ != basis_) throw Error("symmetric functions in different bases");
  }

  Basis basis_;
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SymFun& f) { return os << f.to_string(); }

inline json to_json(const SymFun& f) {
  json terms = json::array();
  for (const auto& [k, c] : f.terms()) terms.push_back({{"index", to_json(k)}, {"coef", to_json(c)}});
  return {{"basis", basis_name(f.basis())}, {"terms", std::move(terms)}};
}

inline SymFun symfun_from_json(const json& j) {
  std::string b = j.at("basis").get<std::string>();
  if (b != "p" && b != "m") throw ParseError("unknown basis " + b);
  SymFun f(b == "p" ? Basis::PowerSum : Basis::Monomial);
  for (const auto& t : j.at("terms")) f.add(partition_from_json(t.at("index")), ratfunc_from_json(t.at("coef")));
  return f;
}

// ---------------------------------------------------------------------------
// Transition matrices between p and m at a fixed weight.

struct Transition {
  int weight = 0;
  std::vector<Partition> parts;  // descending lexicographic
  std::unordered_map<Partition, std::size_t, PartitionHash> index;
  std::vector<std::vector<Integer>> p_to_m;   // p_λ = Σ_μ p_to_m[λ][μ] m_μ
  std::vector<std::vector<Rational>> m_to_p;  // m_λ = Σ_μ m_to_p[λ][μ] p_μ
};

namespace detail {

/// m-expansion of p_k * m_μ: add k to one part value a of μ (a = 0 allowed).
inline void mul_pk_monomial(int k, const Partition& mu, const Integer& c,
                            std::map<Partition, Integer, DescendingLex>& out) {
  std::vector<int> values{0};
  for (int x : mu.parts())
    if (values.back() != x) values.push_back(x);
  for (int a : values) {
    std::vector<int> v = mu.parts();
    if (a == 0) {
      v.push_back(k);
    } else {
      *std::find(v.begin(), v.end(), a) = a + k;
    }
    Partition nu = Partition::sorted(std::move(v));
    out[nu] += c * nu.multiplicity(a + k);
  }
}

inline std::shared_ptr<const Transition> build_transition(int n) {
  auto t = std::make_shared<Transition>();
  t->weight = n;
  t->parts = enumerate_partitions(n);
  const std::size_t N = t->parts.size();
  for (std::size_t i = 0; i < N; ++i) t->index.emplace(t->parts[i], i);
  t->p_to_m.assign(N, std::vector<Integer>(N, 0));
  for (std::size_t i = 0; i < N; ++i) {
    std::map<Partition, Integer, DescendingLex> cur{{Partition(), Integer(1)}};
    for (int k : t->parts[i].parts()) {
      std::map<Partition, Integer, DescendingLex> next;
      for (const auto& [mu, c] : cur) mul_pk_monomial(k, mu, c, next);
      cur = std::move(next);
    }
    for (const auto& [mu, c] : cur) t->p_to_m[i][t->index.at(mu)] = c;
  }
  // Row i of p_to_m only involves columns j <= i; invert by forward substitution.
  t->m_to_p.assign(N, std::vector<Rational>(N, 0));
  for (std::size_t i = 0; i < N; ++i) {
    // m_i = (p_i - Σ_{j<i} A[i][j] m_j) / A[i][i]
    const Rational inv(Integer(1), t->p_to_m[i][i]);
    std::vector<Rational> row(N, 0);
    row[i] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      const Integer& a = t->p_to_m[i][j];
      if (a == 0) continue;
      for (std::size_t c = 0; c < N; ++c)
        if (t->m_to_p[j][c] != 0) row[c] -= a * t->m_to_p[j][c];
    }
    for (auto& x : row) x *= inv;
    t->m_to_p[i] = std::move(row);
  }
  // Augmented monomials (∏ m_i! · m_λ) must be integral in the power sums.
  for (std::size_t i = 0; i < N; ++i) {
    Integer aug = 1;
    const Partition& la = t->parts[i];
    for (int v = 1; v <= n; ++v)
      for (int f = 2; f <= la.multiplicity(v); ++f) aug *= f;
    for (const auto& x : t->m_to_p[i]) {
      Rational y = x * aug;
      if (y.get_den() != 1)
        throw Error("augmented monomial " + la.to_string() + " is not integral in the power sums");
    }
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (t->p_to_m[i][j] != 0 && !dominance_leq(t->parts[i], t->parts[j]))
        throw Error("power sum " + t->parts[i].to_string() + " is not dominance triangular");
  return t;
}

}  // namespace detail

/// Per-weight transition table, built once and shared.
inline std::shared_ptr<const Transition> transition(int n) {
  static std::shared_mutex mu;
  static std::map<int, std::shared_ptr<const Transition>> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto built = detail::build_transition(n);
  std::unique_lock lock(mu);
  return cache.try_emplace(n, std::move(built)).first->second;
}

inline SymFun convert(const SymFun& f, Basis target) {
  if (f.basis() == target) return f;
  SymFun out(target);
  for (const auto& [la, c] : f.terms()) {
    auto t = transition(la.weight());
    std::size_t i = t->index.at(la);
    for (std::size_t j = 0; j < t->parts.size(); ++j) {
      Rational x = target == Basis::Monomial ? Rational(t->p_to_m[i][j]) : t->m_to_p[i][j];
      if (x != 0) out.add(t->parts[j], c * RatFunc(x));
    }
  }
  return out;
}

/// ⟨p_λ, p_μ⟩ = δ α^{l(λ)} z_λ, extended bilinearly.
inline RatFunc scalar_product(const SymFun& f, const SymFun& g) {
  const SymFun a = convert(f, Basis::PowerSum), b = convert(g, Basis::PowerSum);
  const MPoly alpha = MPoly::variable("alpha");
  RatFunc s;
  for (const auto& [la, c] : a.terms()) {
    auto it = b.terms().find(la);
    if (it == b.terms().end()) continue;
    s += c * it->second * RatFunc(alpha.pow(static_cast<unsigned>(la.length())) * Rational(la.z_factor()));
  }
  return s;
}

inline SymFun mul_p1(const SymFun& f) {
  if (f.basis() != Basis::PowerSum) throw Error("mul_p1 expects a power-sum expansion");
  SymFun out(Basis::PowerSum);
  for (const auto& [la, c] : f.terms()) out.add(la.with_ones(1), c);
  return out;
}

/// Product in the power-sum basis.
inline SymFun mul_p(const SymFun& f, const SymFun& g) {
  if (f.basis() != Basis::PowerSum || g.basis() != Basis::PowerSum)
    throw Error("mul_p expects power-sum expansions");
  SymFun out(Basis::PowerSum);
  for (const auto& [a, c] : f.terms())
    for (const auto& [b, d] : g.terms()) {
      std::vector<int> v = a.parts();
      v.insert(v.end(), b.parts().begin(), b.parts().end());
      out.add(Partition::sorted(std::move(v)), c * d);
    }
  return out;
}

/// E2 = Σ k p_{k+1} ∂/∂p_k.
inline SymFun apply_E2(const SymFun& f) {
  if (f.basis() != Basis::PowerSum) throw Error("apply_E2 expects a power-sum expansion");
  SymFun out(Basis::PowerSum);
  for (const auto& [la, c] : f.terms()) {
    std::vector<int> seen;
    for (int r : la.parts()) {
      if (!seen.empty() && seen.back() == r) continue;
      seen.push_back(r);
      auto up = mu_modify(la, MuMove::up_r, r);
      out.add(*up, c * RatFunc(Rational(r * la.multiplicity(r))));
    }
  }
  return out;
}

}  // namespace jackpos
