#pragma once

// Sparse multivariate polynomials over arbitrary-precision rationals.
//
// Every polynomial carries an ordered variable list. The order is canonical
// (see var_less) so that two polynomials over the same set of names always
// agree on exponent layout. Binary operations align their operands on the
// union of both variable sets.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "jackpos/errors.hpp"

namespace jackpos {

using Rational = mpq_class;
using Integer = mpz_class;
using Exponent = std::vector<unsigned>;

namespace detail {

inline long indexed_suffix(const std::string& v, char head) {
  if (v.size() < 2 || v[0] != head) return -1;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(v[i]))) return -1;
  return std::stol(v.substr(1));
}

inline std::tuple<int, long, std::string> var_rank(const std::string& v) {
  if (v == "p") return {0, 0, {}};
  if (v == "q") return {1, 0, {}};
  if (long i = indexed_suffix(v, 'p'); i >= 0) return {2, i, {}};
  if (long i = indexed_suffix(v, 'q'); i >= 0) return {3, i, {}};
  if (v == "N") return {4, 0, {}};
  if (v == "u") return {5, 0, {}};
  if (v == "alpha") return {6, 0, {}};
  if (v == "beta") return {7, 0, {}};
  return {8, 0, v};
}

}  // namespace detail

/// Canonical variable order: p, q, p1.., q1.., N, u, alpha, beta, then by name.
inline bool var_less(const std::string& a, const std::string& b) {
  return detail::var_rank(a) < detail::var_rank(b);
}

inline std::vector<std::string> canonical_vars(std::vector<std::string> vars) {
  std::sort(vars.begin(), vars.end(), var_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

inline std::vector<std::string> var_union(const std::vector<std::string>& a,
                                          const std::vector<std::string>& b) {
  if (a == b) return a;
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), var_less);
  return out;
}

inline unsigned exponent_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded-lexicographic order, largest first (so map iteration starts at the leading term).
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    unsigned da = exponent_degree(a), db = exponent_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

class MPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  MPoly() = default;

  explicit MPoly(std::vector<std::string> vars) : vars_(canonical_vars(std::move(vars))) {}

  /// Builds from terms whose exponents are laid out along `vars` (any order, no duplicates).
  MPoly(std::vector<std::string> vars, const std::vector<std::pair<Exponent, Rational>>& terms) {
    auto canon = canonical_vars(vars);
    if (canon.size() != vars.size()) throw Error("duplicate variable names");
    std::vector<std::size_t> perm(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
      perm[i] = static_cast<std::size_t>(
          std::find(canon.begin(), canon.end(), vars[i]) - canon.begin());
    vars_ = std::move(canon);
    for (const auto& [e, c] : terms) {
      if (e.size() != vars_.size()) throw Error("exponent arity does not match variables");
      Exponent f(vars_.size());
      for (std::size_t i = 0; i < e.size(); ++i) f[perm[i]] = e[i];
      add_term(std::move(f), c);
    }
  }

  static MPoly constant(const Rational& c, std::vector<std::string> vars = {}) {
    MPoly r(std::move(vars));
    r.add_term(Exponent(r.vars_.size(), 0), c);
    return r;
  }

  static MPoly variable(const std::string& name) {
    MPoly r(std::vector<std::string>{name});
    r.terms_.emplace(Exponent{1}, Rational(1));
    return r;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exponent_degree(terms_.begin()->first) == 0);
  }

  Rational constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  Rational constant_term() const {
    auto it = terms_.find(Exponent(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
  }

  unsigned degree(const std::string& name) const {
    int i = var_index(name);
    if (i < 0) return 0;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
    return d;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exponent_degree(e));
    return d;
  }

  /// Variables that actually occur with a positive exponent.
  std::vector<std::string> used_vars() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (const auto& [e, c] : terms_)
        if (e[i] > 0) {
          out.push_back(vars_[i]);
          break;
        }
    return out;
  }

  const std::pair<const Exponent, Rational>& leading() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return *terms_.begin();
  }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Re-embeds into a superset of variables (canonically ordered).
  MPoly over(const std::vector<std::string>& target) const {
    if (target == vars_) return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(target.begin(), target.end(), vars_[i]);
      if (it == target.end()) {
        if (degree(vars_[i]) > 0) throw Error("cannot drop used variable " + vars_[i]);
        pos[i] = target.size();
      } else {
        pos[i] = static_cast<std::size_t>(it - target.begin());
      }
    }
    MPoly r;
    r.vars_ = target;
    for (const auto& [e, c] : terms_) {
      Exponent f(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (pos[i] < target.size()) f[pos[i]] = e[i];
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  MPoly with_vars(const std::vector<std::string>& extra) const {
    return over(var_union(vars_, canonical_vars(extra)));
  }

  /// Drops variables that do not occur.
  MPoly trimmed() const { return over(used_vars()); }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  MPoly& operator+=(const MPoly& o) { return accumulate(o, 1); }
  MPoly& operator-=(const MPoly& o) { return accumulate(o, -1); }

  MPoly& operator*=(Rational s) {
    s.canonicalize();
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.vars_ != b.vars_) {
      auto u = var_union(a.vars_, b.vars_);
      return a.over(u) * b.over(u);
    }
    MPoly r;
    r.vars_ = a.vars_;
    const std::size_t n = a.vars_.size();
    Exponent e(n);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly pow(unsigned k) const {
    MPoly r = constant(1, vars_);
    MPoly base = *this;
    while (k > 0) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k > 0) base = base * base;
    }
    return r;
  }

  /// Mathematical equality (variable sets are aligned first).
  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto u = var_union(a.vars_, b.vars_);
    return a.over(u).terms_ == b.over(u).terms_;
  }

  /// Substitutes polynomials for variables. Unbound variables are kept.
  MPoly substitute(const std::map<std::string, MPoly>& bindings) const {
    std::vector<std::string> kept;
    std::vector<int> bound_slot(vars_.size(), -1);
    std::vector<const MPoly*> values;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = bindings.find(vars_[i]);
      if (it == bindings.end()) {
        kept.push_back(vars_[i]);
      } else {
        bound_slot[i] = static_cast<int>(values.size());
        values.push_back(&it->second);
      }
    }
    std::vector<std::string> result_vars = kept;
    for (const MPoly* v : values) result_vars = var_union(result_vars, v->vars_);
    // Powers of each bound value, computed lazily.
    std::vector<std::vector<MPoly>> powers(values.size());
    auto power_of = [&](std::size_t slot, unsigned k) -> const MPoly& {
      auto& tab = powers[slot];
      if (tab.empty()) tab.push_back(constant(1, result_vars));
      while (tab.size() <= k) tab.push_back(tab.back() * values[slot]->over(result_vars));
      return tab[k];
    };
    MPoly r(result_vars);
    std::vector<std::size_t> kept_pos;
    for (const auto& v : kept)
      kept_pos.push_back(static_cast<std::size_t>(
          std::find(result_vars.begin(), result_vars.end(), v) - result_vars.begin()));
    for (const auto& [e, c] : terms_) {
      MPoly term(result_vars);
      Exponent f(result_vars.size(), 0);
      std::size_t k = 0;
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (bound_slot[i] < 0) f[kept_pos[k++]] = e[i];
      term.terms_.emplace(std::move(f), c);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (bound_slot[i] >= 0 && e[i] > 0)
          term = term * power_of(static_cast<std::size_t>(bound_slot[i]), e[i]);
      r += term;
    }
    return r;
  }

  /// Evaluates the bound variables at rationals; the result is over the remaining ones.
  MPoly evaluate(const std::map<std::string, Rational>& point) const {
    std::map<std::string, MPoly> b;
    for (const auto& [v, x] : point)
      if (var_index(v) >= 0) b.emplace(v, constant(x));
    return substitute(b);
  }

  Rational evaluate_all(const std::map<std::string, Rational>& point) const {
    Rational sum = 0;
    std::vector<const Rational*> vals(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = point.find(vars_[i]);
      if (it != point.end()) vals[i] = &it->second;
    }
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!vals[i]) throw Error("no value for variable " + vars_[i]);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), vals[i]->get_num_mpz_t(), e[i]);
        mpz_pow_ui(d.get_mpz_t(), vals[i]->get_den_mpz_t(), e[i]);
        t *= Rational(n, d);
      }
      sum += t;
    }
    sum.canonicalize();
    return sum;
  }

  /// Human-readable rendering, terms in canonical order.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational a = abs(c);
      bool unit_monomial = exponent_degree(e) == 0;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool wrote = false;
      if (a != 1 || unit_monomial) {
        os << a.get_str();
        wrote = true;
      }
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (wrote) os << "*";
        os << vars_[i];
        if (e[i] > 1) os << "^" << e[i];
        wrote = true;
      }
    }
    return os.str();
  }

  /// Direct term insertion; exponent must match the variable layout.
  void add_term(Exponent e, Rational c) {
    c.canonicalize();
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(e), std::move(c));
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  MPoly& accumulate(const MPoly& o, int sign) {
    if (vars_ != o.vars_) {
      auto u = var_union(vars_, o.vars_);
      *this = over(u);
      return accumulate(o.over(u), sign);
    }
    for (const auto& [e, c] : o.terms_) add_term(e, sign > 0 ? c : Rational(-c));
    return *this;
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MPoly& f) { return os << f.to_string(); }

inline MPoly operator+(MPoly a, const Rational& s) { return a += MPoly::constant(s); }
inline MPoly operator-(MPoly a, const Rational& s) { return a -= MPoly::constant(s); }

/// Quotient of a by b when b divides a exactly; std::nullopt otherwise.
/// On failure `remainder_out` (if given) receives the division remainder.
inline std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b,
                                       MPoly* remainder_out = nullptr) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  auto u = var_union(a.vars(), b.vars());
  MPoly r = a.over(u);
  const MPoly d = b.over(u);
  const auto& [lead_e, lead_c] = d.leading();
  MPoly quotient(u), rem(u);
  const std::size_t n = u.size();
  while (!r.is_zero()) {
    auto [re, rc] = r.leading();
    bool divides = true;
    Exponent qe(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (re[i] < lead_e[i]) {
        divides = false;
        break;
      }
      qe[i] = re[i] - lead_e[i];
    }
    if (!divides) {
      rem.add_term(re, rc);
      r.add_term(re, -rc);
      continue;
    }
    Rational qc = rc / lead_c;
    MPoly step(u);
    step.add_term(qe, qc);
    quotient += step;
    r -= step * d;
  }
  if (!rem.is_zero()) {
    if (remainder_out) *remainder_out = rem;
    return std::nullopt;
  }
  return quotient;
}

/// Exact multivariate division; throws NotDivisible carrying the remainder.
inline MPoly divide_exact(const MPoly& a, const MPoly& b) {
  MPoly rem;
  auto q = try_divide(a, b, &rem);
  if (!q) throw NotDivisible(rem.to_string());
  return *q;
}

struct CoefficientAudit {
  bool all_integer = true;
  bool all_nonnegative = true;
  bool has_unit_coefficient = false;
  /// Offending terms (non-integer or negative), in canonical order.
  std::vector<std::pair<Exponent, Rational>> offending;
  /// A term with coefficient exactly 1, when one exists.
  std::optional<std::pair<Exponent, Rational>> unit_witness;
};

inline CoefficientAudit coefficient_audit(const MPoly& f) {
  CoefficientAudit a;
  for (const auto& [e, c] : f.terms()) {
    bool bad = false;
    if (c.get_den() != 1) {
      a.all_integer = false;
      bad = true;
    }
    if (c < 0) {
      a.all_nonnegative = false;
      bad = true;
    }
    if (bad) a.offending.emplace_back(e, c);
    if (c == 1 && !a.has_unit_coefficient) {
      a.has_unit_coefficient = true;
      a.unit_witness = std::make_pair(e, c);
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// gcd over Q[x1..xn] by content / primitive-part recursion.

namespace detail {

/// Coefficients of f viewed as a polynomial in variable slot `x`.
inline std::map<unsigned, MPoly> split_by(const MPoly& f, std::size_t x) {
  std::map<unsigned, MPoly> out;
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e;
    unsigned d = g[x];
    g[x] = 0;
    auto [it, fresh] = out.try_emplace(d, MPoly(f.vars()));
    it->second.add_term(std::move(g), c);
  }
  return out;
}

inline MPoly times_power(const MPoly& f, std::size_t x, unsigned k) {
  if (k == 0) return f;
  MPoly r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e;
    g[x] += k;
    r.add_term(std::move(g), c);
  }
  return r;
}

/// Scales f to integer coefficients with gcd 1 and positive leading coefficient.
inline MPoly integer_primitive(const MPoly& f) {
  if (f.is_zero()) return f;
  Integer l = 1, g = 0;
  for (const auto& [e, c] : f.terms()) l = lcm(l, c.get_den());
  for (const auto& [e, c] : f.terms()) g = gcd(g, Integer(c.get_num() * (l / c.get_den())));
  Rational s(l, g);
  if (f.leading().second < 0) s = -s;
  s.canonicalize();
  return f * s;
}

inline MPoly gcd_impl(const MPoly& a, const MPoly& b);

inline MPoly content_in(const MPoly& f, std::size_t x) {
  MPoly g(f.vars());
  for (auto& [d, c] : split_by(f, x)) {
    g = gcd_impl(g, c);
    if (g.is_constant() && !g.is_zero()) return MPoly::constant(1, f.vars());
  }
  return g;
}

inline MPoly pseudo_remainder(MPoly r, const MPoly& b, std::size_t x) {
  auto bs = split_by(b, x);
  const unsigned db = bs.rbegin()->first;
  const MPoly& lb = bs.rbegin()->second;
  while (!r.is_zero()) {
    unsigned dr = r.degree(r.vars()[x]);
    if (dr < db) break;
    MPoly lr = split_by(r, x).rbegin()->second;
    r = r * lb - times_power(lr * b, x, dr - db);
  }
  return r;
}

inline MPoly gcd_impl(const MPoly& a0, const MPoly& b0) {
  auto u = var_union(a0.vars(), b0.vars());
  MPoly a = a0.over(u), b = b0.over(u);
  if (a.is_zero()) return integer_primitive(b);
  if (b.is_zero()) return integer_primitive(a);
  if (a.is_constant() || b.is_constant()) return MPoly::constant(1, u);
  std::size_t x = u.size();
  for (std::size_t i = 0; i < u.size() && x == u.size(); ++i)
    if (a.degree(u[i]) > 0 || b.degree(u[i]) > 0) x = i;
  if (a.degree(u[x]) == 0) return gcd_impl(a, content_in(b, x));
  if (b.degree(u[x]) == 0) return gcd_impl(content_in(a, x), b);
  MPoly ca = content_in(a, x), cb = content_in(b, x);
  MPoly c = gcd_impl(ca, cb);
  MPoly pa = integer_primitive(divide_exact(a, ca));
  MPoly pb = integer_primitive(divide_exact(b, cb));
  if (pa.degree(u[x]) < pb.degree(u[x])) std::swap(pa, pb);
  while (!pb.is_zero()) {
    MPoly r = pseudo_remainder(pa, pb, x);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = MPoly(u);
    } else {
      pb = integer_primitive(divide_exact(r, content_in(r, x)));
      if (pb.degree(u[x]) == 0) {
        pa = MPoly::constant(1, u);
        pb = MPoly(u);
      }
    }
  }
  MPoly g = integer_primitive(divide_exact(pa, content_in(pa, x)));
  return integer_primitive(c * g);
}

}  // namespace detail

/// Greatest common divisor, normalized to integer content 1 and positive leading coefficient.
inline MPoly gcd(const MPoly& a, const MPoly& b) { return detail::gcd_impl(a, b); }

}  // namespace jackpos
