#pragma once

#include <map>
#include <string>
#include <utility>

#include "jackpos/errors.hpp"
#include "jackpos/mpoly.hpp"

namespace jackpos {

/// Reduced quotient num/den of two polynomials.
///
/// The denominator has integer coefficients with gcd 1 and a positive leading
/// coefficient; the numerator absorbs whatever rational content remains.
class RatFunc {
 public:
  RatFunc() : num_(), den_(MPoly::constant(1)) {}
  RatFunc(const MPoly& n) : num_(n), den_(MPoly::constant(1, n.vars())) {}  // NOLINT
  RatFunc(const Rational& c) : num_(MPoly::constant(c)), den_(MPoly::constant(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT

  RatFunc(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DenominatorVanishes();
    normalize();
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// The value as a polynomial; throws when a nontrivial denominator remains.
  MPoly as_poly() const {
    if (!den_.is_constant()) throw Error("rational function is not a polynomial: " + to_string());
    return num_ * Rational(1 / den_.constant_value());
  }

  Rational as_constant() const { return as_poly().constant_value(); }

  RatFunc operator-() const { return raw(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant() && b.den_.is_constant())
      return raw(a.num_ * Rational(1 / a.den_.constant_value()) +
                     b.num_ * Rational(1 / b.den_.constant_value()),
                 MPoly::constant(1));
    MPoly g = gcd(a.den_, b.den_);
    if (g.is_constant()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    MPoly da = divide_exact(a.den_, g), db = divide_exact(b.den_, g);
    return RatFunc(a.num_ * db + b.num_ * da, da * b.den_);
  }

  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_constant() && b.den_.is_constant())
      return raw(a.num_ * b.num_ *
                     Rational(1 / (a.den_.constant_value() * b.den_.constant_value())),
                 MPoly::constant(1));
    // Cross-cancel before multiplying to keep the intermediate gcd small.
    MPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    MPoly n = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
    MPoly d = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
    return from_coprime(std::move(n), std::move(d));
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error("division by zero rational function");
    return a * raw(b.den_, b.num_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc pow(int k) const {
    if (k < 0) return RatFunc(1) / pow(-k);
    return from_coprime(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  RatFunc substitute(const std::map<std::string, MPoly>& bindings) const {
    MPoly d = den_.substitute(bindings);
    if (d.is_zero()) throw DenominatorVanishes();
    return RatFunc(num_.substitute(bindings), d);
  }

  RatFunc substitute(const std::map<std::string, RatFunc>& bindings) const;

  RatFunc evaluate(const std::map<std::string, Rational>& point) const {
    std::map<std::string, MPoly> b;
    for (const auto& [v, x] : point) b.emplace(v, MPoly::constant(x));
    return substitute(b);
  }

  std::string to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    auto wrap = [](const MPoly& f) {
      std::string s = f.to_string();
      return f.size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  static RatFunc raw(MPoly n, MPoly d) {
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    if (r.num_.is_zero()) r.den_ = MPoly::constant(1);
    return r;
  }

  static RatFunc from_coprime(MPoly n, MPoly d) {
    RatFunc r = raw(std::move(n), std::move(d));
    r.scale_denominator();
    return r;
  }

  void scale_denominator() {
    if (num_.is_zero()) {
      den_ = MPoly::constant(1);
      return;
    }
    MPoly d = detail::integer_primitive(den_);
    Rational s = d.leading().second / den_.leading().second;
    num_ *= s;
    den_ = std::move(d);
    if (den_.is_constant()) den_ = MPoly::constant(1);
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = MPoly::constant(1);
      return;
    }
    if (!den_.is_constant()) {
      MPoly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
      }
    }
    scale_denominator();
  }

  MPoly num_;
  MPoly den_;
};

inline RatFunc RatFunc::substitute(const std::map<std::string, RatFunc>& bindings) const {
  // Evaluate num and den as polynomials in the bound variables by Horner-free expansion.
  auto apply = [&](const MPoly& f) {
    std::vector<std::string> free_vars;
    for (const auto& v : f.vars())
      if (!bindings.count(v)) free_vars.push_back(v);
    RatFunc total;
    for (const auto& [e, c] : f.terms()) {
      RatFunc t = RatFunc(c);
      Exponent rest(free_vars.size(), 0);
      std::size_t k = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        auto it = bindings.find(f.vars()[i]);
        if (it == bindings.end()) {
          rest[k++] = e[i];
        } else if (e[i] > 0) {
          t *= it->second.pow(static_cast<int>(e[i]));
        }
      }
      MPoly mono(free_vars, {{rest, Rational(1)}});
      total += t * RatFunc(mono);
    }
    return total;
  };
  RatFunc d = apply(den_);
  if (d.is_zero()) throw DenominatorVanishes();
  return apply(num_) / d;
}

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

inline RatFunc operator+(const RatFunc& a, long b) { return a + RatFunc(b); }
inline RatFunc operator*(const RatFunc& a, long b) { return a * RatFunc(b); }
inline RatFunc operator*(long b, const RatFunc& a) { return a * RatFunc(b); }

}  // namespace jackpos
