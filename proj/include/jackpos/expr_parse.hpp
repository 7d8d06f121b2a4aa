#pragma once

// Small infix parser for polynomial and rational-function literals, e.g.
//   "-p*q*(p - alpha*q + beta)"   or   "2 p q^2 + (1/2) alpha".
// Juxtaposition means multiplication; '^' takes a non-negative integer.

#include <cctype>
#include <string>
#include <string_view>

#include "jackpos/errors.hpp"
#include "jackpos/mpoly.hpp"
#include "jackpos/ratfunc.hpp"

namespace jackpos {

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) +
                     "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_atom() {
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  RatFunc expr() {
    RatFunc r;
    bool first = true;
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        RatFunc t = term();
        r = (c == '+') ? r + t : r - t;
      } else if (first) {
        r = term();
      } else {
        break;
      }
      first = false;
    }
    return r;
  }

  RatFunc term() {
    RatFunc r = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        r *= power();
      } else if (c == '/') {
        ++pos_;
        RatFunc d = power();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else if (starts_atom()) {
        r *= power();
      } else {
        return r;
      }
    }
  }

  RatFunc power() {
    RatFunc base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  RatFunc atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return RatFunc(MPoly::variable(std::string(s_.substr(start, pos_ - start))));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc parse_ratfunc(std::string_view s) { return detail::ExprParser(s).parse(); }

inline MPoly parse_poly(std::string_view s) {
  RatFunc r = parse_ratfunc(s);
  if (!r.is_polynomial()) throw ParseError("expression is not a polynomial: " + std::string(s));
  return r.as_poly();
}

}  // namespace jackpos
