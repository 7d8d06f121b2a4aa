#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jackpos/errors.hpp"
#include "jackpos/json_io.hpp"
#include "jackpos/mpoly.hpp"
#include "jackpos/ratfunc.hpp"

namespace jackpos {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw Error("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
    }
  }

  /// Builds from parts in any order.
  static Partition sorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  static Partition rectangle(int rows, int cols) {
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(rows, 0)), cols));
  }

  /// Parses "3,2,1", "3,1^2" or "-" (empty).
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "-") return Partition();
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        auto caret = tok.find('^');
        std::size_t used = 0;
        int value = std::stoi(tok.substr(0, caret), &used);
        int times = 1;
        if (caret != std::string::npos) times = std::stoi(tok.substr(caret + 1));
        if (times < 0) throw ParseError("negative multiplicity");
        parts.insert(parts.end(), static_cast<std::size_t>(times), value);
      } catch (const std::logic_error&) {
        throw ParseError("bad partition: " + text);
      }
    }
    try {
      return Partition(std::move(parts));
    } catch (const Error& e) {
      throw ParseError("bad partition \"" + text + "\": " + e.what());
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  int weight() const {
    int w = 0;
    for (int x : parts_) w += x;
    return w;
  }

  /// λ_i with 1-based i; zero past the last part.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  int multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  Partition conjugate() const {
    std::vector<int> c;
    for (int i = 1; i <= part(1); ++i) {
      int n = 0;
      for (int x : parts_)
        if (x >= i) ++n;
      c.push_back(n);
    }
    return Partition(std::move(c));
  }

  Integer z_factor() const {
    Integer z = 1;
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      for (std::size_t t = 1; t <= j - i; ++t) z *= Integer(parts_[i]) * static_cast<unsigned long>(t);
      i = j;
    }
    return z;
  }

  bool contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
      if (mu.part(i) > part(i)) return false;
    return true;
  }

  /// Copy with every part equal to 1 removed.
  Partition without_ones() const {
    std::vector<int> v;
    for (int x : parts_)
      if (x > 1) v.push_back(x);
    return Partition(std::move(v));
  }

  Partition with_ones(int count) const {
    std::vector<int> v = parts_;
    v.insert(v.end(), static_cast<std::size_t>(std::max(count, 0)), 1);
    return Partition(std::move(v));
  }

  /// λ^{(i)}: one box added in row i, if the result is a partition.
  std::optional<Partition> add_box(int i) const {
    if (i < 1 || i > length() + 1) return std::nullopt;
    if (i > 1 && part(i - 1) == part(i)) return std::nullopt;
    std::vector<int> v = parts_;
    if (i == length() + 1) v.push_back(1);
    else ++v[static_cast<std::size_t>(i - 1)];
    return Partition(std::move(v));
  }

  /// λ_{(i)}: one box removed from row i, if the result is a partition.
  std::optional<Partition> remove_box(int i) const {
    if (i < 1 || i > length()) return std::nullopt;
    if (part(i) == part(i + 1)) return std::nullopt;
    std::vector<int> v = parts_;
    --v[static_cast<std::size_t>(i - 1)];
    return Partition(std::move(v));
  }

  std::string to_string() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

/// Descending lexicographic order: (3) before (2,1) before (1,1,1).
struct DescendingLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};

inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("partition json must be an array");
  return Partition(j.get<std::vector<int>>());
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

inline void enumerate_rec(int remaining, int max_part, const Partition* bound, std::vector<int>& cur,
                          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  int row = static_cast<int>(cur.size()) + 1;
  int cap = std::min(remaining, max_part);
  if (bound) {
    cap = std::min(cap, bound->part(row));
    // Not enough room left below this row.
    int room = 0;
    for (int i = row; i <= bound->length(); ++i) room += std::min(bound->part(i), cap);
    if (room < remaining) return;
  }
  for (int x = cap; x >= 1; --x) {
    cur.push_back(x);
    enumerate_rec(remaining - x, x, bound, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All partitions of n (inside `bound` when given), in descending lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n, const std::optional<Partition>& bound = {}) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  detail::enumerate_rec(n, n, bound ? &*bound : nullptr, cur, out);
  return out;
}

/// Partitions of n with no part equal to 1.
inline std::vector<Partition> enumerate_without_ones(int n) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n))
    if (p.multiplicity(1) == 0) out.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------------------
// Orders and moves

inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw WeightMismatch("dominance needs equal weights: " + mu.to_string() + " vs " + lambda.to_string());
  int a = 0, b = 0;
  for (int i = 1; i <= std::max(mu.length(), lambda.length()); ++i) {
    a += mu.part(i);
    b += lambda.part(i);
    if (a > b) return false;
  }
  return true;
}

struct BoxMoves {
  std::vector<std::pair<int, Partition>> add;
  std::vector<std::pair<int, Partition>> remove;
};

inline BoxMoves box_moves(const Partition& lambda) {
  BoxMoves m;
  for (int i = 1; i <= lambda.length() + 1; ++i)
    if (auto p = lambda.add_box(i)) m.add.emplace_back(i, std::move(*p));
  for (int i = 1; i <= lambda.length(); ++i)
    if (auto p = lambda.remove_box(i)) m.remove.emplace_back(i, std::move(*p));
  return m;
}

enum class MuMove { down_r, up_r, down_rs, up_rs, Down_rs, Up_rs };

/// Part substitutions: remove the parts in `take`, insert the parts in `put`.
inline std::optional<Partition> replace_parts(const Partition& mu, std::vector<int> take,
                                              const std::vector<int>& put) {
  std::vector<int> v = mu.parts();
  for (int t : take) {
    auto it = std::find(v.begin(), v.end(), t);
    if (it == v.end()) return std::nullopt;
    v.erase(it);
  }
  for (int x : put)
    if (x > 0) v.push_back(x);
  return Partition::sorted(std::move(v));
}

/// The six single-step modifications of a partition, by part values.
///   down_r  : r -> r-1            up_r  : r -> r+1
///   down_rs : r,s -> r+s-1        up_rs : r+s+1 -> r,s
///   Down_rs : r,s -> r+s          Up_rs : r+s -> r,s
inline std::optional<Partition> mu_modify(const Partition& mu, MuMove kind, int r, int s = 0) {
  if (r < 1) return std::nullopt;
  switch (kind) {
    case MuMove::down_r: return replace_parts(mu, {r}, {r - 1});
    case MuMove::up_r: return replace_parts(mu, {r}, {r + 1});
    case MuMove::down_rs: return s < 1 ? std::nullopt : replace_parts(mu, {r, s}, {r + s - 1});
    case MuMove::up_rs: return s < 1 ? std::nullopt : replace_parts(mu, {r + s + 1}, {r, s});
    case MuMove::Down_rs: return s < 1 ? std::nullopt : replace_parts(mu, {r, s}, {r + s});
    case MuMove::Up_rs: return s < 1 ? std::nullopt : replace_parts(mu, {r + s}, {r, s});
  }
  return std::nullopt;
}

inline std::optional<MuMove> mu_move_from_string(const std::string& s) {
  if (s == "down_r") return MuMove::down_r;
  if (s == "up_r") return MuMove::up_r;
  if (s == "down_rs") return MuMove::down_rs;
  if (s == "up_rs") return MuMove::up_rs;
  if (s == "Down_rs") return MuMove::Down_rs;
  if (s == "Up_rs") return MuMove::Up_rs;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hook, content and factorial quantities (polynomials in alpha)

struct HookProducts {
  MPoly h;        // lower hook product
  MPoly h_prime;  // upper hook product
  MPoly j;        // h * h'
};

inline HookProducts hook_products(const Partition& lambda) {
  const MPoly alpha = MPoly::variable("alpha");
  const Partition conj = lambda.conjugate();
  MPoly h = MPoly::constant(1, {"alpha"}), hp = h;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      int leg = conj.part(j) - i, arm = lambda.part(i) - j;
      h *= alpha * Rational(arm) + Rational(leg + 1);
      hp *= alpha * Rational(arm + 1) + Rational(leg);
    }
  return {h, hp, h * hp};
}

/// Σ over boxes of (j-1) - (i-1)/alpha.
inline RatFunc alpha_content_sum(const Partition& lambda) {
  long a = 0, b = 0;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      a += j - 1;
      b += i - 1;
    }
  const MPoly alpha = MPoly::variable("alpha");
  return RatFunc(alpha * Rational(a) - Rational(b), alpha);
}

/// alpha * d1(lambda), a polynomial.
inline MPoly alpha_d1(const Partition& lambda) {
  return (alpha_content_sum(lambda) * RatFunc(MPoly::variable("alpha"))).as_poly();
}

/// ∏ over boxes of (x + alpha(j-1) - (i-1)), i.e. alpha^{|λ|} (x/alpha)_λ.
inline MPoly alpha_raising(const Partition& lambda, const MPoly& x) {
  const MPoly alpha = MPoly::variable("alpha");
  MPoly r = MPoly::constant(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) r *= x + alpha * Rational(j - 1) - Rational(i - 1);
  return r;
}

/// (u)_λ = ∏ over boxes of (u + j - 1 - (i-1)/alpha).
inline RatFunc raising_factorial(const RatFunc& u, const Partition& lambda) {
  if (lambda.empty()) return RatFunc(1);
  const MPoly alpha = MPoly::variable("alpha");
  // (u)_λ = alpha^{-|λ|} ∏ (alpha*u + alpha(j-1) - (i-1)); with u = a/b this is
  // ∏ (alpha*a + b*(alpha(j-1) - (i-1))) / (alpha*b)^{|λ|}.
  MPoly num = MPoly::constant(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j)
      num *= alpha * u.num() + u.den() * (alpha * Rational(j - 1) - Rational(i - 1));
  MPoly den = (alpha * u.den()).pow(static_cast<unsigned>(lambda.weight()));
  return RatFunc(num, den);
}

}  // namespace jackpos
