#pragma once

// Exact polynomial interpolation on tensor-product grids of rational nodes.

#include <cstddef>
#include <string>
#include <vector>

#include "jackpos/errors.hpp"
#include "jackpos/mpoly.hpp"

namespace jackpos {

/// Monomial coefficients c_0..c_{n-1} of the unique polynomial of degree < n through (xs, ys).
inline std::vector<Rational> interpolate_1d(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw Error("interpolation needs one value per node");
  // Divided differences in place.
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      Rational d = xs[i] - xs[i - k];
      if (d == 0) throw Error("repeated interpolation node");
      ys[i] = (ys[i] - ys[i - 1]) / d;
      if (i == k) break;
    }
  // Horner expansion of the Newton form.
  std::vector<Rational> c(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // c <- c * (x - xs[k]) + ys[k]
    for (std::size_t j = n - 1; j > 0; --j) c[j] = c[j - 1] - xs[k] * c[j];
    c[0] = -xs[k] * c[0] + ys[k];
  }
  return c;
}

/// Inverse Vandermonde matrix for the nodes: coeffs = M * values.
inline std::vector<std::vector<Rational>> interpolation_matrix(const std::vector<Rational>& xs) {
  const std::size_t n = xs.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Rational> e(n, 0);
    e[col] = 1;
    auto c = interpolate_1d(xs, e);
    for (std::size_t row = 0; row < n; ++row) m[row][col] = c[row];
  }
  return m;
}

struct GridAxis {
  std::string var;
  std::vector<Rational> nodes;
};

/// Reconstructs the polynomial whose values on the product grid are `values`
/// (row-major, first axis slowest). Degree in each variable is < its node count.
inline MPoly interpolate_tensor(const std::vector<GridAxis>& axes, std::vector<Rational> values) {
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.nodes.size();
  if (values.size() != total) throw Error("grid value count does not match axes");
  std::size_t stride = total;
  for (const auto& axis : axes) {
    const std::size_t n = axis.nodes.size();
    stride /= n;
    const auto m = interpolation_matrix(axis.nodes);
    std::vector<Rational> fiber(n);
    for (std::size_t base = 0; base < total; ++base) {
      // Visit each fiber once, from its first element.
      if ((base / stride) % n != 0) continue;
      for (std::size_t k = 0; k < n; ++k) fiber[k] = values[base + k * stride];
      for (std::size_t r = 0; r < n; ++r) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (m[r][k] != 0 && fiber[k] != 0) s += m[r][k] * fiber[k];
        values[base + r * stride] = s;
      }
    }
  }
  std::vector<std::string> names;
  for (const auto& a : axes) names.push_back(a.var);
  std::vector<std::pair<Exponent, Rational>> terms;
  Exponent e(axes.size(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t a = axes.size(); a-- > 0;) {
      e[a] = static_cast<unsigned>(rem % axes[a].nodes.size());
      rem /= axes[a].nodes.size();
    }
    if (values[flat] != 0) terms.emplace_back(e, values[flat]);
  }
  return MPoly(names, terms);
}

}  // namespace jackpos
