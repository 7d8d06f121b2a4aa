#include <catch_amalgamated.hpp>

#include "jackpos/expr_parse.hpp"
#include "jackpos/rect.hpp"

using namespace jackpos;

namespace {

MPoly P(std::string_view s) { return parse_poly(s); }

MPoly T(const Partition& mu) { return rect_recurrence(mu).value; }

MPoly at_pq(const MPoly& f, int p, int q) {
  return beta_to_alpha(f).evaluate({{"p", Rational(p)}, {"q", Rational(q)}}).over({"alpha"});
}

}  // namespace

TEST_CASE("first recurrence values", "[rect]") {
  CHECK(T(Partition()) == P("1"));
  CHECK(T({2}) == P("-p q (p - alpha q + beta)"));
  CHECK(-T({3}) == T({2}) * P("p - alpha q + 2 beta") + P("alpha p q (p q - 1)"));
  CHECK(-T({2, 2}) == T({3}) * Rational(2) + P("(p - alpha q + beta)(p q - 2)") * T({2}));
  CHECK_THROWS_AS(rect_recurrence({2, 1}), MuHasOnes);
}

TEST_CASE("recurrence matches concrete rectangles", "[rect]") {
  for (int k = 2; k <= 5; ++k)
    for (const auto& mu : enumerate_without_ones(k))
      for (auto [p, q] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 5}}) {
        INFO(mu.to_string() << " at " << p << "x" << q);
        CHECK(at_pq(T(mu), p, q) == theta_hat(Partition::rectangle(p, q), mu));
      }
}

TEST_CASE("recurrence matches the interpolated polynomial", "[rect]") {
  for (int k = 2; k <= 5; ++k)
    for (const auto& mu : enumerate_without_ones(k))
      CHECK(alpha_to_beta(T(mu)).over({"p", "q", "beta"}) == rect_theta_symbolic(1, mu).poly);
}

TEST_CASE("recurrence values are multiples of pq", "[rect]") {
  for (int k = 2; k <= 7; ++k)
    for (const auto& mu : enumerate_without_ones(k)) {
      MPoly rem;
      CHECK(try_divide(T(mu), P("p q"), &rem).has_value());
    }
}

TEST_CASE("signs and integrality", "[rect]") {
  for (int k = 2; k <= 6; ++k)
    for (const auto& mu : enumerate_without_ones(k)) {
      const auto t = rect_recurrence(mu);
      const auto audit = coefficient_audit(rect_positive_form(t));
      CHECK(audit.all_nonnegative);
      CHECK(t.integral);
    }
}

TEST_CASE("independent beta", "[rect]") {
  const auto linked = rect_recurrence({3, 2}), free = rect_recurrence({3, 2}, false);
  CHECK(linked.value == free.value);
  CHECK(linked.specialized() == beta_to_alpha(free.value));
  CHECK(free.specialized() == free.value);
}

TEST_CASE("boundary shapes", "[rect]") {
  CHECK(rect_boundary({2}, RectBoundary::remove_box) == P("-(p q - 2)(p - alpha q + beta)"));
  CHECK(rect_boundary(Partition(), RectBoundary::add_row_top) == P("1"));
  CHECK(rect_boundary({2}, RectBoundary::add_row_bottom) == T({2}) - P("2 p"));
  CHECK_THROWS_AS(rect_boundary({2, 1}, RectBoundary::remove_box), MuHasOnes);
  CHECK_THROWS_AS(rect_boundary_from_string("sideways"), ParseError);
  for (int k = 2; k <= 5; ++k)
    for (const auto& mu : enumerate_without_ones(k))
      for (auto [p, q] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}}) {
        INFO(mu.to_string() << " at " << p << "x" << q);
        std::vector<int> top(static_cast<std::size_t>(p), q), bottom = top, trimmed = top;
        top[0] += 1;
        bottom.push_back(1);
        trimmed.back() -= 1;
        CHECK(at_pq(rect_boundary(mu, RectBoundary::add_row_top), p, q) == theta_hat(Partition(top), mu));
        CHECK(at_pq(rect_boundary(mu, RectBoundary::add_row_bottom), p, q) == theta_hat(Partition(bottom), mu));
        if (p * q - 1 >= k)
          CHECK(at_pq(rect_boundary(mu, RectBoundary::remove_box), p, q) == theta_hat(Partition(trimmed), mu));
      }
}

TEST_CASE("vanishing beyond the rectangle", "[rect]") {
  for (int k = 2; k <= 6; ++k)
    for (const auto& mu : enumerate_without_ones(k))
      for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}})
        if (k > p * q) CHECK(at_pq(T(mu), p, q).is_zero());
}

TEST_CASE("extension divisibility", "[rect]") {
  auto d2 = extension_divisibility({2}, 1, 1);
  CHECK(d2.divisible);
  CHECK(d2.value == P("alpha - beta - 1"));
  CHECK(d2.quotient == P("1"));
  auto d3 = extension_divisibility({3}, 1, 1);
  CHECK(d3.value == P("(alpha - beta - 1)(alpha - 2 beta - 1)"));
  auto d32 = extension_divisibility({3, 2}, 3, 1);
  CHECK(d32.value == P("-9 (alpha - beta - 1)(alpha - 2 beta - 3)(alpha - 3 beta - 9)"));
  CHECK(d32.quotient == P("-9 (alpha - 2 beta - 3)(alpha - 3 beta - 9)"));
  for (int k = 2; k <= 6; ++k)
    for (const auto& mu : enumerate_without_ones(k))
      for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}})
        if (k > p * q) CHECK(extension_divisibility(mu, p, q).divisible);
  CHECK_THROWS(extension_divisibility({2}, 1, 2));
}
