#include <catch_amalgamated.hpp>

#include <random>

#include "jackpos/expr_parse.hpp"
#include "jackpos/theta.hpp"

using namespace jackpos;

namespace {

MPoly P(std::string_view s) { return parse_poly(s); }

MPoly in_beta(std::string_view s) { return alpha_to_beta(P(s)); }

// (-1)^k ϑ with q negated, as a polynomial in beta.
MPoly positive_form(int m, const Partition& mu) {
  return negate_q(rect_theta_symbolic(m, mu).poly, m, mu.weight());
}

}  // namespace

TEST_CASE("single values", "[theta]") {
  CHECK(theta_hat({2, 2}, {2}) == P("4 alpha - 4"));
  CHECK(theta_hat({3}, {2}) == P("6 alpha"));
  CHECK(theta_hat({1, 1, 1}, {2}) == P("-6"));
  CHECK(theta_hat({4, 1}, Partition()) == P("1"));
  CHECK(theta_hat({3, 2}, {3, 2}) == theta({3, 2}, {3, 2}) * Rational(6));
}

TEST_CASE("binomial route agrees with the Jack expansion", "[theta]") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& la : enumerate_partitions(n))
      for (int k = 0; k <= n; ++k)
        for (const auto& mu : enumerate_without_ones(k)) CHECK(theta_hat(la, mu) == theta_hat_direct(la, mu));
  for (const auto& la : enumerate_partitions(8))
    for (const auto& mu : {Partition{2}, Partition{3, 2}, Partition{2, 2, 2}, Partition{4, 4}})
      CHECK(theta_hat(la, mu) == theta_hat_direct(la, mu));
}

TEST_CASE("argument errors", "[theta]") {
  CHECK_THROWS_AS(theta_hat({3}, {2, 1}), MuHasOnes);
  CHECK_THROWS_AS(theta_hat({2}, {3}), MuTooHeavy);
  CHECK_THROWS_AS(theta_hat_general({2}, {2, 1}), RhoTooHeavy);
  CHECK_THROWS_AS(theta_hat_at({Partition{1}}, {2}, 2), MuTooHeavy);
  CHECK(theta_hat_at({Partition{1}}, {2}, 2, true).front() == 0);
}

TEST_CASE("image of a power sum with ones", "[theta]") {
  // binom(n-k+m1, m1) z_ρ θ^λ_{ρ,1^{n-k}}
  for (int n = 1; n <= 6; ++n)
    for (const auto& la : enumerate_partitions(n))
      for (int k = 0; k <= n; ++k)
        for (const auto& rho : enumerate_partitions(k)) {
          const int m1 = rho.multiplicity(1);
          Integer c = 1;
          for (int t = 1; t <= m1; ++t) c = c * (n - k + t) / t;
          const MPoly expect = theta(la, rho.with_ones(n - k)) * Rational(c * rho.z_factor());
          CHECK(theta_hat_general(la, rho) == expect);
        }
  CHECK(theta_hat_general({3, 1}, {1, 1}) == P("12"));
}

TEST_CASE("numeric sweep matches symbolic values", "[theta]") {
  std::mt19937 rng(7);
  const std::vector<Rational> alphas{Rational(2, 3), Rational(5), Rational(-7, 2)};
  for (const auto& mu : {Partition{2}, Partition{3}, Partition{2, 2}, Partition{4}}) {
    std::vector<Partition> shapes;
    for (int n = mu.weight(); n <= 8; ++n) {
      auto all = enumerate_partitions(n);
      shapes.push_back(all[rng() % all.size()]);
    }
    for (const auto& a : alphas) {
      auto got = theta_hat_at(shapes, mu, a);
      for (std::size_t i = 0; i < shapes.size(); ++i)
        CHECK(got[i] == theta_hat(shapes[i], mu).evaluate_all({{"alpha", a}}));
    }
  }
}

TEST_CASE("multirectangle shapes", "[theta]") {
  CHECK(multirectangle({2, 1}, {3, 1}) == Partition{3, 3, 1});
  CHECK(multirectangle({0, 2}, {4, 2}) == Partition{2, 2});
  CHECK_THROWS(multirectangle({1, 1}, {1, 2}));
  CHECK_THROWS(multirectangle({1}, {1, 2}));
}

TEST_CASE("one rectangle: interpolation and closed form agree", "[theta][rect]") {
  for (int k = 2; k <= 5; ++k)
    for (const auto& mu : enumerate_without_ones(k))
      CHECK(rect_theta_symbolic(1, mu).poly == rect_theta_symbolic(1, mu, RectMode::closed_form_m1).poly);
  CHECK_THROWS(rect_theta_symbolic(2, {2}, RectMode::closed_form_m1));
}

TEST_CASE("one rectangle displays", "[theta][rect]") {
  CHECK(rect_theta_symbolic(1, Partition()).poly == P("1"));
  CHECK(rect_theta_symbolic(1, {2}).poly == in_beta("-p q (p - alpha q + beta)"));
  CHECK(positive_form(1, {2}) == in_beta("p q (alpha q + p + beta)"));
  CHECK(positive_form(1, {3}) == in_beta("p q (alpha q + p + beta)(alpha q + p + 2 beta) + alpha p q (p q + 1)"));
  CHECK(positive_form(1, {4}) ==
        in_beta("p q ((alpha q + p + beta)(alpha q + p + 2 beta) + alpha (p q + 1))(alpha q + p + 3 beta)"
                " + 2 alpha p q (p q + 2)(alpha q + p + beta)"));
  CHECK(positive_form(1, {2, 2}) ==
        in_beta("2 p q (alpha q + p + beta)(alpha q + p + 2 beta) + 2 alpha p q (p q + 1)"
                " + p q (p q + 2)(alpha q + p + beta)^2"));
}

TEST_CASE("two rectangle displays", "[theta][rect]") {
  CHECK(positive_form(2, {2}) ==
        P("p1 q1^2 + p2 q2^2 + 2 p1 p2 q2 + p1^2 q1 + p2^2 q2 + beta (p1 q1 + p2 q2 + p1 q1^2 + p2 q2^2)"));
  CHECK(positive_form(2, {3}) ==
        P("p1 q1 + p2 q2 + p1 q1^3 + p2 q2^3 + p1^3 q1 + p2^3 q2 + 3 p1^2 p2 q2 + 3 p1 p2^2 q2"
          " + 3 p1 p2 q2^2 + 3 p1 p2 q1 q2 + 3 p1^2 q1^2 + 3 p2^2 q2^2"
          " + beta (p1 q1 + p2 q2 + 3 p1 q1^2 + 3 p2 q2^2 + 3 p1^2 q1 + 3 p2^2 q2 + 6 p1 p2 q2"
          " + 3 p1^2 q1^2 + 3 p2^2 q2^2 + 3 p1 p2 q2^2 + 2 p1 q1^3 + 2 p2 q2^3 + 3 p1 p2 q1 q2)"
          " + beta^2 (2 p1 q1 + 2 p2 q2 + 3 p1 q1^2 + 3 p2 q2^2 + p1 q1^3 + p2 q2^3)"));
}

TEST_CASE("two rectangles reduce to one", "[theta][rect]") {
  for (const auto& mu : {Partition{2}, Partition{3}}) {
    const MPoly two = rect_theta_symbolic(2, mu).poly, one = rect_theta_symbolic(1, mu).poly;
    CHECK(two.substitute({{"p2", MPoly::constant(0)}, {"p1", MPoly::variable("p")}, {"q1", MPoly::variable("q")}}) ==
          one);
  }
}

TEST_CASE("rectangular binomial sum", "[theta][rect]") {
  CHECK(theorem2_sum({2}) == P("p q (alpha p + alpha q + alpha - 1)"));
  for (int k = 2; k <= 5; ++k)
    for (const auto& mu : enumerate_without_ones(k)) {
      const RatFunc a(alpha_var());
      const RatFunc t = RatFunc(theorem2_sum(mu)).substitute(std::map<std::string, RatFunc>{
          {"p", RatFunc(MPoly::variable("p")) / a}, {"q", RatFunc(-MPoly::variable("q"))}});
      RatFunc bridged = t * a;
      if (k % 2) bridged = -bridged;
      CHECK(bridged == RatFunc(beta_to_alpha(rect_theta_symbolic(1, mu).poly)));
    }
}
