#include <catch_amalgamated.hpp>

#include <random>

#include "jackpos/expr_parse.hpp"
#include "jackpos/partition.hpp"

using namespace jackpos;

namespace {

Partition random_partition(std::mt19937_64& rng, int n) {
  std::vector<int> parts;
  while (n > 0) {
    int x = std::uniform_int_distribution<int>(1, n)(rng);
    parts.push_back(x);
    n -= x;
  }
  return Partition::sorted(parts);
}

}  // namespace

TEST_CASE("conjugate", "[partitions]") {
  CHECK(Partition{3, 2}.conjugate() == Partition{2, 2, 1});
  CHECK(Partition().conjugate() == Partition());
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) CHECK(Partition::rectangle(p, q).conjugate() == Partition::rectangle(q, p));
}

TEST_CASE("z factor", "[partitions]") {
  CHECK(Partition{2, 2}.z_factor() == 8);
  CHECK(Partition{3, 2}.z_factor() == 6);
  CHECK(Partition().z_factor() == 1);
  CHECK(Partition{1, 1, 1}.z_factor() == 6);
}

TEST_CASE("hook products", "[partitions]") {
  auto one = hook_products(Partition{1});
  CHECK(one.h == parse_poly("1"));
  CHECK(one.h_prime == parse_poly("alpha"));
  CHECK(one.j == parse_poly("alpha"));
  auto two = hook_products(Partition{2});
  CHECK(two.h == parse_poly("1 + alpha"));
  CHECK(two.h_prime == parse_poly("2 alpha^2"));
  CHECK(two.j == parse_poly("2 alpha^2 (1 + alpha)"));
  auto empty = hook_products(Partition());
  CHECK(empty.j == parse_poly("1"));
}

TEST_CASE("hook products agree at alpha = 1", "[partitions]") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& la : enumerate_partitions(n)) {
      auto hp = hook_products(la);
      CHECK(hp.h.evaluate_all({{"alpha", 1}}) == hp.h_prime.evaluate_all({{"alpha", 1}}));
    }
}

TEST_CASE("alpha content sum", "[partitions]") {
  CHECK(alpha_content_sum(Partition{2}) == RatFunc(1));
  CHECK(alpha_content_sum(Partition{1, 1}) == parse_ratfunc("-1/alpha"));
  CHECK(alpha_content_sum(Partition{2, 2}) == parse_ratfunc("2 - 2/alpha"));
}

TEST_CASE("raising factorial", "[partitions]") {
  RatFunc u = RatFunc(MPoly::variable("u"));
  CHECK(raising_factorial(u, Partition{2}) == parse_ratfunc("u (u + 1)"));
  CHECK(raising_factorial(u, Partition{1, 1}) == parse_ratfunc("u (u - 1/alpha)"));
  CHECK(raising_factorial(u, Partition()) == RatFunc(1));
  CHECK(raising_factorial(u, Partition{3, 2, 1}).num().degree("u") == 6);
}

TEST_CASE("dominance", "[partitions]") {
  CHECK(dominance_leq(Partition{1, 1, 1}, Partition{3}));
  CHECK_FALSE(dominance_leq(Partition{3}, Partition{1, 1, 1}));
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
  CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), WeightMismatch);
}

TEST_CASE("box moves", "[partitions]") {
  auto m = box_moves(Partition{2, 2});
  REQUIRE(m.add.size() == 2);
  CHECK(m.add[0] == std::make_pair(1, Partition{3, 2}));
  CHECK(m.add[1] == std::make_pair(3, Partition{2, 2, 1}));
  REQUIRE(m.remove.size() == 1);
  CHECK(m.remove[0] == std::make_pair(2, Partition{2, 1}));
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      auto r = box_moves(Partition::rectangle(p, q));
      REQUIRE(r.add.size() == 2);
      CHECK(r.add[0].first == 1);
      CHECK(r.add[1].first == p + 1);
      REQUIRE(r.remove.size() == 1);
      CHECK(r.remove[0].first == p);
    }
  auto e = box_moves(Partition());
  REQUIRE(e.add.size() == 1);
  CHECK(e.add[0].second == Partition{1});
  CHECK(e.remove.empty());
}

TEST_CASE("part modifications", "[partitions]") {
  CHECK(mu_modify(Partition{3, 2}, MuMove::down_r, 3) == Partition{2, 2});
  CHECK(mu_modify(Partition{3, 2}, MuMove::up_r, 2) == Partition{3, 3});
  CHECK(mu_modify(Partition{3, 2}, MuMove::down_rs, 3, 2) == Partition{4});
  CHECK(mu_modify(Partition{3, 2}, MuMove::Up_rs, 1, 2) == Partition{2, 2, 1});
  CHECK(mu_modify(Partition{3, 2}, MuMove::Down_rs, 3, 2) == Partition{5});
  CHECK(mu_modify(Partition{4}, MuMove::up_rs, 1, 2) == Partition{2, 1});
  CHECK_FALSE(mu_modify(Partition{3, 2}, MuMove::down_r, 4).has_value());
  CHECK_FALSE(mu_modify(Partition{3}, MuMove::down_rs, 3, 3).has_value());
  CHECK(mu_modify(Partition{3, 3}, MuMove::down_rs, 3, 3) == Partition{5});
  // Weight and length bookkeeping.
  Partition mu{4, 3, 2};
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; s <= 4; ++s) {
      if (auto d = mu_modify(mu, MuMove::down_rs, r, s)) {
        CHECK(d->weight() == mu.weight() - 1);
        CHECK(d->length() == mu.length() - 1);
      }
      if (auto u = mu_modify(mu, MuMove::up_rs, r, s)) {
        CHECK(u->weight() == mu.weight() - 1);
        CHECK(u->length() == mu.length() + 1);
      }
    }
}

TEST_CASE("enumeration", "[partitions]") {
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(10).size() == 42);
  auto inside = enumerate_partitions(5, Partition{2, 2, 2});
  REQUIRE(inside.size() == 1);
  CHECK(inside[0] == Partition{2, 2, 1});
  auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  auto four = enumerate_partitions(4);
  CHECK(four.front() == Partition{4});
  CHECK(four.back() == Partition{1, 1, 1, 1});
  CHECK(std::is_sorted(four.begin(), four.end(), DescendingLex{}));
  // Brute-force containment filter agrees.
  Partition box{3, 2, 2};
  for (int n = 0; n <= 7; ++n) {
    std::vector<Partition> expect;
    for (auto& p : enumerate_partitions(n))
      if (box.contains(p)) expect.push_back(p);
    CHECK(enumerate_partitions(n, box) == expect);
  }
}

TEST_CASE("text and json forms", "[partitions]") {
  CHECK(Partition::parse("3,2,1") == Partition{3, 2, 1});
  CHECK(Partition::parse("-") == Partition());
  CHECK(Partition::parse("3,1^2") == Partition{3, 1, 1});
  CHECK(Partition{3, 2, 1}.to_string() == "3,2,1");
  CHECK(Partition().to_string() == "-");
  CHECK(to_json(Partition{3, 2}).dump() == "[3,2]");
  CHECK(to_json(Partition()).dump() == "[]");
  CHECK_THROWS_AS(Partition::parse("1,2"), ParseError);
  CHECK_THROWS_AS(Partition::parse("x"), ParseError);
}

TEST_CASE("random partition invariants", "[partitions][property]") {
  std::mt19937_64 rng(42);
  const MPoly alpha = MPoly::variable("alpha");
  for (int it = 0; it < 200; ++it) {
    int n = std::uniform_int_distribution<int>(0, 30)(rng);
    Partition la = random_partition(rng, n);
    CHECK(la.conjugate().conjugate() == la);
    Partition c = la.conjugate();
    for (int i = 1; i <= la.part(1); ++i) CHECK(c.multiplicity(i) == la.part(i) - la.part(i + 1));
    if (n <= 12) {
      for (const auto& [i, up] : box_moves(la).add) {
        RatFunc diff = alpha_content_sum(up) - alpha_content_sum(la);
        CHECK(diff == RatFunc(Rational(la.part(i))) - RatFunc(Rational(i - 1)) / RatFunc(alpha));
      }
    }
  }
}
