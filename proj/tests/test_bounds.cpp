#include "support.hpp"

#include "bsurf/bounds.hpp"

#include <doctest.h>

using namespace bsurf;

namespace {

// K^(10^k) by repeated multiplication, no pow.
Integer tower_oracle(long long k, int levels) {
  Integer cur = k;
  for (int i = 0; i < levels; ++i) {
    Integer next = 1;
    for (int j = 0; j < 10; ++j) next *= cur;
    cur = next;
  }
  return cur;
}

Integer choose_oracle(long long c, long long r, long long s0, long long s1) {
  Integer target = 4 * (Integer(r) * c + Integer(s0) * s1 * c * c);
  for (long long k = 2;; ++k)
    if (tower_oracle(k, 1) > target) return k;
}

} // namespace

TEST_CASE("sector_constants") {
  auto y = sector_constants({{1, 0, 1}, {0, 1, 1}});
  CHECK(y.c0 == 1);
  CHECK(y.k == 2);
  CHECK(y.c == 2);
  auto t = sector_constants({{1}});
  CHECK(t.c0 == 1);
  CHECK(t.k == 1);
  CHECK(t.c == 1);
  CHECK_THROWS_AS(sector_constants({}), DomainError);
}

TEST_CASE("weight_ceiling") {
  CHECK(weight_ceiling(2, 1).k_star() == 1024);
  CHECK(format_integer(weight_ceiling(2, 2).k_star()) == "1267650600228229401496703205376");
  CHECK(weight_ceiling(3, 1).k_star() == 59049);
  for (long long k = 2; k <= 3; ++k)
    for (int levels = 1; levels <= 3; ++levels) {
      auto w = weight_ceiling(k, levels);
      REQUIRE(static_cast<int>(w.tower.size()) == levels);
      for (int i = 1; i <= levels; ++i) CHECK(w.tower[i - 1] == tower_oracle(k, i));
    }
  CHECK_THROWS_AS(weight_ceiling(1, 1), DomainError);
  CHECK_THROWS_AS(weight_ceiling(2, 0), DomainError);
  CHECK_THROWS_AS(weight_ceiling(2, 9), DomainError);
}

TEST_CASE("choose_K") {
  CHECK(choose_K(1, {1, 1, 1}) == 2);
  CHECK(choose_K(100, {1, 1, 1}) == 3);
  CHECK(choose_K(0, {5, 5, 5}) == 2);
  for (long long c = 0; c <= 40; c += 3)
    for (long long r = 1; r <= 9; r += 4) CHECK(choose_K(c, {r, 2, 3}) == choose_oracle(c, r, 2, 3));
}

TEST_CASE("genus_bound") {
  auto g = genus_bound(oracle::fixture("G2"), 6, Integer(2));
  CHECK(g.ceiling.k_star() == 1024);
  CHECK(g.sum_abs_chi == 2);
  CHECK(g.genus_bound == 1025);
  CHECK_FALSE(g.k_chosen);
  CHECK(g.caveats.size() == 4);

  auto q = genus_bound(oracle::fixture("Q1"), 6);
  CHECK(q.fundamentals == std::vector<Weights>{{1, 2, 3}});
  CHECK(q.sum_abs_chi == 2);
  CHECK(q.constants.c == 3);
  CHECK(q.ceiling.k_base == choose_oracle(3, 12, 12, 12));
  CHECK(q.genus_bound == 1 + tower_oracle(q.ceiling.k_base.convert_to<long long>(), 1));

  CHECK_THROWS_WITH_AS(genus_bound(oracle::fixture("T1"), 6), doctest::Contains("not quasi-hyperbolic"), DomainError);
  CHECK_THROWS_WITH_AS(genus_bound(oracle::fixture("Q1"), 1), doctest::Contains("incomplete"), DomainError);
}

TEST_CASE("genus bound is monotone in K and in the chi sum") {
  Integer prev = 0;
  for (long long k = 2; k <= 6; ++k) {
    Integer g = genus_from(tower_oracle(k, 1), 2);
    CHECK(g >= prev);
    prev = g;
  }
  for (int s = 0; s < 10; ++s) CHECK(genus_from(1024, Rational(s + 1, 2)) >= genus_from(1024, Rational(s, 2)));
}
