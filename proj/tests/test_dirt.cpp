#include <doctest.h>

#include <stdexcept>

#include <map>

#include "oracles.hpp"
#include "qsc/dirt.hpp"

using namespace qsc;

TEST_CASE("row strip shape") {
  const Filling q({{5}, {2, 3, 4, 7}, {1, 6}});
  CHECK(row_strip_shape(q) == Composition{1, 3, 3});
  const auto d = row_strips(q);
  REQUIRE(d.strips.size() == 3);
  CHECK(d.strips[1].start == 2);
  CHECK(d.strips[2].cells == std::vector<Cell>{{1, 1}, {2, 3}, {4, 2}});
  CHECK(row_strip_shape(Filling({{6, 7}, {4, 5, 8, 9}, {1, 2, 3}})) == Composition{3, 2, 4});
  CHECK(row_strip_shape(Filling(std::vector<std::vector<int>>{{1, 2, 3}})) == Composition{3});
  CHECK_THROWS_AS(row_strip_shape(Filling(std::vector<std::vector<int>>{{1, 1}})), std::invalid_argument);
}

TEST_CASE("a run through distinct columns that moves left is split") {
  // 4, 5, 6 sit in columns 1, 3, 2.
  const Filling q({{4}, {2, 6}, {1, 3, 5}});
  CHECK(row_strip_shape(q) == Composition{1, 2, 2, 1});
  CHECK_FALSE(is_dirt(q));
}

TEST_CASE("DIRT predicate") {
  CHECK(is_dirt(Filling({{3}, {1, 2}})));
  CHECK(is_dirt(Filling({{3}, {1, 2, 4}})));
  CHECK(is_dirt(Filling({{3, 4}, {1, 2}})));
  CHECK_FALSE(is_dirt(Filling({{1, 2}, {3, 4}})));
  CHECK_FALSE(is_dirt(Filling(std::vector<std::vector<int>>{{1, 1}})));
}

TEST_CASE("DIRT predicate and enumeration agree with brute force") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& shape : compositions_of(n)) {
      std::map<Composition, std::size_t> by_strips;
      oracle::all_standard(shape, [&](const oracle::Rows& r) {
        const bool ok = oracle::dirt(r);
        CHECK(is_dirt(Filling(r)) == ok);
        if (ok) ++by_strips[oracle::strip_shape(r)];
      });
      for (const auto& strips : compositions_of(n)) {
        const auto found = enumerate_dirts(shape, strips);
        CHECK(found.size() == by_strips[strips]);
        CHECK(count_dirts(shape, strips) == found.size());
        for (const auto& q : found) {
          CHECK(is_dirt(q));
          CHECK(row_strip_shape(q) == strips);
        }
      }
    }
  }
}

TEST_CASE("DIRT enumeration examples") {
  CHECK(enumerate_dirts({2, 2}, {2, 2}).size() == 1);
  CHECK(enumerate_dirts({1, 3}, {2, 2}).size() == 1);
  CHECK(enumerate_dirts({1, 2, 3}, {2, 2, 2}).size() == 2);
  CHECK(enumerate_dirts({1, 2}, {1, 1, 1}).empty());
  CHECK(enumerate_dirts({}, {}) == std::vector<Filling>{Filling()});
}

TEST_CASE("dominance between strip shape and shape") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& shape : compositions_of(n)) {
      for (const auto& strips : compositions_of(n)) {
        if (count_dirts(shape, strips) == 0) continue;
        CHECK(strips.length() == shape.length());
        CHECK(dominates(reverse(strips), shape));
      }
    }
  }
}

TEST_CASE("partition shapes and rearrangements") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& alpha : compositions_of(n, lambda.length())) {
        CHECK((count_dirts(lambda, reverse(alpha)) > 0) == (alpha == lambda));
        if (is_rearrangement(alpha, lambda)) CHECK(count_dirts(alpha, reverse(lambda)) > 0);
      }
      const Filling s = superstandard(lambda);
      CHECK(is_dirt(s));
      CHECK(enumerate_dirts(lambda, reverse(lambda)) == std::vector<Filling>{s});
    }
  }
}

TEST_CASE("superstandard") {
  CHECK(superstandard({3, 2, 1}) == Filling({{4, 5, 6}, {2, 3}, {1}}));
  CHECK(superstandard({4}) == Filling(std::vector<std::vector<int>>{{1, 2, 3, 4}}));
  CHECK(superstandard({1, 1}) == Filling({{2}, {1}}));
  CHECK_THROWS_AS(superstandard({1, 2}), std::invalid_argument);
}
