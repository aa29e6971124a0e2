#include <doctest.h>

#include <stdexcept>

#include <set>

#include "qsc/dirt.hpp"
#include "qsc/insertion.hpp"

using namespace qsc;

TEST_CASE("insertion with a bumping path") {
  const InsertionResult r = insert(Filling({{2}, {3, 4, 7}, {6, 8}}), 5);
  CHECK(r.tableau == Filling({{2, 8}, {3, 4, 5}, {6, 7}}));
  CHECK(r.bumping_path == std::vector<Cell>{{3, 2}, {2, 3}, {2, 1}});
  CHECK(r.new_cell == Cell{2, 1});
  CHECK_FALSE(r.created_row);
}

TEST_CASE("insertion opening a new row") {
  const InsertionResult r = insert(Filling({{1, 3}, {4, 5}}), 2);
  CHECK(r.tableau == Filling({{1, 2}, {3}, {4, 5}}));
  CHECK(r.created_row);
  CHECK(r.new_cell == Cell{1, 2});
  CHECK(r.bumping_path.back() == r.new_cell);
}

TEST_CASE("insertion into the empty tableau") {
  for (int k : {1, 4, 9}) {
    const InsertionResult r = insert(Filling(), k);
    CHECK(r.tableau == Filling(std::vector<std::vector<int>>{{k}}));
    CHECK(r.bumping_path == std::vector<Cell>{{1, 1}});
  }
}

TEST_CASE("insertion preconditions") {
  CHECK_THROWS_AS(insert(Filling({{2}, {1}}), 3), std::invalid_argument);
  CHECK_THROWS_AS(insert(Filling(std::vector<std::vector<int>>{{1}}), 0), std::invalid_argument);
}

TEST_CASE("virtuous cells") {
  const Filling t({{2, 8}, {3, 4, 5}, {6, 7}});
  CHECK(is_virtuous(t, {2, 1}));
  // 5 ends the middle row in column 3; nothing lies below it in that column
  // and no lower row ends in column 3.
  CHECK(is_virtuous(t, {3, 2}));
  // 7 ends the top row in column 2, but the bottom row also ends there.
  CHECK_FALSE(is_virtuous(t, {2, 3}));
  // not at the end of its row
  CHECK_FALSE(is_virtuous(t, {2, 2}));
  CHECK(is_virtuous(Filling(std::vector<std::vector<int>>{{3}}), {1, 1}));
  CHECK_THROWS_AS(is_virtuous(t, {4, 2}), std::invalid_argument);
}

TEST_CASE("rapture with evictions") {
  const RaptureResult r = rapture(Filling({{2, 8}, {3, 4, 5}, {6, 7}}), {2, 1});
  CHECK(r.tableau == Filling({{2}, {3, 4, 7}, {6, 8}}));
  CHECK(r.output == 5);
  CHECK(r.escape_route == std::vector<Cell>{{2, 1}, {2, 3}, {3, 2}});
}

TEST_CASE("rapture closing a row") {
  const RaptureResult r = rapture(Filling({{1, 2}, {3}, {4, 5}}), {1, 2});
  CHECK(r.tableau == Filling({{1, 3}, {4, 5}}));
  CHECK(r.output == 2);
}

TEST_CASE("rapture of a sole entry and of the other virtuous cell") {
  const RaptureResult r = rapture(Filling(std::vector<std::vector<int>>{{6}}), {1, 1});
  CHECK(r.tableau.empty());
  CHECK(r.output == 6);
  const Filling t({{2, 8}, {3, 4, 5}, {6, 7}});
  const RaptureResult s = rapture(t, {3, 2});
  CHECK(s.output == 5);
  CHECK(insert(s.tableau, 5).tableau == t);
}

TEST_CASE("rapture preconditions") {
  const Filling t({{2, 8}, {3, 4, 5}, {6, 7}});
  CHECK_THROWS_AS(rapture(t, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(rapture(Filling({{2}, {1}}), {1, 2}), std::invalid_argument);
}

TEST_CASE("word insertion") {
  const std::vector<int> w{4, 6, 9, 2, 8, 1, 3, 5, 7};
  const RecordingPair pq = insert_word(w);
  CHECK(pq.p == Filling({{1, 9}, {2, 3, 5, 7}, {4, 6, 8}}));
  CHECK(pq.q == Filling({{6, 7}, {4, 5, 8, 9}, {1, 2, 3}}));
  CHECK(uninsert(pq.p, pq.q) == w);

  const std::vector<int> two{2, 1};
  const RecordingPair r = insert_word(two);
  CHECK(r.p == Filling({{1}, {2}}));
  CHECK(r.q == Filling({{2}, {1}}));
  CHECK(uninsert(r.p, r.q) == two);

  const std::vector<int> one{1};
  CHECK(insert_word(one) == RecordingPair{Filling(std::vector<std::vector<int>>{{1}}), Filling(std::vector<std::vector<int>>{{1}})});
  CHECK(uninsert(Filling(std::vector<std::vector<int>>{{1}}), Filling(std::vector<std::vector<int>>{{1}})) == one);

  const std::vector<int> dup{1, 2, 1};
  CHECK_THROWS_AS(insert_word(dup), std::invalid_argument);
}

TEST_CASE("uninsert preconditions") {
  CHECK_THROWS_AS(uninsert(Filling(std::vector<std::vector<int>>{{1, 2}}), Filling({{1}, {2}})), std::invalid_argument);
  // same shape but the recording filling has a decreasing first column
  CHECK_THROWS_AS(uninsert(Filling({{1}, {2}}), Filling({{1}, {2}})), std::invalid_argument);
}

TEST_CASE("inverse pair on small tableaux with traced invariants") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : compositions_of(n)) {
      for (const auto& u : enumerate_standard(a, StandardKind::Immaculate)) {
        Filling p;
        for (int k : immaculate_reading_word(u)) {
          const InsertionResult ins = insert(p, k);
          REQUIRE(is_ssyct(ins.tableau));
          CHECK(ins.bumping_path.back() == ins.new_cell);
          CHECK(is_virtuous(ins.tableau, ins.new_cell));
          // at most one bump per row, bumped values strictly increase
          std::set<int> rows;
          Entry last(0);
          for (const auto& s : ins.trace) {
            if (s.action != TraceAction::Bump) continue;
            CHECK(rows.insert(s.cell.row).second);
            CHECK(last < s.occupant);
            last = s.occupant;
          }
          const RaptureResult rap = rapture(ins.tableau, ins.new_cell);
          CHECK(rap.tableau == p);
          CHECK(rap.output == k);
          CHECK(std::equal(rap.escape_route.begin(), rap.escape_route.end(), ins.bumping_path.rbegin(),
                           ins.bumping_path.rend()));
          Entry prev = Entry::infinity();
          for (const auto& s : rap.trace) {
            if (s.action != TraceAction::Evict) continue;
            CHECK(s.occupant < prev);
            prev = s.occupant;
          }
          p = ins.tableau;
        }
      }
    }
  }
}

TEST_CASE("recording tableaux and round trips") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : compositions_of(n)) {
      for (const auto& u : enumerate_standard(a, StandardKind::Immaculate)) {
        const auto w = immaculate_reading_word(u);
        const RecordingPair pq = insert_word(w);
        CHECK(is_dirt(pq.q));
        CHECK(row_strip_shape(pq.q) == reverse(a));
        CHECK(is_standard(pq.p));
        CHECK(is_ssyct(pq.p));
        CHECK(uninsert(pq.p, pq.q) == w);
      }
    }
  }
}

TEST_CASE("every enumerated (SYCT, DIRT) pair round-trips") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& shape : compositions_of(n)) {
      const auto pees = enumerate_standard(shape, StandardKind::Syct);
      for (const auto& strips : compositions_of(n, shape.length())) {
        for (const auto& q : enumerate_dirts(shape, strips)) {
          for (const auto& p : pees) {
            const auto w = uninsert(p, q);
            CHECK(insert_word(w) == RecordingPair{p, q});
          }
        }
      }
    }
  }
}
