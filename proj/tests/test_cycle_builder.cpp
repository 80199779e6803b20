#include "doctest.h"
#include "ntdice/cycle_builder.hpp"
#include "ntdice/dice.hpp"

using namespace ntdice;

namespace {

std::vector<Rational> faces(std::vector<std::int64_t> v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("base_triple(3) is the classic triple at 5/9") {
  const DiceSet s = base_triple(3);
  CHECK(s.dice[0].faces == faces({9, 5, 1}));
  CHECK(s.dice[1].faces == faces({8, 4, 3}));
  CHECK(s.dice[2].faces == faces({7, 6, 2}));
  CHECK(*is_balanced(s) == Probability{5, 9});
  CHECK(is_non_transitive(s));
}

TEST_CASE("base_triple minimal victory counts") {
  for (int m = 3; m <= 8; ++m) {
    const DiceSet s = base_triple(m);
    CHECK(s.canonical);
    CHECK(is_non_transitive(s));
    const auto p = is_balanced(s);
    REQUIRE(p);
    // Minimal dominance numerator is feasible for every m in range.
    CHECK(p->num == m * m / 2 + 1);
  }
}

TEST_CASE("base_triple with pinned target") {
  const DiceSet s = base_triple(4, 9);
  CHECK(*is_balanced(s) == Probability{9, 16});
  // No balanced non-transitive triple at 6/9 (exhaustive fact).
  CHECK_THROWS_AS(base_triple(3, 6), std::invalid_argument);
  CHECK_THROWS_AS(base_triple(3, 4), std::invalid_argument);  // below range
  CHECK_THROWS_AS(base_triple(2), std::invalid_argument);
}

TEST_CASE("extend_cycle reproduces the worked tables") {
  const DiceSet four = extend_cycle(base_triple(3));
  CHECK(four.dice[0].faces == faces({12, 6, 1}));
  CHECK(four.dice[1].faces == faces({11, 5, 4}));
  CHECK(four.dice[2].faces == faces({10, 8, 2}));
  CHECK(four.dice[3].faces == faces({9, 7, 3}));

  const DiceSet five = extend_cycle(four);
  CHECK(five.dice[0].faces == faces({15, 7, 1}));
  CHECK(five.dice[1].faces == faces({14, 6, 5}));
  CHECK(five.dice[2].faces == faces({13, 10, 2}));
  CHECK(five.dice[3].faces == faces({12, 9, 3}));
  CHECK(five.dice[4].faces == faces({11, 8, 4}));
}

TEST_CASE("extend_cycle preserves the victorious probability") {
  for (int m = 3; m <= 6; ++m) {
    DiceSet s = base_triple(m);
    const Probability p = *is_balanced(s);
    for (int n = 4; n <= 7; ++n) {
      s = extend_cycle(s);
      REQUIRE(is_balanced(s));
      CHECK(*is_balanced(s) == p);
      CHECK(is_non_transitive(s));
      CHECK(s.canonical);
    }
  }
}

TEST_CASE("extend_cycle input validation") {
  // Not balanced: a totally ordered set.
  std::vector<Die> dice;
  dice.emplace_back("A", faces({9, 8, 7}));
  dice.emplace_back("B", faces({6, 5, 4}));
  dice.emplace_back("C", faces({3, 2, 1}));
  CHECK_THROWS_AS(extend_cycle(DiceSet(std::move(dice))), std::invalid_argument);
}

TEST_CASE("build_cycle_set") {
  const DiceSet s33 = build_cycle_set(3, 3);
  CHECK(*is_balanced(s33) == Probability{5, 9});

  const DiceSet s44 = build_cycle_set(4, 4);
  CHECK(s44.canonical);
  CHECK(is_non_transitive(s44));
  REQUIRE(is_balanced(s44));
  CHECK(s44.size() == 4);
  CHECK(s44.sides() == 4);

  CHECK_THROWS_AS(build_cycle_set(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_cycle_set(3, 2), std::invalid_argument);
}

TEST_CASE("build_cycle_set accepts an explicit base") {
  std::vector<Die> dice;
  dice.emplace_back("A", faces({9, 5, 1}));
  dice.emplace_back("B", faces({8, 4, 3}));
  dice.emplace_back("C", faces({7, 6, 2}));
  const DiceSet out = build_cycle_set(4, 3, DiceSet(std::move(dice)));
  CHECK(out.dice[0].faces == faces({12, 6, 1}));
}

TEST_CASE("builder grid sample stays canonical, balanced, non-transitive") {
  for (int n : {3, 5, 8}) {
    for (int m : {3, 5, 8}) {
      const DiceSet s = build_cycle_set(n, m);
      CHECK(s.canonical);
      CHECK(is_non_transitive(s));
      CHECK(is_balanced(s));
      // k0 stays within 1..m-1 for the minimal-V base, so the raise step
      // never runs dry.
      const auto p = *is_balanced(s);
      const std::int64_t k0 = static_cast<std::int64_t>(m) * (m + 1) / 2 - p.num;
      CHECK(k0 >= 0);
      CHECK(k0 <= m - 1);
    }
  }
}
