#include <set>

#include "doctest.h"
#include "ntdice/cycle_builder.hpp"
#include "ntdice/tournament_builder.hpp"

using namespace ntdice;

namespace {

std::vector<Rational> faces(std::vector<std::int64_t> v) {
  return {v.begin(), v.end()};
}

Tournament example5() {
  return Tournament(Digraph({"A", "B", "C", "D", "E"},
                            {{"A", "B"},
                             {"B", "C"},
                             {"C", "D"},
                             {"D", "E"},
                             {"E", "A"},
                             {"A", "C"},
                             {"B", "D"},
                             {"B", "E"},
                             {"C", "E"},
                             {"A", "D"}}));
}

const std::vector<std::pair<std::string, std::string>> kPaperOrder = {
    {"A", "C"}, {"B", "D"}, {"B", "E"}, {"C", "E"}, {"A", "D"}};

}  // namespace

TEST_CASE("shift_labels") {
  const DiceSet five = build_cycle_set(5, 3);
  const DiceSet shifted = shift_labels(five, 10);
  CHECK(shifted.dice[0].faces == faces({25, 17, 11}));
  CHECK(shifted.dice[1].faces == faces({24, 16, 15}));
  CHECK(shifted.dice[2].faces == faces({23, 20, 12}));
  CHECK(shifted.dice[3].faces == faces({22, 19, 13}));
  CHECK(shifted.dice[4].faces == faces({21, 18, 14}));
  CHECK(victory_matrix(shifted).counts == victory_matrix(five).counts);

  const DiceSet same = shift_labels(five, 0);
  CHECK(same.dice[0].faces == five.dice[0].faces);

  const DiceSet one(std::vector<Die>{Die("X", faces({3, 2, 1}))});
  CHECK(shift_labels(one, 2).dice[0].faces == faces({5, 4, 3}));
  CHECK_THROWS_AS(shift_labels(five, -1), std::invalid_argument);
}

TEST_CASE("chord plan label schedule") {
  const ChordPlan t1 = ChordPlan::for_stage(5, 1);
  CHECK(t1.above == std::pair<int, int>{26, 27});
  CHECK(t1.below == std::pair<int, int>{9, 10});
  const ChordPlan t2 = ChordPlan::for_stage(5, 2);
  CHECK(t2.above == std::pair<int, int>{28, 29});
  CHECK(t2.below == std::pair<int, int>{7, 8});

  // Stages tile the above/below ranges exactly.
  const int n = 7, stages = (n * n - 3 * n) / 2;
  std::set<int> labels;
  for (int t = 1; t <= stages; ++t) {
    const ChordPlan p = ChordPlan::for_stage(n, t);
    labels.insert(p.above.first);
    labels.insert(p.above.second);
    labels.insert(p.below.first);
    labels.insert(p.below.second);
  }
  CHECK(static_cast<int>(labels.size()) == 2 * (n * n - 3 * n));
  CHECK(*labels.begin() == 1);
  CHECK(*labels.rbegin() == n * (2 * n - 3));
}

TEST_CASE("add_chord stage bookkeeping matches the worked example") {
  StrongTournamentBuild build(example5());
  CHECK(build.cycle() ==
        std::vector<std::string>{"A", "B", "C", "D", "E"});

  build.add_chord("A", "C");
  // A had 4 base victories over C, so it takes the larger below label.
  CHECK(build.die("A").faces == faces({27, 25, 17, 11, 10}));
  CHECK(build.die("C").faces == faces({26, 23, 20, 12, 9}));
  CHECK(probability(build.die("A"), build.die("C")) == Probability{13, 25});

  build.add_chord("B", "D");
  CHECK(build.die("B").faces == faces({29, 24, 16, 15, 7}));
  CHECK(build.die("D").faces == faces({28, 22, 19, 13, 8}));

  CHECK_THROWS_AS(build.add_chord("A", "C"), std::invalid_argument);  // spent
  CHECK_THROWS_AS(build.add_chord("A", "B"), std::invalid_argument);  // cycle arc
  CHECK_THROWS_AS(build.finish(), std::invalid_argument);  // chords remain
}

TEST_CASE("build_strong_tournament_dice reproduces the paper table") {
  const TournamentDice result =
      build_strong_tournament_dice(example5(), kPaperOrder);
  CHECK(result.dice.dice[0].faces == faces({35, 27, 25, 17, 11, 10, 2}));
  CHECK(result.dice.dice[1].faces == faces({31, 29, 24, 16, 15, 7, 5}));
  CHECK(result.dice.dice[2].faces == faces({33, 26, 23, 20, 12, 9, 3}));
  CHECK(result.dice.dice[3].faces == faces({34, 28, 22, 19, 13, 8, 1}));
  CHECK(result.dice.dice[4].faces == faces({32, 30, 21, 18, 14, 6, 4}));
  CHECK(result.dice.canonical);
  CHECK(result.report.realized);
  REQUIRE(is_balanced(result.dice));
  CHECK(*is_balanced(result.dice) == Probability{25, 49});
}

TEST_CASE("settled arcs stay dominant after every stage") {
  StrongTournamentBuild build(example5());
  std::vector<std::pair<std::string, std::string>> settled;
  for (int i = 0; i < 5; ++i)
    settled.emplace_back(build.cycle()[i], build.cycle()[(i + 1) % 5]);
  for (const auto& [w, l] : kPaperOrder) {
    build.add_chord(w, l);
    settled.emplace_back(w, l);
    for (const auto& [sw, sl] : settled) {
      const Die& a = build.die(sw);
      const Die& b = build.die(sl);
      CHECK(2 * victories(a, b) >
            static_cast<std::int64_t>(a.sides()) * b.sides());
    }
  }
}

TEST_CASE("n=3 strong tournament is just the cycle set") {
  const Tournament tri(
      Digraph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"z", "x"}}));
  const TournamentDice result = build_strong_tournament_dice(tri);
  CHECK(result.dice.sides() == 3);
  CHECK(result.report.realized);
  CHECK(*is_balanced(result.dice) == Probability{5, 9});
}

TEST_CASE("chord order must be a permutation of the chord set") {
  auto order = kPaperOrder;
  order.pop_back();
  CHECK_THROWS_AS(build_strong_tournament_dice(example5(), order),
                  std::invalid_argument);
  order = kPaperOrder;
  order[0] = {"C", "A"};  // reversed arc is not a chord
  CHECK_THROWS_AS(build_strong_tournament_dice(example5(), order),
                  std::invalid_argument);
}

TEST_CASE("blow_up") {
  const DiceSet tri = build_cycle_set(3, 3);
  const DiceSet same = blow_up(tri, 1);
  CHECK(same.dice[0].faces == tri.dice[0].faces);

  const DiceSet doubled = blow_up(tri, 2);
  CHECK(doubled.sides() == 6);
  CHECK(doubled.canonical);
  const VictoryMatrix before = victory_matrix(tri);
  const VictoryMatrix after = victory_matrix(doubled);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(after.at(i, j) == 4 * before.at(i, j));
  CHECK(*is_balanced(doubled) == Probability{5, 9});

  const DiceSet one(std::vector<Die>{Die("X", faces({1}))});
  CHECK(blow_up(one, 3).dice[0].faces == faces({3, 2, 1}));
  CHECK_THROWS_AS(blow_up(tri, 0), std::invalid_argument);
}

TEST_CASE("build_tournament_dice on a transitive tournament") {
  const Tournament t(
      Digraph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}));
  const TournamentDice result = build_tournament_dice(t);
  CHECK(result.dice.sides() == 1);
  CHECK(result.dice.by_name("a").faces == faces({3}));
  CHECK(result.dice.by_name("b").faces == faces({2}));
  CHECK(result.dice.by_name("c").faces == faces({1}));
  CHECK(result.report.realized);
}

TEST_CASE("build_tournament_dice on a strong tournament delegates") {
  const Tournament tri(
      Digraph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"z", "x"}}));
  const TournamentDice result = build_tournament_dice(tri);
  CHECK(result.dice.sides() == 3);
  CHECK(result.report.realized);
}

TEST_CASE("cycle component dominating a sink vertex") {
  const Tournament t(Digraph({"a", "b", "c", "s"},
                             {{"a", "b"},
                              {"b", "c"},
                              {"c", "a"},
                              {"a", "s"},
                              {"b", "s"},
                              {"c", "s"}}));
  const TournamentDice result = build_tournament_dice(t);
  CHECK(result.report.realized);
  CHECK(result.dice.sides() == 3);
  CHECK(result.dice.by_name("s").faces == faces({3, 2, 1}));
  // Every cross-component probability is exactly 1.
  for (const std::string v : {"a", "b", "c"}) {
    CHECK(probability(result.dice.by_name(v), result.dice.by_name("s")) ==
          Probability{1, 1});
  }
  // Non-strong input is never globally balanced along any die order: the
  // cross-component edge is at probability 1, the internal ones are not.
  CHECK(probability(result.dice.by_name("a"), result.dice.by_name("b")).num <
        9);
}
