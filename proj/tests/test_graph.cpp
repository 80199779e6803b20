#include <algorithm>
#include <set>

#include "doctest.h"
#include "ntdice/graph.hpp"

using namespace ntdice;

namespace {

Digraph three_cycle() {
  return Digraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

Digraph transitive3() {
  return Digraph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
}

// The five-vertex tournament of the worked example: Hamilton cycle
// A->B->C->D->E->A plus chords A->C, B->D, B->E, C->E, A->D.
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

bool is_hamilton_cycle(const Digraph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.vertex_count()) return false;
  std::set<int> seen(order.begin(), order.end());
  if (static_cast<int>(seen.size()) != g.vertex_count()) return false;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!g.has_arc(order[i], order[(i + 1) % order.size()])) return false;
  return true;
}

}  // namespace

TEST_CASE("digraph basics") {
  const Digraph g = transitive3();
  CHECK(g.vertex_count() == 3);
  CHECK(g.has_arc("a", "b"));
  CHECK_FALSE(g.has_arc("b", "a"));
  CHECK_THROWS_AS(g.index("z"), std::invalid_argument);
  CHECK_THROWS_AS(Digraph({"a"}, {{"a", "a"}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph({"a", "a"}, {}), std::invalid_argument);
}

TEST_CASE("tournament validation") {
  CHECK_NOTHROW(Tournament(three_cycle()));
  CHECK_THROWS_AS(Tournament(Digraph({"a", "b", "c"}, {{"a", "b"}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      Tournament(Digraph({"a", "b"}, {{"a", "b"}, {"b", "a"}})),
      std::invalid_argument);
}

TEST_CASE("strong_components") {
  const Condensation one = strong_components(three_cycle());
  REQUIRE(one.components.size() == 1);
  CHECK(one.components[0].size() == 3);

  const Condensation chain = strong_components(transitive3());
  REQUIRE(chain.components.size() == 3);
  // Topological order: a dominates b dominates c.
  CHECK(chain.components[0] == std::vector<int>{0});
  CHECK(chain.components[1] == std::vector<int>{1});
  CHECK(chain.components[2] == std::vector<int>{2});
  CHECK(chain.dag_arcs ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  CHECK(strong_components(example5().graph()).components.size() == 1);
}

TEST_CASE("condensation is acyclic, and a total order for tournaments") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Tournament t = random_tournament(6, seed);
    const Condensation c = strong_components(t.graph());
    for (const auto& [u, v] : c.dag_arcs) CHECK(u < v);  // topological indices
    // Tournament condensation is transitive: every earlier component
    // dominates every later one.
    const int k = static_cast<int>(c.components.size());
    std::set<std::pair<int, int>> arcs(c.dag_arcs.begin(), c.dag_arcs.end());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) CHECK(arcs.count({i, j}) == 1);
  }
}

TEST_CASE("is_strong") {
  CHECK(is_strong(three_cycle()));
  CHECK_FALSE(is_strong(Digraph({"a", "b"}, {{"a", "b"}})));
  CHECK(is_strong(example5().graph()));
}

TEST_CASE("hamilton_cycle on known graphs") {
  const std::vector<int> tri = hamilton_cycle(Tournament(three_cycle()));
  CHECK(is_hamilton_cycle(three_cycle(), tri));

  const Tournament ex = example5();
  const std::vector<int> five = hamilton_cycle(ex);
  CHECK(is_hamilton_cycle(ex.graph(), five));

  CHECK_THROWS_AS(hamilton_cycle(Tournament(transitive3())),
                  std::invalid_argument);
}

TEST_CASE("hamilton_cycle property over random strong tournaments") {
  for (int n = 3; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Tournament t = random_strong_tournament(n, seed);
      CHECK(is_hamilton_cycle(t.graph(), hamilton_cycle(t)));
    }
  }
}

TEST_CASE("hamilton_cycle is deterministic") {
  const Tournament t = random_strong_tournament(7, 123);
  CHECK(hamilton_cycle(t) == hamilton_cycle(t));
}

TEST_CASE("is_strongly_connectable") {
  CHECK(is_strongly_connectable(three_cycle()));
  CHECK_FALSE(is_strongly_connectable(transitive3()));
  CHECK(is_strongly_connectable(Digraph({"a", "b", "c"}, {})));
  CHECK(is_strongly_connectable(Digraph({"a"}, {})));
  CHECK_FALSE(is_strongly_connectable(Digraph({"a", "b"}, {{"a", "b"}})));
  CHECK_FALSE(is_strongly_connectable(Digraph({"a", "b"}, {})));
}

TEST_CASE("complete_directed_cut witnesses the failure") {
  const auto cut = complete_directed_cut(transitive3());
  CHECK(cut.first == std::vector<int>{0});
  CHECK(cut.second == std::vector<int>{1, 2});
  CHECK_THROWS_AS(complete_directed_cut(three_cycle()), std::invalid_argument);
}

TEST_CASE("random tournaments are deterministic and well-formed") {
  const Tournament a = random_tournament(6, 99);
  const Tournament b = random_tournament(6, 99);
  CHECK(a.graph().arcs() == b.graph().arcs());

  CHECK(random_tournament(1, 0).graph().vertex_count() == 1);
  CHECK(random_strong_tournament(1, 0).graph().vertex_count() == 1);
  CHECK_THROWS_AS(random_strong_tournament(2, 0), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(is_strong(random_strong_tournament(6, seed).graph()));
}
