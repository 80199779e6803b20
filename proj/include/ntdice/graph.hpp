#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ntdice {

/// Directed graph on named vertices. Vertex iteration order is declaration
/// order; every operation on the graph is deterministic.
class Digraph {
 public:
  Digraph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& arcs);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  int index(const std::string& name) const;  // throws if unknown
  bool has_arc(int u, int v) const { return adj_[u * vertex_count() + v]; }
  bool has_arc(const std::string& u, const std::string& v) const;
  /// Arcs sorted by (tail index, head index).
  std::vector<std::pair<int, int>> arcs() const;
  int arc_count() const { return arc_count_; }

 private:
  std::vector<std::string> names_;
  std::vector<char> adj_;
  int arc_count_ = 0;
};

/// A digraph with exactly one arc per unordered vertex pair.
class Tournament {
 public:
  explicit Tournament(Digraph g);  // throws if not a tournament
  const Digraph& graph() const { return g_; }

 private:
  Digraph g_;
};

/// Strong components of a digraph plus the acyclic quotient on them.
/// Components are listed in topological order of the quotient, dominant
/// (source) side first; for a tournament input the quotient is a
/// transitive tournament, i.e. a total order.
struct Condensation {
  std::vector<std::vector<int>> components;  // vertex indices, declaration order
  std::vector<int> component_of;             // vertex -> component index
  std::vector<std::pair<int, int>> dag_arcs;  // deduplicated, sorted
};

Condensation strong_components(const Digraph& g);

bool is_strong(const Digraph& g);

/// A directed Hamilton cycle of a strong tournament, |V| >= 3, built by
/// cycle expansion: start from a 3-cycle and repeatedly absorb an outside
/// vertex, either by insertion between consecutive cycle vertices or by
/// splicing through a dominated/dominating pair. Deterministic.
/// Throws std::invalid_argument naming a violating component when t is
/// not strong.
std::vector<int> hamilton_cycle(const Tournament& t);

/// True iff the missing adjacencies of g can be added and oriented so the
/// result is strong. |V| = 1 -> true; |V| = 2 -> false (no strong
/// 2-tournament exists); otherwise decided by the merge-quotient
/// algorithm (no complete directed cut).
bool is_strongly_connectable(const Digraph& g);

/// When is_strongly_connectable(g) is false and |V| >= 2, a witnessing
/// complete directed cut (all arcs point from .first into .second).
std::pair<std::vector<int>, std::vector<int>> complete_directed_cut(const Digraph& g);

/// Uniform random tournament on vertices v1..vn; deterministic for fixed
/// (n, seed).
Tournament random_tournament(int n, std::uint64_t seed);

/// As above but resampled until strong. n = 1 or n >= 3.
Tournament random_strong_tournament(int n, std::uint64_t seed);

}  // namespace ntdice
