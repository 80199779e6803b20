#include "ntdice/oracle.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace ntdice {

namespace {

// One partial assignment of the labels 3m..1 to the dice A, B, C.
// v[i] = victories of die i over die (i+1) mod 3 among placed labels.
struct TripleState {
  std::array<std::vector<std::int64_t>, 3> dice;
  std::array<std::int64_t, 3> v{0, 0, 0};
};

struct TripleEnumerator {
  int m;
  std::optional<int> target;
  std::optional<int> max_results;

  bool admissible(const TripleState& st) const {
    // Balance cannot be decided until the end; prune only on the hard
    // bounds so the enumeration stays a trustworthy oracle.
    const std::int64_t cap =
        target ? *target : static_cast<std::int64_t>(m) * m;
    for (int i = 0; i < 3; ++i) {
      const auto open = m - static_cast<std::int64_t>(st.dice[(i + 1) % 3].size());
      if (st.v[i] > cap || st.v[i] + open * m < m * m / 2 + 1) return false;
    }
    return true;
  }

  bool accept(const TripleState& st) const {
    if (st.v[0] != st.v[1] || st.v[1] != st.v[2]) return false;  // balanced
    if (2 * st.v[0] <= m * m) return false;                      // non-transitive
    if (target && st.v[0] != *target) return false;
    return true;
  }

  void dfs(TripleState& st, int label, std::vector<DiceSet>& out) const {
    if (max_results && static_cast<int>(out.size()) >= *max_results) return;
    if (label == 0) {
      if (accept(st)) out.push_back(to_set(st));
      return;
    }
    for (int d = 0; d < 3; ++d) {
      if (static_cast<int>(st.dice[d].size()) == m) continue;
      const int pred = (d + 2) % 3;
      const auto gain = static_cast<std::int64_t>(st.dice[pred].size());
      st.v[pred] += gain;
      st.dice[d].push_back(label);
      if (admissible(st)) dfs(st, label - 1, out);
      st.dice[d].pop_back();
      st.v[pred] -= gain;
    }
  }

  DiceSet to_set(const TripleState& st) const {
    const char* names[] = {"A", "B", "C"};
    std::vector<Die> dice;
    for (int d = 0; d < 3; ++d) {
      std::vector<Rational> faces(st.dice[d].begin(), st.dice[d].end());
      dice.emplace_back(names[d], std::move(faces));
    }
    return DiceSet(std::move(dice));
  }

  // All admissible states after placing the top `depth` labels, in
  // lexicographic (die A < B < C) order.
  std::vector<TripleState> prefixes(int depth) const {
    std::vector<TripleState> out{TripleState{}};
    for (int step = 0; step < depth; ++step) {
      const int label = 3 * m - step;
      std::vector<TripleState> next;
      for (const TripleState& st : out) {
        for (int d = 0; d < 3; ++d) {
          if (static_cast<int>(st.dice[d].size()) == m) continue;
          TripleState cur = st;
          cur.v[(d + 2) % 3] += static_cast<std::int64_t>(cur.dice[(d + 2) % 3].size());
          cur.dice[d].push_back(label);
          if (admissible(cur)) next.push_back(std::move(cur));
        }
      }
      out = std::move(next);
    }
    return out;
  }
};

void check_guard(int m, const EnumerateOptions& opts) {
  if (m < 3) throw std::invalid_argument("enumerate_balanced_triples: m must be >= 3");
  if (m > 6 && !opts.allow_expensive)
    throw std::invalid_argument(
        "enumerate_balanced_triples: m > 6 is expensive; pass allow_expensive");
}

}  // namespace

std::vector<DiceSet> enumerate_balanced_triples_serial(
    int m, const EnumerateOptions& opts) {
  check_guard(m, opts);
  TripleEnumerator e{m, opts.target_victories, opts.max_results};
  TripleState st;
  std::vector<DiceSet> out;
  e.dfs(st, 3 * m, out);
  return out;
}

std::vector<DiceSet> enumerate_balanced_triples(int m,
                                                const EnumerateOptions& opts) {
  check_guard(m, opts);
  TripleEnumerator e{m, opts.target_victories, std::nullopt};
  const int depth = std::min(6, 3 * m);
  std::vector<TripleState> starts = e.prefixes(depth);
  std::vector<std::vector<DiceSet>> buckets(starts.size());

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(starts.size()); ++i) {
    e.dfs(starts[i], 3 * m - depth, buckets[i]);
  }

  // Prefixes are in lexicographic order, so concatenation preserves the
  // serial output order regardless of the schedule.
  std::vector<DiceSet> out;
  for (auto& b : buckets) {
    for (auto& s : b) {
      if (opts.max_results && static_cast<int>(out.size()) >= *opts.max_results)
        return out;
      out.push_back(std::move(s));
    }
  }
  return out;
}

McEstimate mc_estimate(const Die& a, const Die& b, std::int64_t rolls,
                       std::uint64_t seed) {
  if (rolls < 1) throw std::invalid_argument("mc_estimate: rolls must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> face_a(0, a.sides() - 1);
  std::uniform_int_distribution<int> face_b(0, b.sides() - 1);
  McEstimate est;
  est.rolls = rolls;
  for (std::int64_t i = 0; i < rolls; ++i) {
    const Rational& x = a.faces[face_a(rng)];
    const Rational& y = b.faces[face_b(rng)];
    if (y < x) ++est.wins;
  }
  return est;
}

bool brute_force_connectable(const Digraph& g, bool allow_expensive) {
  const int n = g.vertex_count();
  if (n == 1) return true;
  if (n == 2) return false;  // mirrors the main predicate's fiat
  if (n > 7 && !allow_expensive)
    throw std::invalid_argument("brute_force_connectable: |V| > 7 is expensive");

  std::vector<std::pair<int, int>> missing;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_arc(u, v) && !g.has_arc(v, u)) missing.emplace_back(u, v);

  // Strongness over the base arcs plus one orientation of each missing pair.
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [u, v] : g.arcs()) adj[u * n + v] = 1;

  const std::uint64_t total = 1ull << missing.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::size_t i = 0; i < missing.size(); ++i) {
      const auto [u, v] = missing[i];
      const bool fwd = (bits >> i) & 1;
      adj[u * n + v] = fwd;
      adj[v * n + u] = !fwd;
    }
    // is the oriented digraph strong? (DFS from 0 both ways)
    auto reaches_all = [&](bool forward) {
      std::vector<char> seen(n, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int count = 1;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
          const bool arc = forward ? adj[u * n + v] : adj[v * n + u];
          if (arc && !seen[v]) {
            seen[v] = 1;
            ++count;
            stack.push_back(v);
          }
        }
      }
      return count == n;
    };
    if (reaches_all(true) && reaches_all(false)) return true;
  }
  return false;
}

}  // namespace ntdice
