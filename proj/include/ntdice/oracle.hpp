#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ntdice/dice.hpp"
#include "ntdice/graph.hpp"

namespace ntdice {

struct EnumerateOptions {
  std::optional<int> max_results;
  std::optional<int> target_victories;  // keep only sets with this cycle count
  bool allow_expensive = false;         // lifts the m <= 6 cost guard
};

/// All canonical balanced non-transitive 3-dice m-sided sets, dice ordered
/// as the cycle, in lexicographic order of the label-to-die assignment
/// (labels 3m..1, dice A < B < C). Parallelized over search subtrees; the
/// result order is schedule-independent.
std::vector<DiceSet> enumerate_balanced_triples(int m,
                                                const EnumerateOptions& opts = {});

/// Serial reference implementation of the same enumeration.
std::vector<DiceSet> enumerate_balanced_triples_serial(
    int m, const EnumerateOptions& opts = {});

struct McEstimate {
  std::int64_t wins = 0;
  std::int64_t rolls = 0;
  double estimate() const { return static_cast<double>(wins) / static_cast<double>(rolls); }
};

/// Monte Carlo estimate of P(a beats b) over `rolls` independent uniform
/// face draws per die; deterministic for a fixed seed.
McEstimate mc_estimate(const Die& a, const Die& b, std::int64_t rolls,
                       std::uint64_t seed);

/// Ground truth for is_strongly_connectable: tries every orientation of
/// the missing adjacencies and checks for a strong result. |V| <= 7
/// unless allow_expensive. |V| = 2 -> false, matching the main predicate.
bool brute_force_connectable(const Digraph& g, bool allow_expensive = false);

}  // namespace ntdice
