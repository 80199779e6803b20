#pragma once

#include <optional>

#include "ntdice/dice.hpp"

namespace ntdice {

/// Lexicographically first (in the fixed search order) canonical balanced
/// non-transitive triple of m-sided dice, named A, B, C. The victory count
/// V is the smallest feasible value >= floor(m^2/2)+1 unless
/// target_victories pins it. Throws std::invalid_argument when a pinned
/// target admits no solution.
DiceSet base_triple(int m, std::optional<int> target_victories = std::nullopt);

/// Appends one die to a canonical balanced non-transitive set, preserving
/// the victorious probability: copy the last die shifted down by 1/2, then
/// raise the k0 = m(m+1)/2 - V smallest entries across their partner
/// label, then renormalize to 1..(n+1)m.
DiceSet extend_cycle(const DiceSet& s);

/// base_triple(m) followed by n-3 extensions; an explicit base (e.g. a
/// published triple) may be supplied instead of the searched one.
DiceSet build_cycle_set(int n, int m,
                        const std::optional<DiceSet>& base = std::nullopt);

}  // namespace ntdice
