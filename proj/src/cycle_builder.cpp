#include "ntdice/cycle_builder.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace ntdice {

namespace {

// Depth-first assignment of labels 3m..1 to the three dice. Die try order
// is A, C, B; this fixed order makes the m = 3 result the classic
// {9,5,1} {8,4,3} {7,6,2} triple. v[i] tracks victories of die i over die
// (i+1) mod 3; placing a label on die d credits d's cycle predecessor.
struct TripleSearch {
  int m;
  int target;
  std::array<std::vector<std::int64_t>, 3> dice;
  std::array<std::int64_t, 3> v{0, 0, 0};

  explicit TripleSearch(int m_, int target_) : m(m_), target(target_) {}

  bool feasible() const {
    for (int i = 0; i < 3; ++i) {
      // Upper bound on future gains for edge i -> i+1: every unplaced slot
      // of die i+1 loses to at most m faces of die i.
      const auto open = m - static_cast<std::int64_t>(dice[(i + 1) % 3].size());
      if (v[i] > target || v[i] + open * m < target) return false;
    }
    return true;
  }

  bool dfs(int label) {
    if (label == 0) return v[0] == target && v[1] == target && v[2] == target;
    for (int d : {0, 2, 1}) {
      if (static_cast<int>(dice[d].size()) == m) continue;
      const int pred = (d + 2) % 3;
      const auto gain = static_cast<std::int64_t>(dice[pred].size());
      v[pred] += gain;
      dice[d].push_back(label);
      if (feasible() && dfs(label - 1)) return true;
      dice[d].pop_back();
      v[pred] -= gain;
    }
    return false;
  }
};

std::int64_t cycle_victories(const DiceSet& s) {
  return victories(s.dice[s.size() - 1], s.dice[0]);
}

}  // namespace

DiceSet base_triple(int m, std::optional<int> target_victories) {
  if (m < 3) throw std::invalid_argument("base_triple: m must be >= 3");
  const int v_min = m * m / 2 + 1;
  const int v_max = m * (m + 1) / 2;
  if (target_victories) {
    if (*target_victories < v_min || *target_victories > v_max)
      throw std::invalid_argument("base_triple: target victories out of range");
  }
  const int lo = target_victories.value_or(v_min);
  const int hi = target_victories.value_or(v_max);
  for (int target = lo; target <= hi; ++target) {
    TripleSearch search(m, target);
    if (search.dfs(3 * m)) {
      std::vector<Die> dice;
      const char* names[] = {"A", "B", "C"};
      for (int d = 0; d < 3; ++d) {
        std::vector<Rational> faces(search.dice[d].begin(), search.dice[d].end());
        dice.emplace_back(names[d], std::move(faces));
      }
      return DiceSet(std::move(dice));
    }
  }
  if (target_victories)
    throw std::invalid_argument("base_triple: no balanced non-transitive triple at " +
                                std::to_string(*target_victories) + "/" +
                                std::to_string(m * m));
  throw std::runtime_error("base_triple: search exhausted (implementation bug)");
}

DiceSet extend_cycle(const DiceSet& s) {
  if (!s.canonical) throw std::invalid_argument("extend_cycle: input must be canonical");
  const auto balance = is_balanced(s);
  if (!balance || !is_non_transitive(s))
    throw std::invalid_argument("extend_cycle: input must be balanced and non-transitive");
  const int m = s.sides();
  const std::int64_t v = cycle_victories(s);
  const std::int64_t v_max = static_cast<std::int64_t>(m) * (m + 1) / 2;
  if (v > v_max)
    throw std::invalid_argument("extend_cycle: victory count exceeds m(m+1)/2");

  // New die: the last die's faces each shifted down by 1/2, then the k0
  // smallest raised across their partner label (c - 1/2 -> c + 1/2).
  // Each raise removes exactly one victory of the last die over the copy
  // and crosses no label of the first die. When c+1 is an unraised face of
  // the same die, c + 1/2 would collide with its copy; c + 1/4 has the
  // identical crossing behaviour.
  const Die& last = s.dice.back();
  const std::int64_t k0 = v_max - v;
  std::vector<std::int64_t> asc;
  asc.reserve(m);
  for (const Rational& f : last.faces) asc.push_back(f.num());
  std::sort(asc.begin(), asc.end());
  std::set<std::int64_t> raised(asc.begin(), asc.begin() + k0);
  std::set<std::int64_t> faces(asc.begin(), asc.end());

  std::vector<Rational> new_faces;
  new_faces.reserve(m);
  for (const Rational& f : last.faces) {
    const std::int64_t c = f.num();
    if (raised.count(c)) {
      const bool collide = faces.count(c + 1) && !raised.count(c + 1);
      new_faces.push_back(Rational(4 * c + (collide ? 1 : 2), 4));
    } else {
      new_faces.push_back(Rational(2 * c - 1, 2));
    }
  }

  std::vector<Die> dice = s.dice;
  std::string name = last.name;
  // Constructions name dice A, B, C, ... in cycle order.
  if (name.size() == 1 && name[0] >= 'A' && name[0] < 'Z')
    name = std::string(1, static_cast<char>(name[0] + 1));
  else
    name += "'";
  dice.emplace_back(std::move(name), std::move(new_faces));
  return normalize(DiceSet(std::move(dice)));
}

DiceSet build_cycle_set(int n, int m, const std::optional<DiceSet>& base) {
  if (n < 3 || m < 3)
    throw std::invalid_argument("build_cycle_set: n and m must be >= 3");
  DiceSet s = base ? *base : base_triple(m);
  if (s.size() != 3 || s.sides() != m)
    throw std::invalid_argument("build_cycle_set: base must be a triple of m-sided dice");
  for (int k = 3; k < n; ++k) s = extend_cycle(s);
  return s;
}

}  // namespace ntdice
