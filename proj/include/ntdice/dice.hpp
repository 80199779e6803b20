#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ntdice/rational.hpp"

namespace ntdice {

class Digraph;

/// Exact probability p = num/den. Stored unreduced (den is usually m^2);
/// comparisons cross-multiply, never touch floating point.
struct Probability {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool exceeds_half() const { return 2 * num > den; }
  friend bool operator==(const Probability& a, const Probability& b) {
    return a.num * b.den == b.num * a.den;
  }
  /// Reduced "p/q" form.
  std::string str() const;
};

/// One fair die: a name and strictly descending, pairwise distinct faces.
struct Die {
  std::string name;
  std::vector<Rational> faces;

  Die(std::string name, std::vector<Rational> faces);
  int sides() const { return static_cast<int>(faces.size()); }
};

/// An ordered collection of dice with pairwise disjoint labels and equal
/// side counts. The list order encodes the intended cycle
/// dice[0] > dice[1] > ... > dice[n-1] > dice[0].
struct DiceSet {
  std::vector<Die> dice;
  bool canonical = false;  // labels are exactly the integers 1..n*m

  explicit DiceSet(std::vector<Die> dice);
  int size() const { return static_cast<int>(dice.size()); }
  int sides() const { return dice.empty() ? 0 : dice.front().sides(); }
  const Die& by_name(const std::string& name) const;
};

/// Pairwise victory counts: counts[i][j] = victories(dice[i], dice[j]).
struct VictoryMatrix {
  int n = 0;
  int m = 0;
  std::vector<std::vector<std::int64_t>> counts;

  std::int64_t at(int i, int j) const { return counts[i][j]; }
};

struct RealizationViolation {
  std::string winner;  // die whose win has no matching arc
  std::string loser;
  Probability p;
};

struct RealizationReport {
  std::map<std::string, std::string> mapping;  // die name -> vertex name
  std::vector<RealizationViolation> violations;
  bool realized = false;
};

/// Number of face pairs (x, y), x on a, y on b, with x > y.
std::int64_t victories(const Die& a, const Die& b);

/// victories(a,b) / (sides(a)*sides(b)), exact.
Probability probability(const Die& a, const Die& b);

VictoryMatrix victory_matrix(const DiceSet& s);

/// True iff every die beats the next in list order (cyclically), n >= 3.
bool is_non_transitive(const DiceSet& s);

/// The common cycle-edge probability if all n of them are equal, else
/// nullopt. Does not require dominance; conjoin with is_non_transitive.
std::optional<Probability> is_balanced(const DiceSet& s);

/// Checks that every strictly-winning ordered die pair maps to an arc of g
/// under the one-to-one mapping die name -> vertex name.
RealizationReport realizes(const DiceSet& s, const Digraph& g,
                           const std::map<std::string, std::string>& mapping);

/// Replaces every label by its rank in the global ascending order
/// (rank 1 = smallest). Victory counts are unchanged; output is canonical.
DiceSet normalize(const DiceSet& s);

}  // namespace ntdice
