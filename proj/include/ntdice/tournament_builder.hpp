#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ntdice/dice.hpp"
#include "ntdice/graph.hpp"

namespace ntdice {

/// Every label increased by k (victory matrix unchanged).
DiceSet shift_labels(const DiceSet& s, int k);

/// Each label of rank k becomes r consecutive fresh ranks on the same die;
/// all pairwise probabilities are preserved (counts scale by r^2).
DiceSet blow_up(const DiceSet& s, int r);

/// Label bookkeeping for one chord stage: stage t consumes the above pair
/// {n^2+2t-1, n^2+2t} and the below pair {n^2-3n-2t+1, n^2-3n-2t+2}.
struct ChordPlan {
  int stage = 0;
  std::pair<int, int> above;  // smaller, larger
  std::pair<int, int> below;
  static ChordPlan for_stage(int n, int t);
};

struct TournamentDice {
  DiceSet dice;
  std::map<std::string, std::string> mapping;  // die name -> vertex name
  RealizationReport report;

  TournamentDice(DiceSet d, std::map<std::string, std::string> map,
                 RealizationReport rep)
      : dice(std::move(d)), mapping(std::move(map)), report(std::move(rep)) {}
};

/// Incremental chord-augmentation construction for a strong tournament:
/// Hamilton cycle -> balanced 3-sided cycle dice -> shift by n^2-3n ->
/// one add_chord per non-cycle arc. Exposed stepwise so the per-stage
/// invariants can be observed.
class StrongTournamentBuild {
 public:
  explicit StrongTournamentBuild(const Tournament& t);

  /// The Hamilton cycle the build follows, as vertex names.
  const std::vector<std::string>& cycle() const { return cycle_; }
  /// Chords not yet added, in the default order (ascending by cycle
  /// position of winner, then of loser).
  const std::vector<std::pair<std::string, std::string>>& chords() const {
    return chords_;
  }
  int next_stage() const { return stage_ + 1; }

  /// Adds the chord winner -> loser at the next stage. The winner gains
  /// the larger above label; the below pair is split by the base victory
  /// count (5 -> winner takes the smaller).
  void add_chord(const std::string& winner, const std::string& loser);

  /// Current faces of a die mid-construction.
  const Die& die(const std::string& vertex) const;

  /// Validates all chords were added and assembles the final set.
  TournamentDice finish();

 private:
  Tournament t_;
  int n_;
  std::vector<std::string> cycle_;
  std::vector<std::pair<std::string, std::string>> chords_;  // remaining
  std::vector<Die> dice_;       // in cycle order, faces grow per stage
  std::vector<Die> base_dice_;  // shifted 3-sided base, victory reference
  int stage_ = 0;
};

/// Full Theorem-3 pipeline; chord_order (winner, loser pairs) defaults to
/// the deterministic cycle-position order and must otherwise be a
/// permutation of the chord set.
TournamentDice build_strong_tournament_dice(
    const Tournament& t,
    const std::optional<std::vector<std::pair<std::string, std::string>>>&
        chord_order = std::nullopt);

/// Realizes an arbitrary tournament: balanced dice per strong component,
/// side counts equalized by blow-up, components stacked along the
/// condensation's total order (cross-component probabilities are exactly 1).
TournamentDice build_tournament_dice(const Tournament& t);

}  // namespace ntdice
