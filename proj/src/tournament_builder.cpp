#include "ntdice/tournament_builder.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ntdice/cycle_builder.hpp"

namespace ntdice {

DiceSet shift_labels(const DiceSet& s, int k) {
  if (!s.canonical) throw std::invalid_argument("shift_labels: input must be canonical");
  if (k < 0) throw std::invalid_argument("shift_labels: negative shift");
  std::vector<Die> dice;
  dice.reserve(s.size());
  for (const Die& d : s.dice) {
    std::vector<Rational> faces;
    faces.reserve(d.sides());
    for (const Rational& f : d.faces) faces.push_back(f + Rational(k));
    dice.emplace_back(d.name, std::move(faces));
  }
  return DiceSet(std::move(dice));
}

DiceSet blow_up(const DiceSet& s, int r) {
  if (!s.canonical) throw std::invalid_argument("blow_up: input must be canonical");
  if (r < 1) throw std::invalid_argument("blow_up: r must be >= 1");
  if (r == 1) return s;
  std::vector<Die> dice;
  dice.reserve(s.size());
  for (const Die& d : s.dice) {
    std::vector<Rational> faces;
    faces.reserve(d.sides() * r);
    for (const Rational& f : d.faces) {
      const std::int64_t k = f.num();  // rank in 1..n*m
      for (std::int64_t j = r * k; j > r * (k - 1); --j) faces.push_back(j);
    }
    dice.emplace_back(d.name, std::move(faces));
  }
  return DiceSet(std::move(dice));
}

ChordPlan ChordPlan::for_stage(int n, int t) {
  ChordPlan p;
  p.stage = t;
  p.above = {n * n + 2 * t - 1, n * n + 2 * t};
  p.below = {n * n - 3 * n - 2 * t + 1, n * n - 3 * n - 2 * t + 2};
  return p;
}

StrongTournamentBuild::StrongTournamentBuild(const Tournament& t)
    : t_(t), n_(t.graph().vertex_count()) {
  const Digraph& g = t.graph();
  const std::vector<int> ham = hamilton_cycle(t);
  cycle_.reserve(n_);
  for (int v : ham) cycle_.push_back(g.name(v));

  DiceSet base = shift_labels(build_cycle_set(n_, 3), n_ * n_ - 3 * n_);
  // One die per cycle vertex, named after it.
  for (int i = 0; i < n_; ++i) {
    dice_.emplace_back(cycle_[i], base.dice[i].faces);
    base_dice_.emplace_back(cycle_[i], base.dice[i].faces);
  }

  // Chords: every arc not on the cycle, ascending by (cycle position of
  // winner, cycle position of loser).
  std::set<std::pair<int, int>> cycle_arcs;
  for (int i = 0; i < n_; ++i) {
    cycle_arcs.insert({g.index(cycle_[i]), g.index(cycle_[(i + 1) % n_])});
  }
  for (int wi = 0; wi < n_; ++wi) {
    for (int li = 0; li < n_; ++li) {
      if (wi == li) continue;
      const int u = g.index(cycle_[wi]), v = g.index(cycle_[li]);
      if (g.has_arc(u, v) && !cycle_arcs.count({u, v}))
        chords_.emplace_back(cycle_[wi], cycle_[li]);
    }
  }
}

const Die& StrongTournamentBuild::die(const std::string& vertex) const {
  for (const Die& d : dice_)
    if (d.name == vertex) return d;
  throw std::invalid_argument("no die for vertex '" + vertex + "'");
}

void StrongTournamentBuild::add_chord(const std::string& winner,
                                      const std::string& loser) {
  const auto it = std::find(chords_.begin(), chords_.end(),
                            std::make_pair(winner, loser));
  if (it == chords_.end())
    throw std::invalid_argument("(" + winner + ", " + loser +
                                ") is not a remaining chord");
  chords_.erase(it);
  const ChordPlan plan = ChordPlan::for_stage(n_, ++stage_);

  Die* w = nullptr;
  Die* l = nullptr;
  Die* wb = nullptr;
  Die* lb = nullptr;
  for (std::size_t i = 0; i < dice_.size(); ++i) {
    if (dice_[i].name == winner) w = &dice_[i], wb = &base_dice_[i];
    if (dice_[i].name == loser) l = &dice_[i], lb = &base_dice_[i];
  }

  // Base count on the original 3-sided faces decides the below split.
  const std::int64_t base_count = victories(*wb, *lb);
  if (base_count != 4 && base_count != 5)
    throw std::runtime_error("chord base victory count " +
                             std::to_string(base_count) + " is not 4 or 5");
  const int w_below = base_count == 5 ? plan.below.first : plan.below.second;
  const int l_below = base_count == 5 ? plan.below.second : plan.below.first;

  auto append = [](Die& d, int above, int below) {
    std::vector<Rational> faces = d.faces;
    faces.push_back(above);
    faces.push_back(below);
    std::sort(faces.begin(), faces.end(),
              [](const Rational& a, const Rational& b) { return b < a; });
    d = Die(d.name, std::move(faces));
  };
  append(*w, plan.above.second, w_below);
  append(*l, plan.above.first, l_below);
}

TournamentDice StrongTournamentBuild::finish() {
  if (!chords_.empty())
    throw std::invalid_argument("finish: " + std::to_string(chords_.size()) +
                                " chords not yet added");
  DiceSet out(dice_);
  if (!out.canonical)
    throw std::runtime_error("strong build did not tile 1..n(2n-3)");
  std::map<std::string, std::string> mapping;
  for (const Die& d : out.dice) mapping[d.name] = d.name;
  RealizationReport report = realizes(out, t_.graph(), mapping);
  return {std::move(out), std::move(mapping), std::move(report)};
}

TournamentDice build_strong_tournament_dice(
    const Tournament& t,
    const std::optional<std::vector<std::pair<std::string, std::string>>>&
        chord_order) {
  StrongTournamentBuild build(t);
  std::vector<std::pair<std::string, std::string>> order =
      chord_order.value_or(build.chords());
  if (chord_order) {
    auto sorted = order;
    auto expected = build.chords();
    std::sort(sorted.begin(), sorted.end());
    std::sort(expected.begin(), expected.end());
    if (sorted != expected)
      throw std::invalid_argument(
          "chord order must be a permutation of the chord set");
  }
  for (const auto& [w, l] : order) build.add_chord(w, l);
  return build.finish();
}

namespace {

Digraph induced_subgraph(const Digraph& g, const std::vector<int>& verts) {
  std::vector<std::string> names;
  names.reserve(verts.size());
  for (int v : verts) names.push_back(g.name(v));
  std::vector<std::pair<std::string, std::string>> arcs;
  for (int u : verts)
    for (int v : verts)
      if (u != v && g.has_arc(u, v)) arcs.emplace_back(g.name(u), g.name(v));
  return Digraph(std::move(names), arcs);
}

}  // namespace

TournamentDice build_tournament_dice(const Tournament& t) {
  const Digraph& g = t.graph();
  const Condensation cond = strong_components(g);

  // Balanced dice per strong component; a 2-vertex strong component cannot
  // occur in a tournament.
  std::vector<DiceSet> parts;
  for (const std::vector<int>& comp : cond.components) {
    if (comp.size() == 1) {
      parts.push_back(DiceSet({Die(g.name(comp.front()), {Rational(1)})}));
    } else if (comp.size() == 2) {
      throw std::runtime_error("2-vertex strong component in a tournament");
    } else {
      Tournament sub(induced_subgraph(g, comp));
      parts.push_back(build_strong_tournament_dice(sub).dice);
    }
  }

  // Equalize side counts, then stack: components are in dominant-first
  // order, so earlier components take the higher label blocks.
  std::int64_t common_sides = 1;
  for (const DiceSet& p : parts)
    common_sides = std::lcm(common_sides, static_cast<std::int64_t>(p.sides()));

  std::int64_t total = 0;
  for (const DiceSet& p : parts) total += p.size() * common_sides;

  std::vector<Die> dice;
  std::int64_t top = total;  // labels above the current component's block
  for (DiceSet& p : parts) {
    const DiceSet grown = blow_up(p, static_cast<int>(common_sides / p.sides()));
    const std::int64_t block = grown.size() * common_sides;
    const std::int64_t offset = top - block;
    for (const Die& d : grown.dice) {
      std::vector<Rational> faces;
      faces.reserve(d.sides());
      for (const Rational& f : d.faces) faces.push_back(f + Rational(offset));
      dice.emplace_back(d.name, std::move(faces));
    }
    top = offset;
  }

  DiceSet out(std::move(dice));
  std::map<std::string, std::string> mapping;
  for (const Die& d : out.dice) mapping[d.name] = d.name;
  RealizationReport report = realizes(out, g, mapping);
  return {std::move(out), std::move(mapping), std::move(report)};
}

}  // namespace ntdice
