#include "ntdice/dice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ntdice/graph.hpp"

namespace ntdice {

std::string Probability::str() const {
  const std::int64_t g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

Die::Die(std::string name_, std::vector<Rational> faces_)
    : name(std::move(name_)), faces(std::move(faces_)) {
  if (name.empty()) throw std::invalid_argument("die name must be nonempty");
  if (faces.empty()) throw std::invalid_argument("die must have at least one face");
  for (std::size_t i = 1; i < faces.size(); ++i) {
    if (!(faces[i] < faces[i - 1]))
      throw std::invalid_argument("die '" + name + "': faces must be strictly descending");
  }
}

DiceSet::DiceSet(std::vector<Die> dice_) : dice(std::move(dice_)) {
  if (dice.empty()) throw std::invalid_argument("dice set must be nonempty");
  const int m = dice.front().sides();
  std::set<std::string> names;
  std::set<Rational> labels;
  for (const Die& d : dice) {
    if (d.sides() != m)
      throw std::invalid_argument("dice set: unequal side counts");
    if (!names.insert(d.name).second)
      throw std::invalid_argument("dice set: duplicate die name '" + d.name + "'");
    for (const Rational& f : d.faces) {
      if (!labels.insert(f).second)
        throw std::invalid_argument("dice set: duplicate label " + f.str());
    }
  }
  const int total = static_cast<int>(dice.size()) * m;
  canonical = true;
  int expect = 1;
  for (const Rational& f : labels) {
    if (!(f == Rational(expect++))) {
      canonical = false;
      break;
    }
  }
  canonical = canonical && static_cast<int>(labels.size()) == total;
}

const Die& DiceSet::by_name(const std::string& name) const {
  for (const Die& d : dice)
    if (d.name == name) return d;
  throw std::invalid_argument("no die named '" + name + "'");
}

std::int64_t victories(const Die& a, const Die& b) {
  std::int64_t count = 0;
  for (const Rational& x : a.faces) {
    for (const Rational& y : b.faces) {
      if (x == y)
        throw std::invalid_argument("dice '" + a.name + "' and '" + b.name +
                                    "' share label " + x.str());
      if (y < x) ++count;
    }
  }
  return count;
}

Probability probability(const Die& a, const Die& b) {
  return {victories(a, b),
          static_cast<std::int64_t>(a.sides()) * b.sides()};
}

VictoryMatrix victory_matrix(const DiceSet& s) {
  const int n = s.size();
  VictoryMatrix vm;
  vm.n = n;
  vm.m = s.sides();
  vm.counts.assign(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) vm.counts[i][j] = victories(s.dice[i], s.dice[j]);
  return vm;
}

static void require_cycle_size(const DiceSet& s) {
  if (s.size() < 3)
    throw std::invalid_argument("cycle predicates need at least 3 dice");
}

bool is_non_transitive(const DiceSet& s) {
  require_cycle_size(s);
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    if (!probability(s.dice[i], s.dice[(i + 1) % n]).exceeds_half()) return false;
  }
  return true;
}

std::optional<Probability> is_balanced(const DiceSet& s) {
  require_cycle_size(s);
  const int n = s.size();
  const Probability first = probability(s.dice[0], s.dice[1]);
  for (int i = 1; i < n; ++i) {
    if (!(probability(s.dice[i], s.dice[(i + 1) % n]) == first))
      return std::nullopt;
  }
  return first;
}

RealizationReport realizes(const DiceSet& s, const Digraph& g,
                           const std::map<std::string, std::string>& mapping) {
  if (static_cast<int>(mapping.size()) != s.size() ||
      s.size() != g.vertex_count())
    throw std::invalid_argument("realizes: mapping must be one-to-one onto the vertices");
  std::set<std::string> images;
  for (const Die& d : s.dice) {
    auto it = mapping.find(d.name);
    if (it == mapping.end())
      throw std::invalid_argument("realizes: no image for die '" + d.name + "'");
    g.index(it->second);  // throws on unknown vertex
    if (!images.insert(it->second).second)
      throw std::invalid_argument("realizes: mapping is not one-to-one");
  }

  RealizationReport report;
  report.mapping = mapping;
  for (const Die& a : s.dice) {
    for (const Die& b : s.dice) {
      if (a.name == b.name) continue;
      const Probability p = probability(a, b);
      if (p.exceeds_half() &&
          !g.has_arc(mapping.at(a.name), mapping.at(b.name))) {
        report.violations.push_back({a.name, b.name, p});
      }
    }
  }
  report.realized = report.violations.empty();
  return report;
}

DiceSet normalize(const DiceSet& s) {
  std::vector<std::pair<Rational, std::pair<int, int>>> all;  // label, (die, slot)
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.dice[i].sides(); ++j)
      all.emplace_back(s.dice[i].faces[j], std::make_pair(i, j));
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<std::vector<Rational>> faces(s.size(),
                                           std::vector<Rational>(s.sides()));
  int rank = 1;
  for (const auto& [label, pos] : all) faces[pos.first][pos.second] = rank++;

  std::vector<Die> out;
  out.reserve(s.size());
  for (int i = 0; i < s.size(); ++i) out.emplace_back(s.dice[i].name, faces[i]);
  return DiceSet(std::move(out));
}

}  // namespace ntdice
