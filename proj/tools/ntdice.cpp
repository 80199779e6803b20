// Command-line surface for building and verifying non-transitive dice.
// Exit codes: 0 = success/verified, 1 = verification failed, 2 = input error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ntdice/cycle_builder.hpp"
#include "ntdice/dice.hpp"
#include "ntdice/graph.hpp"
#include "ntdice/io.hpp"
#include "ntdice/oracle.hpp"
#include "ntdice/tournament_builder.hpp"

namespace {

using namespace ntdice;

void write_dice_output(const std::string& path, const DiceSet& s,
                       const std::map<std::string, std::string>* mapping) {
  std::ostringstream body;
  write_dice_set(body, s);
  if (mapping)
    for (const auto& [die, vertex] : *mapping)
      body << "# map " << die << " -> " << vertex << "\n";
  if (path.empty() || path == "-") {
    std::cout << body.str();
  } else {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << body.str();
  }
}

std::vector<std::pair<std::string, std::string>> parse_chord_order(
    const std::string& text) {
  // "A>C,B>D,...": winner>loser, comma-separated.
  std::vector<std::pair<std::string, std::string>> order;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto gt = item.find('>');
    if (gt == std::string::npos || gt == 0 || gt + 1 == item.size())
      throw std::invalid_argument("bad chord '" + item + "' (want winner>loser)");
    order.emplace_back(item.substr(0, gt), item.substr(gt + 1));
  }
  if (order.empty()) throw std::invalid_argument("empty chord order");
  return order;
}

void print_victory_matrix(const DiceSet& s) {
  const VictoryMatrix vm = victory_matrix(s);
  std::cout << "victory matrix (" << vm.n << " dice, m=" << vm.m << "):\n";
  for (int i = 0; i < vm.n; ++i) {
    std::cout << "  " << s.dice[i].name << ":";
    for (int j = 0; j < vm.n; ++j) std::cout << " " << vm.at(i, j);
    std::cout << "\n";
  }
}

int cmd_cycle(int n, int m, const std::string& out_path) {
  const DiceSet s = build_cycle_set(n, m);
  const auto p = is_balanced(s);
  std::cout << p->str() << "\n";
  write_dice_output(out_path, s, nullptr);
  return 0;
}

int cmd_tournament(const std::string& graph_path,
                   const std::optional<std::string>& chord_order,
                   const std::string& out_path) {
  const Tournament t(read_digraph_file(graph_path));
  std::optional<TournamentDice> result;
  if (chord_order) {
    if (!is_strong(t.graph()))
      throw std::invalid_argument("--chord-order requires a strong tournament");
    result = build_strong_tournament_dice(t, parse_chord_order(*chord_order));
  } else {
    result = build_tournament_dice(t);
  }
  write_dice_output(out_path, result->dice, &result->mapping);
  if (!result->report.realized) {
    std::cout << "NOT realized (" << result->report.violations.size()
              << " violations; internal bug)\n";
    return 1;
  }
  std::cout << "realized\n";
  return 0;
}

int cmd_verify(const std::string& dice_path,
               const std::optional<std::string>& graph_path) {
  const DiceSet s = read_dice_set_file(dice_path);
  print_victory_matrix(s);
  bool ok = true;

  const auto balance = is_balanced(s);
  if (balance)
    std::cout << "balanced: yes, victorious probability " << balance->str() << "\n";
  else
    std::cout << "balanced: no\n";
  const bool nt = is_non_transitive(s);
  std::cout << "non-transitive: " << (nt ? "yes" : "no") << "\n";
  ok = ok && balance.has_value() && nt;

  if (graph_path) {
    const Digraph g = read_digraph_file(*graph_path);
    std::map<std::string, std::string> mapping;
    for (const Die& d : s.dice) mapping[d.name] = d.name;
    const RealizationReport report = realizes(s, g, mapping);
    if (report.realized) {
      std::cout << "realized\n";
    } else {
      std::cout << "NOT realized:\n";
      for (const auto& v : report.violations)
        std::cout << "  " << v.winner << " beats " << v.loser << " ("
                  << v.p.str() << ") but no arc\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

int cmd_simulate(const std::string& dice_path, std::int64_t rolls,
                 std::uint64_t seed) {
  const DiceSet s = read_dice_set_file(dice_path);
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    const Die& a = s.dice[i];
    const Die& b = s.dice[(i + 1) % n];
    const McEstimate est = mc_estimate(a, b, rolls, seed + i);
    const Probability exact = probability(a, b);
    std::cout << a.name << " vs " << b.name << ": estimate " << est.estimate()
              << " (exact " << exact.str() << ")\n";
  }
  return 0;
}

int cmd_connectable(const std::string& graph_path) {
  const Digraph g = read_digraph_file(graph_path);
  if (is_strongly_connectable(g)) {
    std::cout << "yes\n";
    return 0;
  }
  std::cout << "no\n";
  const auto cut = complete_directed_cut(g);
  std::cout << "cut {";
  for (std::size_t i = 0; i < cut.first.size(); ++i)
    std::cout << (i ? ", " : "") << g.name(cut.first[i]);
  std::cout << "} | {";
  for (std::size_t i = 0; i < cut.second.size(); ++i)
    std::cout << (i ? ", " : "") << g.name(cut.second[i]);
  std::cout << "}\n";
  return 0;
}

int cmd_oracle(int m, std::optional<int> target, std::optional<int> max_results,
               bool force) {
  EnumerateOptions opts;
  opts.target_victories = target;
  opts.max_results = max_results;
  opts.allow_expensive = force;
  const std::vector<DiceSet> sets = enumerate_balanced_triples(m, opts);
  std::vector<std::string> probs;
  bool first = true;
  for (const DiceSet& s : sets) {
    if (!first) std::cout << "---\n";
    first = false;
    write_dice_set(std::cout, s);
    const std::string p = is_balanced(s)->str();
    if (std::find(probs.begin(), probs.end(), p) == probs.end()) probs.push_back(p);
  }
  std::cout << "# " << sets.size() << " balanced non-transitive triples, m=" << m
            << "; victorious probabilities:";
  for (const std::string& p : probs) std::cout << " " << p;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-transitive dice construction and verification"};
  app.require_subcommand(1);

  int n = 0, m = 0;
  std::string out_path, dice_path, graph_path;
  std::string chord_order_text;
  std::int64_t rolls = 1000000;
  std::uint64_t seed = 0;
  int oracle_target = 0, oracle_max = 0;
  bool force = false;

  auto* cycle = app.add_subcommand("cycle", "build a balanced non-transitive cycle set");
  cycle->add_option("--dice", n, "number of dice (>= 3)")->required();
  cycle->add_option("--sides", m, "sides per die (>= 3)")->required();
  cycle->add_option("-o,--out", out_path, "output file ('-' for stdout)");

  auto* tournament = app.add_subcommand("tournament", "realize a tournament by dice");
  tournament->add_option("graph", graph_path, "digraph v1 file")->required();
  tournament->add_option("--chord-order", chord_order_text,
                         "winner>loser,... (strong tournaments only)");
  tournament->add_option("-o,--out", out_path, "output file ('-' for stdout)");

  auto* verify = app.add_subcommand("verify", "check a dice-set file");
  verify->add_option("dice", dice_path, "dice-set v1 file")->required();
  verify->add_option("--graph", graph_path, "digraph v1 file to check realization");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo roll the cycle pairs");
  simulate->add_option("dice", dice_path, "dice-set v1 file")->required();
  simulate->add_option("--rolls", rolls, "rolls per pair");
  simulate->add_option("--seed", seed, "RNG seed");

  auto* connectable = app.add_subcommand("connectable", "strong-connectability test");
  connectable->add_option("graph", graph_path, "digraph v1 file")->required();

  auto* oracle = app.add_subcommand("oracle", "enumerate balanced non-transitive triples");
  oracle->add_option("--sides", m, "sides per die")->required();
  oracle->add_option("--victories", oracle_target, "keep only this cycle victory count");
  oracle->add_option("--max", oracle_max, "stop after this many results");
  oracle->add_flag("--force", force, "lift the m <= 6 cost guard");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cycle->parsed()) {
      if (n < 3 || m < 3) {
        std::cerr << "error: --dice and --sides must be >= 3\n";
        return 2;
      }
      return cmd_cycle(n, m, out_path);
    }
    if (tournament->parsed()) {
      std::optional<std::string> order;
      if (!chord_order_text.empty()) order = chord_order_text;
      return cmd_tournament(graph_path, order, out_path);
    }
    if (verify->parsed()) {
      std::optional<std::string> g;
      if (!graph_path.empty()) g = graph_path;
      return cmd_verify(dice_path, g);
    }
    if (simulate->parsed()) return cmd_simulate(dice_path, rolls, seed);
    if (connectable->parsed()) return cmd_connectable(graph_path);
    if (oracle->parsed()) {
      std::optional<int> target, max_results;
      if (oracle_target > 0) target = oracle_target;
      if (oracle_max > 0) max_results = oracle_max;
      return cmd_oracle(m, target, max_results, force);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
