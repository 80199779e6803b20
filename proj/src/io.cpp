#include "ntdice/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ntdice {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto pos = s.find('#'); pos != std::string::npos) s = s.substr(0, pos);
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// First non-blank line must be the exact header comment.
void expect_header(std::istream& in, const std::string& header,
                   const std::string& what) {
  std::string line;
  while (std::getline(in, line)) {
    std::string t = line;
    const auto b = t.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    const auto e = t.find_last_not_of(" \t\r\n");
    t = t.substr(b, e - b + 1);
    if (t != header)
      throw std::invalid_argument(what + ": expected header '" + header + "'");
    return;
  }
  throw std::invalid_argument(what + ": empty input");
}

}  // namespace

DiceSet read_dice_set(std::istream& in) {
  expect_header(in, "# dice-set v1", "dice-set");
  std::vector<Die> dice;
  std::string line;
  while (std::getline(in, line)) {
    const std::string s = strip(line);
    if (s.empty()) continue;
    const auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0)
      throw std::invalid_argument("dice-set: malformed line '" + line + "'");
    const std::string name = strip(s.substr(0, colon));
    std::istringstream vals(s.substr(colon + 1));
    std::vector<Rational> faces;
    std::int64_t v;
    while (vals >> v) faces.push_back(v);
    if (!vals.eof())
      throw std::invalid_argument("dice-set: non-integer value on line '" + line + "'");
    dice.emplace_back(name, std::move(faces));  // validates descending order
  }
  return DiceSet(std::move(dice));
}

DiceSet read_dice_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_dice_set(in);
}

void write_dice_set(std::ostream& out, const DiceSet& s) {
  out << "# dice-set v1\n";
  for (const Die& d : s.dice) {
    out << d.name << ":";
    for (const Rational& f : d.faces) {
      if (!f.is_integer())
        throw std::invalid_argument("dice-set format holds integers only; normalize first");
      out << " " << f.num();
    }
    out << "\n";
  }
}

Digraph read_digraph(std::istream& in) {
  expect_header(in, "# digraph v1", "digraph");
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> arcs;
  bool have_vertices = false;
  std::string line;
  while (std::getline(in, line)) {
    const std::string s = strip(line);
    if (s.empty()) continue;
    std::istringstream ss(s);
    std::string key;
    ss >> key;
    if (key == "vertices:") {
      if (have_vertices)
        throw std::invalid_argument("digraph: repeated vertices line");
      std::string v;
      while (ss >> v) vertices.push_back(v);
      have_vertices = true;
    } else if (key == "edge:") {
      std::string u, v, extra;
      if (!(ss >> u >> v) || (ss >> extra))
        throw std::invalid_argument("digraph: malformed edge line '" + line + "'");
      arcs.emplace_back(u, v);
    } else {
      throw std::invalid_argument("digraph: unknown line '" + line + "'");
    }
  }
  if (!have_vertices) throw std::invalid_argument("digraph: missing vertices line");
  return Digraph(std::move(vertices), arcs);
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& g) {
  out << "# digraph v1\nvertices:";
  for (const std::string& v : g.vertices()) out << " " << v;
  out << "\n";
  for (const auto& [u, v] : g.arcs())
    out << "edge: " << g.name(u) << " " << g.name(v) << "\n";
}

}  // namespace ntdice
