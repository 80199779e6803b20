#pragma once

#include <iosfwd>
#include <string>

#include "ntdice/dice.hpp"
#include "ntdice/graph.hpp"

namespace ntdice {

// Dice-set text format ("dice-set v1"):
//   # dice-set v1
//   A: 9 5 1
//   B: 8 4 3
// Values are strictly descending decimal integers; blank lines and '#'
// comments are ignored.
DiceSet read_dice_set(std::istream& in);
DiceSet read_dice_set_file(const std::string& path);
void write_dice_set(std::ostream& out, const DiceSet& s);

// Digraph text format ("digraph v1"):
//   # digraph v1
//   vertices: a b c
//   edge: a b
Digraph read_digraph(std::istream& in);
Digraph read_digraph_file(const std::string& path);
void write_digraph(std::ostream& out, const Digraph& g);

}  // namespace ntdice
