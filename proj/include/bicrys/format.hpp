#pragma once

#include <string>
#include <vector>

#include "bicrys/exponent.hpp"
#include "bicrys/levi.hpp"
#include "bicrys/multiplicity.hpp"

namespace bicrys {

// Terms "c*s_{(2,1)}(x1..x3)*y4^2" joined by " + ", degree ascending and keys
// descending within a degree. Blocks of size one print as powers of their single
// variable; empty partitions are omitted; the empty key prints "1" and the empty
// table "0".
std::string format_character(const MultiplicityTable& table);
std::string format_character_term(const CharacterKey& key, const LeviDatum& datum);
// Inverse of format_character for the given datum; max_degree is the largest term degree.
MultiplicityTable parse_character(const std::string& text, const LeviDatum& datum);

// One line per entry: "<lambda>|<mu> <count>", same ordering as format_character.
std::string format_table(const MultiplicityTable& table);

// DOT digraph on the given degree-d vertices, edges f_i^row / f_j^col for the
// admissible indices whose image is again a vertex. Vertices are numbered in
// ascending structural order.
std::string export_crystal_graph(const std::vector<ExponentMatrix>& vertices, const LeviDatum& datum, int degree);

// Closure of `seed` under all admissible operators.
std::vector<ExponentMatrix> crystal_component(const ExponentMatrix& seed, const LeviDatum& datum);

}  // namespace bicrys
