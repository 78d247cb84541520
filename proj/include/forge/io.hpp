#pragma once

// Text formats. Element indices in files are 1-based; everything in memory is
// 0-based. Lines starting with '#' are comments except the '#group' marker.
//
//   Cayley table:  n, then n rows of n entries; row a, column b holds a*b.
//   Group table:   as above, with a '#group' line before the data.
//   Cocycle:       "n m", then n rows of n values mod m.
//   Knot table:    name;strands;comma-separated signed generators

#include <iosfwd>
#include <string>
#include <vector>

#include "forge/cohomology.hpp"
#include "forge/constructions.hpp"
#include "forge/knots.hpp"
#include "forge/quandle.hpp"

namespace forge {

// Parse functions throw ParseError on malformed input.
Table parse_table(std::istream& in);
Quandle parse_quandle(std::istream& in);
FiniteGroup parse_group(std::istream& in);
Cochain2 parse_cochain(std::istream& in);
std::vector<BraidKnot> parse_knot_table(std::istream& in);

void write_table(std::ostream& out, const Table& t);
void write_quandle(std::ostream& out, const Quandle& q);
void write_group(std::ostream& out, const FiniteGroup& g);
void write_cochain(std::ostream& out, const Cochain2& f);
void write_knot_table(std::ostream& out, const std::vector<BraidKnot>& knots);

// File wrappers; throw ParseError when the file cannot be opened.
Table read_table(const std::string& path);
Quandle read_quandle(const std::string& path);
FiniteGroup read_group(const std::string& path);
Cochain2 read_cochain(const std::string& path);
std::vector<BraidKnot> read_knot_table(const std::string& path);

}  // namespace forge
