#include <doctest.h>

#include <sstream>

#include "forge/errors.hpp"
#include "forge/io.hpp"
#include "forge/pipeline.hpp"

using namespace forge;

TEST_CASE("Cayley tables round trip with 1-based entries and comments") {
  std::istringstream in("# dihedral of order 3\n3\n1 3 2\n# middle comment\n3 2 1\n2 1 3\n");
  Quandle q = parse_quandle(in);
  CHECK(q == dihedral_quandle(3));
  std::ostringstream out;
  write_quandle(out, q);
  CHECK(out.str() == "3\n1 3 2\n3 2 1\n2 1 3\n");
  std::istringstream back(out.str());
  CHECK(parse_quandle(back) == q);
}

TEST_CASE("malformed tables") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return parse_table(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("2\n1 1\n2\n"), ParseError);
  CHECK_THROWS_AS(parse("2\n1 3\n2 2\n"), ParseError);
  CHECK_THROWS_AS(parse("2\n1 x\n2 2\n"), ParseError);
  CHECK_THROWS_AS(parse("0\n"), ParseError);
  std::istringstream bad("2\n2 2\n1 1\n");
  CHECK_THROWS_AS(parse_quandle(bad), AxiomViolation);
}

TEST_CASE("group files need the header") {
  std::ostringstream out;
  write_group(out, FiniteGroup::symmetric(3));
  std::istringstream in(out.str());
  FiniteGroup g = parse_group(in);
  CHECK(g.order() == 6);
  CHECK(g.table() == FiniteGroup::symmetric(3).table());
  std::istringstream no_header("2\n1 2\n2 1\n");
  CHECK_THROWS_AS(parse_group(no_header), ParseError);
  std::istringstream not_group("#group\n2\n1 1\n2 2\n");
  CHECK_THROWS_AS(parse_group(not_group), ParseError);
}

TEST_CASE("cocycle files") {
  std::istringstream in("3 3\n0 1 2\n2 0 1\n1 2 0\n");
  Cochain2 f = parse_cochain(in);
  CHECK(f.n == 3);
  CHECK(f.m == 3);
  CHECK(f.at(0, 2) == 2);
  std::ostringstream out;
  write_cochain(out, f);
  CHECK(out.str() == "3 3\n0 1 2\n2 0 1\n1 2 0\n");
  std::istringstream negative("2 4\n0 -1\n5 0\n");
  Cochain2 g = parse_cochain(negative);
  CHECK(g.at(0, 1) == 3);
  CHECK(g.at(1, 0) == 1);
  std::istringstream bad("2\n0 1\n1 0\n");
  CHECK_THROWS_AS(parse_cochain(bad), ParseError);
}

TEST_CASE("knot tables") {
  std::istringstream in("# name;strands;word\n3_1;2;1,1,1\n4_1;3;1,-2,1,-2\n0_1;1;\n");
  auto knots = parse_knot_table(in);
  REQUIRE(knots.size() == 3);
  CHECK(knots[1].word() == std::vector<int>{1, -2, 1, -2});
  CHECK(knots[2].crossings() == 0);
  std::ostringstream out;
  write_knot_table(out, bundled_knots());
  std::istringstream back(out.str());
  auto again = parse_knot_table(back);
  REQUIRE(again.size() == bundled_knots().size());
  for (std::size_t i = 0; i < again.size(); ++i) CHECK(again[i].word() == bundled_knots()[i].word());
  std::istringstream link("hopf;2;1,1\n");
  CHECK_THROWS_AS(parse_knot_table(link), NotAKnot);
  std::istringstream bad("x;2\n");
  CHECK_THROWS_AS(parse_knot_table(bad), ParseError);
  CHECK_THROWS_AS(read_knot_table("/nonexistent/knots.txt"), ParseError);
}
