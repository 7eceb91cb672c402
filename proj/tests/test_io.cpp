#include <sstream>

#include "doctest.h"
#include "seqdom/errors.hpp"
#include "seqdom/io.hpp"
#include "seqdom/oracle.hpp"
#include "seqdom/spdigraph.hpp"
#include "testutil.hpp"

using namespace seqdom;

namespace {

Digraph from_text(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("graph parsing") {
  Digraph g = from_text("4 4\n1 2\n2 4\n1 3\n3 4\n");
  CHECK(g.n == 4);
  REQUIRE(g.arcs.size() == 4);
  CHECK(g.arcs[0].tail == 0);
  CHECK(g.arcs[0].head == 1);
  CHECK(g.arcs[0].weight == 1);
  CHECK(g.arcs[1].head == 3);
  CHECK(g.source == -1);
  CHECK(g.sink == -1);

  g = from_text("# weighted example\n\n2 1\n# the only arc\n1 2 9\n");
  CHECK(g.n == 2);
  REQUIRE(g.arcs.size() == 1);
  CHECK(g.arcs[0].weight == 9);

  g = from_text("  3 2 \n 1 2 \n\t2 3 4\n");
  CHECK(g.arcs[1].weight == 4);
}

TEST_CASE("graph parsing failures") {
  CHECK_THROWS_AS(from_text(""), ParseError);
  CHECK_THROWS_AS(from_text("# only comments\n"), ParseError);
  CHECK_THROWS_AS(from_text("2\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 1 7\n1 2\n"), ParseError);
  CHECK_THROWS_AS(from_text("1 0\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 -1\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 1\n1 3\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 1\n0 2\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 1\n1 2 0\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 1\n1 2 -3\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 1\n1 2 3 4\n"), ParseError);
  CHECK_THROWS_AS(from_text("x y\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 1\na b\n"), ParseError);
}

TEST_CASE("graph writing always includes the weight column") {
  Digraph g = single_arc(1);
  std::ostringstream out;
  format_graph(g, out);
  CHECK(out.str() == "2 1\n1 2 1\n");

  Digraph w = from_text("3 2\n1 2 5\n2 3\n");
  std::ostringstream out2;
  format_graph(w, out2);
  CHECK(out2.str() == "3 2\n1 2 5\n2 3 1\n");
}

TEST_CASE("graph round trip") {
  std::mt19937_64 rng(3001);
  std::uniform_int_distribution<int> leaves(1, 12);
  for (int it = 0; it < 200; ++it) {
    DecompTree t = oracle::random_decomp_tree(leaves(rng), 1, 9, rng);
    Digraph g = instantiate_tree(t);
    std::ostringstream out;
    format_graph(g, out);
    Digraph back = from_text(out.str());
    CHECK(back.n == g.n);
    CHECK(testutil::arc_multiset(back) == testutil::arc_multiset(g));
  }
}

TEST_CASE("tree parsing and formatting") {
  DecompTree t = parse_tree("(a 1 2 4)");
  CHECK(t.leaf_count() == 1);
  CHECK(format_tree(t) == "(a 1 2 4)");

  t = parse_tree("(P (S (a 1 2 1) (a 2 4 1)) (S (a 1 3 1) (a 3 4 1)))");
  CHECK(t.leaf_count() == 4);
  CHECK(format_tree(t) == "(P (S (a 1 2 1) (a 2 4 1)) (S (a 1 3 1) (a 3 4 1)))");

  t = parse_tree("  ( S ( a 1 2 3 )\n ( a 2 3 1 ) ) ");
  CHECK(format_tree(t) == "(S (a 1 2 3) (a 2 3 1))");
}

TEST_CASE("tree parsing failures") {
  CHECK_THROWS_AS(parse_tree(""), ParseError);
  CHECK_THROWS_AS(parse_tree("(a 1 2)"), ParseError);
  CHECK_THROWS_AS(parse_tree("(a 1 2 4"), ParseError);
  CHECK_THROWS_AS(parse_tree("(a 1 2 4) extra"), ParseError);
  CHECK_THROWS_AS(parse_tree("(X (a 1 2 1) (a 2 3 1))"), ParseError);
  CHECK_THROWS_AS(parse_tree("(S (a 1 2 1))"), ParseError);
  CHECK_THROWS_AS(parse_tree("(a 0 2 1)"), ParseError);
  CHECK_THROWS_AS(parse_tree("(a 2 2 1)"), ParseError);
  CHECK_THROWS_AS(parse_tree("(a 1 2 0)"), ParseError);
  CHECK_THROWS_AS(parse_tree("(a one 2 1)"), ParseError);
}

TEST_CASE("tree round trip") {
  std::mt19937_64 rng(3002);
  std::uniform_int_distribution<int> leaves(1, 10);
  for (int it = 0; it < 200; ++it) {
    DecompTree t = oracle::random_decomp_tree(leaves(rng), 1, 9, rng);
    instantiate_tree(t);
    std::string text = format_tree(t);
    DecompTree back = parse_tree(text);
    CHECK(format_tree(back) == text);
    CHECK(testutil::arc_multiset(evaluate_tree(back)) ==
          testutil::arc_multiset(evaluate_tree(t)));
  }
}

}  // TEST_SUITE
