#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "seqdom/errors.hpp"
#include "seqdom/io.hpp"
#include "seqdom/oracle.hpp"
#include "seqdom/spdigraph.hpp"
#include "testutil.hpp"

using namespace seqdom;

namespace {

Digraph diamond() {
  Digraph g;
  g.n = 4;
  g.arcs = {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}};
  g.source = 0;
  g.sink = 3;
  return g;
}

std::vector<std::tuple<int, int, std::int64_t>> leaf_arc_multiset(const DecompTree& t) {
  std::vector<std::tuple<int, int, std::int64_t>> out;
  for (int id : leaves_in_order(t)) {
    const Arc& a = t.nodes[static_cast<std::size_t>(id)].arc;
    out.emplace_back(a.tail, a.head, a.weight);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("spdigraph") {

TEST_CASE("digraph validation") {
  CHECK_NOTHROW(validate_digraph(single_arc(5)));
  Digraph g = single_arc(1);
  g.arcs[0].weight = 0;
  CHECK_THROWS_AS(validate_digraph(g), GraphError);
  g = single_arc(1);
  g.arcs[0].head = 7;
  CHECK_THROWS_AS(validate_digraph(g), GraphError);
  g = single_arc(1);
  g.arcs[0].head = 0;
  CHECK_THROWS_AS(validate_digraph(g), GraphError);
  g = single_arc(1);
  g.sink = 9;
  CHECK_THROWS_AS(validate_digraph(g), GraphError);
  g = single_arc(1);
  g.sink = 0;
  CHECK_THROWS_AS(validate_digraph(g), GraphError);
}

TEST_CASE("terminal inference") {
  Digraph g = diamond();
  g.source = g.sink = -1;
  infer_terminals(g);
  CHECK(g.source == 0);
  CHECK(g.sink == 3);

  Digraph two_sources;
  two_sources.n = 3;
  two_sources.arcs = {{0, 2, 1}, {1, 2, 1}};
  CHECK_THROWS_AS(infer_terminals(two_sources), GraphError);

  Digraph two_sinks;
  two_sinks.n = 3;
  two_sinks.arcs = {{0, 1, 1}, {0, 2, 1}};
  CHECK_THROWS_AS(infer_terminals(two_sinks), GraphError);
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(diamond()));
  Digraph g;
  g.n = 3;
  g.arcs = {{0, 1, 1}, {1, 2, 1}, {1, 0, 1}};
  g.source = 0;
  g.sink = 2;
  CHECK_FALSE(is_acyclic(g));
}

TEST_CASE("series and parallel composition") {
  Digraph a = single_arc(1);
  Digraph p3 = compose_series(a, a);
  CHECK(p3.n == 3);
  CHECK(testutil::arc_multiset(p3) ==
        std::vector<std::tuple<int, int, std::int64_t>>{{0, 1, 1}, {1, 2, 1}});
  CHECK(p3.source == 0);
  CHECK(p3.sink == 2);

  Digraph par = compose_parallel(a, a);
  CHECK(par.n == 2);
  CHECK(testutil::arc_multiset(par) ==
        std::vector<std::tuple<int, int, std::int64_t>>{{0, 1, 1}, {0, 1, 1}});
  CHECK(par.source == 0);
  CHECK(par.sink == 1);

  Digraph chain = compose_series(par, a);
  CHECK(chain.n == 3);
  CHECK(chain.arcs.size() == 3);
  CHECK(is_acyclic(chain));
}

TEST_CASE("tree construction and evaluation") {
  DecompTree t;
  int l1 = t.add_leaf(Arc{0, 1, 2});
  int l2 = t.add_leaf(Arc{0, 1, 3});
  t.add_parallel(l1, l2);
  CHECK(t.leaf_count() == 2);
  Digraph g = evaluate_tree(t);
  CHECK(g.n == 2);
  CHECK(testutil::arc_multiset(g) ==
        std::vector<std::tuple<int, int, std::int64_t>>{{0, 1, 2}, {0, 1, 3}});

  DecompTree leaf;
  leaf.add_leaf(Arc{0, 1, 7});
  Digraph s = evaluate_tree(leaf);
  CHECK(s.n == 2);
  CHECK(s.arcs.size() == 1);
  CHECK(s.arcs[0].weight == 7);
}

TEST_CASE("postorder visits children before parents") {
  DecompTree t;
  int l1 = t.add_leaf(Arc{0, 1, 1});
  int l2 = t.add_leaf(Arc{0, 1, 1});
  int s = t.add_series(l1, l2);
  int l3 = t.add_leaf(Arc{0, 1, 1});
  int root = t.add_parallel(s, l3);
  std::vector<int> order = postorder(t);
  REQUIRE(order.size() == 5);
  CHECK(order.back() == root);
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  CHECK(pos[static_cast<std::size_t>(l1)] < pos[static_cast<std::size_t>(s)]);
  CHECK(pos[static_cast<std::size_t>(l2)] < pos[static_cast<std::size_t>(s)]);
  CHECK(pos[static_cast<std::size_t>(s)] < pos[static_cast<std::size_t>(root)]);
  CHECK(pos[static_cast<std::size_t>(l3)] < pos[static_cast<std::size_t>(root)]);
}

TEST_CASE("instantiated leaves name the arcs of the evaluated graph in order") {
  std::mt19937_64 rng(910);
  for (int it = 0; it < 200; ++it) {
    std::uniform_int_distribution<int> leaves(1, 10);
    DecompTree t = oracle::random_decomp_tree(leaves(rng), 1, 5, rng);
    Digraph g = instantiate_tree(t);
    std::vector<int> lv = leaves_in_order(t);
    REQUIRE(lv.size() == g.arcs.size());
    for (std::size_t k = 0; k < lv.size(); ++k) {
      const Arc& la = t.nodes[static_cast<std::size_t>(lv[k])].arc;
      CHECK(la.tail == g.arcs[k].tail);
      CHECK(la.head == g.arcs[k].head);
      CHECK(la.weight == g.arcs[k].weight);
    }
    CHECK_NOTHROW(validate_tree(t, g));
    CHECK(is_acyclic(g));
  }
}

TEST_CASE("recognition of fixed graphs") {
  Recognition rec = recognize_spd(single_arc(4));
  REQUIRE(rec.verdict == SpdVerdict::spd);
  REQUIRE(rec.tree.has_value());
  CHECK(format_tree(*rec.tree) == "(a 1 2 4)");

  rec = recognize_spd(diamond());
  REQUIRE(rec.verdict == SpdVerdict::spd);
  CHECK(format_tree(*rec.tree) ==
        "(P (S (a 1 2 1) (a 2 4 1)) (S (a 1 3 1) (a 3 4 1)))");
  CHECK(leaf_arc_multiset(*rec.tree) == testutil::arc_multiset(diamond()));
  CHECK_NOTHROW(validate_tree(*rec.tree, diamond()));

  Digraph par;
  par.n = 2;
  par.arcs = {{0, 1, 1}, {0, 1, 1}};
  par.source = 0;
  par.sink = 1;
  rec = recognize_spd(par);
  REQUIRE(rec.verdict == SpdVerdict::spd);
  CHECK(leaf_arc_multiset(*rec.tree) == testutil::arc_multiset(par));
  CHECK_NOTHROW(validate_tree(*rec.tree, par));
}

TEST_CASE("recognition failure verdicts") {
  Digraph cyc;
  cyc.n = 3;
  cyc.arcs = {{0, 1, 1}, {1, 2, 1}, {1, 0, 1}};
  cyc.source = 0;
  cyc.sink = 2;
  CHECK(recognize_spd(cyc).verdict == SpdVerdict::cyclic);

  Digraph bridge;
  bridge.n = 4;
  bridge.arcs = {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}, {1, 2, 1}};
  bridge.source = 0;
  bridge.sink = 3;
  CHECK(recognize_spd(bridge).verdict == SpdVerdict::irreducible);

  Digraph two_sources;
  two_sources.n = 3;
  two_sources.arcs = {{0, 2, 1}, {1, 2, 1}};
  CHECK(recognize_spd(two_sources).verdict == SpdVerdict::bad_terminals);
}

TEST_CASE("recognition round trip on random trees") {
  std::mt19937_64 rng(920);
  std::uniform_int_distribution<int> leaves(1, 10);
  for (int it = 0; it < 300; ++it) {
    DecompTree t = oracle::random_decomp_tree(leaves(rng), 1, 5, rng);
    Digraph g = instantiate_tree(t);
    CHECK(is_acyclic(g));
    Recognition rec = recognize_spd(g);
    REQUIRE_MESSAGE(rec.verdict == SpdVerdict::spd, "graph with ", g.n, " vertices, ",
                    g.arcs.size(), " arcs");
    CHECK(leaf_arc_multiset(*rec.tree) == testutil::arc_multiset(g));
    CHECK_NOTHROW(validate_tree(*rec.tree, g));
  }
}

TEST_CASE("subdivision of parallel arcs") {
  Digraph simple = diamond();
  Digraph out = subdivide_parallel_arcs(simple);
  CHECK(testutil::arc_multiset(out) == testutil::arc_multiset(simple));

  Digraph par;
  par.n = 2;
  par.arcs = {{0, 1, 1}, {0, 1, 1}};
  par.source = 0;
  par.sink = 1;
  out = subdivide_parallel_arcs(par);
  CHECK(out.n == 3);
  CHECK(testutil::arc_multiset(out) ==
        std::vector<std::tuple<int, int, std::int64_t>>{{0, 1, 1}, {0, 2, 1}, {2, 1, 1}});

  Digraph triple;
  triple.n = 2;
  triple.arcs = {{0, 1, 1}, {0, 1, 2}, {0, 1, 5}};
  triple.source = 0;
  triple.sink = 1;
  out = subdivide_parallel_arcs(triple);
  CHECK(out.n == 4);
  CHECK(testutil::arc_multiset(out) ==
        std::vector<std::tuple<int, int, std::int64_t>>{
            {0, 1, 1}, {0, 2, 2}, {0, 3, 5}, {2, 1, 2}, {3, 1, 5}});
  CHECK(recognize_spd(out).verdict == SpdVerdict::spd);
}

TEST_CASE("subdivision preserves weighted cutwidth") {
  std::mt19937_64 rng(930);
  std::uniform_int_distribution<int> leaves(1, 6);
  int done = 0;
  while (done < 150) {
    DecompTree t = oracle::random_decomp_tree(leaves(rng), 1, 5, rng);
    Digraph g = instantiate_tree(t);
    if (g.n > 8) continue;
    ++done;
    Digraph h = subdivide_parallel_arcs(g);
    std::int64_t before = oracle::brute_weighted_cutwidth(g).value;
    std::int64_t after = oracle::brute_weighted_cutwidth(h, 14).value;
    REQUIRE_MESSAGE(before == after, "graph with ", g.arcs.size(), " arcs");
    CHECK(recognize_spd(h).verdict == SpdVerdict::spd);
  }
}

TEST_CASE("subdivision with a matching tree rewrite") {
  std::mt19937_64 rng(940);
  std::uniform_int_distribution<int> leaves(1, 8);
  for (int it = 0; it < 200; ++it) {
    DecompTree t = oracle::random_decomp_tree(leaves(rng), 1, 5, rng);
    Digraph g = instantiate_tree(t);
    auto [h, th] = subdivide_parallel_arcs(g, t);
    CHECK_NOTHROW(validate_tree(th, h));
    CHECK(leaf_arc_multiset(th) == testutil::arc_multiset(h));
    std::vector<std::tuple<int, int, std::int64_t>> ms = testutil::arc_multiset(h);
    CHECK(std::adjacent_find(ms.begin(), ms.end(), [](const auto& x, const auto& y) {
            return std::get<0>(x) == std::get<0>(y) && std::get<1>(x) == std::get<1>(y);
          }) == ms.end());
  }
}

TEST_CASE("topological order predicate") {
  Digraph a = single_arc(1);
  CHECK(is_topological_order(a, {0, 1}));
  CHECK_FALSE(is_topological_order(a, {1, 0}));
  CHECK(is_topological_order(diamond(), {0, 1, 2, 3}));
  CHECK(is_topological_order(diamond(), {0, 2, 1, 3}));
  CHECK_FALSE(is_topological_order(diamond(), {0, 3, 1, 2}));
  CHECK_THROWS_AS(is_topological_order(a, {0, 0}), GraphError);
  CHECK_THROWS_AS(is_topological_order(a, {0}), GraphError);
}

}  // TEST_SUITE
