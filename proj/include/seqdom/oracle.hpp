#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "seqdom/intseq.hpp"
#include "seqdom/mergedom.hpp"
#include "seqdom/spdigraph.hpp"
#include "seqdom/width.hpp"

namespace seqdom::oracle {

// Visits every topological order once, in ascending lexicographic vertex
// order; fn returning false stops the enumeration.  Throws GraphError when
// the digraph is cyclic.
void enumerate_topological_orders(
    const Digraph& g, const std::function<bool(const std::vector<int>&)>& fn);

std::vector<std::vector<int>> all_topological_orders(const Digraph& g);

// Exhaustive minima over all topological orders; the first order attaining
// the optimum is returned.  Throws BoundError when g.n > max_n.
WidthResult brute_cutwidth(const Digraph& g, int max_n = 10);
WidthResult brute_weighted_cutwidth(const Digraph& g, int max_n = 10);
WidthResult brute_modified_cutwidth(const Digraph& g, int max_n = 10);

// Visits every staircase path of the |r| x |c| grid, diagonal steps
// included, in depth-first order (row step, column step, diagonal step).
// Throws BoundError when |r|+|c| > max_dims.
void enumerate_merges(const IntSeq& r, const IntSeq& c,
                      const std::function<bool(const GridPath&)>& fn,
                      std::size_t max_dims = 14);

// True iff candidate's values dominate the values of every path of the grid.
bool brute_dominating_check(const IntSeq& r, const IntSeq& c,
                            const GridPath& candidate, std::size_t max_dims = 14);

// Number of monotone staircase paths of an (a+1) x (b+1) grid.
std::int64_t delannoy(std::size_t a, std::size_t b);

// Uniformly shaped random decomposition tree with the given number of
// leaves; leaf weights drawn from [wlo, whi].
DecompTree random_decomp_tree(int leaves, std::int64_t wlo, std::int64_t whi,
                              std::mt19937_64& rng);

// Random tree whose composition has exactly n >= 2 vertices.  Parallel
// splits keep at least 3 vertices per side, so the composed digraph is
// always simple.
DecompTree random_spd_tree_with_vertices(int n, std::int64_t wlo, std::int64_t whi,
                                         std::mt19937_64& rng);

}  // namespace seqdom::oracle
