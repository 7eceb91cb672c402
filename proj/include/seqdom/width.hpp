#pragma once

#include <cstdint>
#include <vector>

#include "seqdom/intseq.hpp"
#include "seqdom/mergedom.hpp"
#include "seqdom/spdigraph.hpp"

namespace seqdom {

struct WidthResult {
  std::int64_t value = 0;
  std::vector<int> order;  // certificate: order[k] is the vertex at position k
};

// Weighted size of every gap of the order: entry k sums the weights of arcs
// whose tail sits at position <= k and head at position > k.  Throws
// GraphError when the order is not topological.
IntSeq cut_size_sequence(const Digraph& g, const std::vector<int>& order);

// Maximum number of arcs crossing a gap (weights ignored).
std::int64_t cutwidth_of_order(const Digraph& g, const std::vector<int>& order);

// Maximum over gaps of the weighted cut size.
std::int64_t weighted_cutwidth_of_order(const Digraph& g, const std::vector<int>& order);

// Maximum number of arcs passing over a vertex: tail strictly before it,
// head strictly after (weights ignored).
std::int64_t modified_cutwidth_of_order(const Digraph& g, const std::vector<int>& order);

// Merges two orders that share their first and last vertex along a
// non-diagonal grid path over the (|a|-1) x (|b|-1) grid: a row step places
// the next interior vertex of a, a column step the next interior vertex of b.
std::vector<int> interleave_orders(const std::vector<int>& a,
                                   const std::vector<int>& b, const GridPath& p);

struct NodeSolution {
  std::vector<int> order;
  std::vector<std::int64_t> cut_sizes;
};

// Bottom-up table over the decomposition tree of a simple series-parallel
// digraph: for every tree node, a topological order of its subgraph whose
// cut-size sequence dominates the one of every topological order of that
// subgraph.  Indexed like t.nodes.
std::vector<NodeSolution> dominating_orders(const Digraph& g, const DecompTree& t);

// Optimal weighted cutwidth with an optimal order as certificate.  Parallel
// arcs are subdivided first; the order is reported on the input's vertices.
// Throws NotSeriesParallelError when g is not series parallel (a supplied
// tree skips recognition and is validated instead).
WidthResult spd_weighted_cutwidth(const Digraph& g);
WidthResult spd_weighted_cutwidth(const Digraph& g, const DecompTree& t);

// Optimal cutwidth: the weighted solver on unit weights.
WidthResult spd_cutwidth(const Digraph& g);
WidthResult spd_cutwidth(const Digraph& g, const DecompTree& t);

// Weighted digraph whose optimal weighted cutwidth encodes the modified
// cutwidth of a simple g: every interior vertex v splits into in/out halves
// joined by an arc of weight |arcs|+1, original arcs carry weight 1.
struct McwTransform {
  Digraph graph;
  std::vector<int> in_vertex;   // per vertex of the input
  std::vector<int> out_vertex;  // terminals keep a single id in both maps
};
McwTransform mcw_transform(const Digraph& g);

// Optimal modified cutwidth with an optimal order as certificate.
WidthResult spd_modified_cutwidth(const Digraph& g);
WidthResult spd_modified_cutwidth(const Digraph& g, const DecompTree& t);

}  // namespace seqdom
