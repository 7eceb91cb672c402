#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seqdom {

struct Arc {
  int tail = 0;
  int head = 0;
  std::int64_t weight = 1;
  bool operator==(const Arc&) const = default;
};

// Directed multigraph on vertices 0..n-1 with designated terminals.  No
// self-loops; weights are >= 1.  source/sink stay -1 until set or inferred.
struct Digraph {
  int n = 0;
  std::vector<Arc> arcs;
  int source = -1;
  int sink = -1;
};

// Two vertices joined by one arc, the seed of every composition.
Digraph single_arc(std::int64_t weight);

// Range, self-loop, weight, and terminal checks.  Throws GraphError.
void validate_digraph(const Digraph& g);

// Sets source/sink to the unique vertex of in-degree 0 resp. out-degree 0.
// Throws GraphError when either is missing or ambiguous.
void infer_terminals(Digraph& g);

bool is_acyclic(const Digraph& g);

// Series composition: b's source is identified with a's sink, remaining
// vertices of b are renumbered to follow a's.  Arcs keep their order, a's
// before b's.
Digraph compose_series(const Digraph& a, const Digraph& b);

// Parallel composition: the terminals of b are identified with those of a.
Digraph compose_parallel(const Digraph& a, const Digraph& b);

// Decomposition tree: leaves are arcs, internal nodes series or parallel
// compositions of their two children.  Nodes live in an arena; `root` is the
// index of the top node.
struct DecompTree {
  enum class Kind : std::uint8_t { leaf, series, parallel };
  struct Node {
    Kind kind = Kind::leaf;
    int left = -1;
    int right = -1;
    Arc arc{};
  };
  std::vector<Node> nodes;
  int root = -1;

  int add_leaf(Arc a);
  int add_series(int left, int right);
  int add_parallel(int left, int right);
  std::size_t leaf_count() const;
};

// Children-before-parent listing of all node indices.
std::vector<int> postorder(const DecompTree& t);

// Leaf node indices from left to right.
std::vector<int> leaves_in_order(const DecompTree& t);

// Composes the tree bottom-up on fresh contiguous vertex ids, ignoring the
// ids stored in the leaves.  The k-th arc of the result corresponds to the
// k-th leaf in left-to-right order.
Digraph evaluate_tree(const DecompTree& t);

// evaluate_tree plus write-back: stores the resulting arcs into the leaves,
// so the tree afterwards names the returned graph's vertices.
Digraph instantiate_tree(DecompTree& t);

// Checks that t composes to exactly g: leaf arcs must be a relabeling of a
// fresh evaluation consistent with g's arc multiset and terminals.  Throws
// GraphError on any mismatch.
void validate_tree(const DecompTree& t, const Digraph& g);

enum class SpdVerdict { spd, cyclic, bad_terminals, irreducible };

struct Recognition {
  SpdVerdict verdict = SpdVerdict::irreducible;
  std::optional<DecompTree> tree;  // engaged iff verdict == spd
  std::string detail;
};

// Exhaustive reduction: merges parallel arcs and contracts interior vertices
// of in- and out-degree one until a single arc remains.  Succeeds exactly on
// two-terminal series-parallel digraphs.  Terminals are inferred when unset.
Recognition recognize_spd(const Digraph& g);

// Replaces every duplicate of an already-seen (tail, head) pair by a length-2
// path through a fresh vertex with the same weight on both halves.  Fresh
// vertices are appended after the existing ids.  The first occurrence of each
// pair is kept as is; the output is simple.
Digraph subdivide_parallel_arcs(const Digraph& g);

// Same subdivision applied consistently to a graph and its decomposition
// tree: affected leaves become series nodes over the two half-arcs.
std::pair<Digraph, DecompTree> subdivide_parallel_arcs(const Digraph& g,
                                                       const DecompTree& t);

// order[k] is the vertex at position k.  Throws GraphError when order is not
// a permutation of the vertices.
bool is_topological_order(const Digraph& g, const std::vector<int>& order);

}  // namespace seqdom
