#include "seqdom/width.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "seqdom/errors.hpp"

namespace seqdom {

namespace {

std::vector<int> positions(const Digraph& g, const std::vector<int>& order) {
  if (order.size() != static_cast<std::size_t>(g.n))
    throw GraphError("order is not a permutation of the vertices");
  std::vector<int> pos(g.n, -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] < 0 || order[k] >= g.n || pos[order[k]] != -1)
      throw GraphError("order is not a permutation of the vertices");
    pos[order[k]] = static_cast<int>(k);
  }
  return pos;
}

}  // namespace

IntSeq cut_size_sequence(const Digraph& g, const std::vector<int>& order) {
  if (g.n < 2) throw GraphError("order has no gaps");
  const std::vector<int> pos = positions(g, order);
  std::vector<std::int64_t> delta(g.n, 0);
  for (const Arc& a : g.arcs) {
    if (pos[a.tail] >= pos[a.head]) throw GraphError("order is not topological");
    delta[pos[a.tail]] += a.weight;
    delta[pos[a.head]] -= a.weight;
  }
  std::vector<std::int64_t> cuts(g.n - 1);
  std::int64_t run = 0;
  for (int k = 0; k + 1 < g.n; ++k) {
    run = checked_add(run, delta[k]);
    cuts[k] = run;
  }
  return IntSeq(std::move(cuts));
}

std::int64_t weighted_cutwidth_of_order(const Digraph& g, const std::vector<int>& order) {
  return max_value(cut_size_sequence(g, order));
}

std::int64_t cutwidth_of_order(const Digraph& g, const std::vector<int>& order) {
  Digraph unit = g;
  for (Arc& a : unit.arcs) a.weight = 1;
  return weighted_cutwidth_of_order(unit, order);
}

std::int64_t modified_cutwidth_of_order(const Digraph& g, const std::vector<int>& order) {
  const std::vector<int> pos = positions(g, order);
  std::vector<std::int64_t> over(g.n, 0);
  for (const Arc& a : g.arcs) {
    if (pos[a.tail] >= pos[a.head]) throw GraphError("order is not topological");
    // the arc passes over the vertices strictly between its endpoints
    ++over[pos[a.tail] + 1];
    --over[pos[a.head]];
  }
  std::int64_t best = 0, run = 0;
  for (int k = 0; k < g.n; ++k) {
    run += over[k];
    best = std::max(best, run);
  }
  return best;
}

std::vector<int> interleave_orders(const std::vector<int>& a,
                                   const std::vector<int>& b, const GridPath& p) {
  if (a.size() < 2 || b.size() < 2)
    throw std::invalid_argument("orders must have at least two vertices");
  if (a.front() != b.front() || a.back() != b.back())
    throw std::invalid_argument("orders do not share their terminals");
  if (p.cells.size() != a.size() + b.size() - 3)
    throw std::invalid_argument("path length mismatch");
  if (!(p.cells.front() == Cell{0, 0}) ||
      !(p.cells.back() == Cell{a.size() - 2, b.size() - 2}))
    throw std::invalid_argument("path does not span the grid");

  std::vector<int> out;
  out.reserve(a.size() + b.size() - 2);
  out.push_back(a.front());
  for (std::size_t k = 1; k < p.cells.size(); ++k) {
    const Cell prev = p.cells[k - 1], cur = p.cells[k];
    if (cur.row == prev.row + 1 && cur.col == prev.col) {
      out.push_back(a[cur.row]);
    } else if (cur.row == prev.row && cur.col == prev.col + 1) {
      out.push_back(b[cur.col]);
    } else {
      throw std::invalid_argument("diagonal step present");
    }
  }
  out.push_back(a.back());
  return out;
}

namespace {

NodeSolution leaf_solution(const Arc& arc) {
  return {{arc.tail, arc.head}, {arc.weight}};
}

NodeSolution combine_series(NodeSolution left, const NodeSolution& right) {
  if (left.order.back() != right.order.front())
    throw GraphError("series junction mismatch");
  NodeSolution out = std::move(left);
  out.order.insert(out.order.end(), right.order.begin() + 1, right.order.end());
  out.cut_sizes.insert(out.cut_sizes.end(), right.cut_sizes.begin(),
                       right.cut_sizes.end());
  return out;
}

NodeSolution combine_parallel(const NodeSolution& left, const NodeSolution& right) {
  if (left.order.front() != right.order.front() ||
      left.order.back() != right.order.back())
    throw GraphError("parallel terminals mismatch");
  const IntSeq a(left.cut_sizes), b(right.cut_sizes);
  const GridPath p = merge_dominator(a, b);
  NodeSolution out;
  out.order = interleave_orders(left.order, right.order, p);
  out.cut_sizes = path_values(MergeContext{a, b}, p).values();
  return out;
}

// keep == nullptr: children are released as soon as the parent is built,
// so peak memory stays linear for deep trees.
NodeSolution run_dp(const DecompTree& t, std::vector<NodeSolution>* keep) {
  std::vector<std::optional<NodeSolution>> res(t.nodes.size());
  if (keep) keep->assign(t.nodes.size(), {});
  for (int id : postorder(t)) {
    const DecompTree::Node& node = t.nodes[id];
    NodeSolution s;
    if (node.kind == DecompTree::Kind::leaf) {
      s = leaf_solution(node.arc);
    } else if (node.kind == DecompTree::Kind::series) {
      if (keep)
        s = combine_series(*res[node.left], *res[node.right]);
      else
        s = combine_series(std::move(*res[node.left]), *res[node.right]);
    } else {
      s = combine_parallel(*res[node.left], *res[node.right]);
    }
    if (!keep && node.kind != DecompTree::Kind::leaf) {
      res[node.left].reset();
      res[node.right].reset();
    }
    if (keep) (*keep)[id] = s;
    res[id] = std::move(s);
  }
  return std::move(*res[t.root]);
}

void check_simple(const Digraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const Arc& a : g.arcs)
    if (!seen.insert({a.tail, a.head}).second)
      throw GraphError("parallel arcs present");
}

// Terminals inferred in place; recognition failures surface as
// NotSeriesParallelError for the solver entry points.
DecompTree recognize_or_throw(Digraph& g) {
  if (g.source < 0 || g.sink < 0) {
    try {
      infer_terminals(g);
    } catch (const GraphError& e) {
      throw NotSeriesParallelError(e.what());
    }
  }
  Recognition rec = recognize_spd(g);
  if (rec.verdict != SpdVerdict::spd) throw NotSeriesParallelError(rec.detail);
  return std::move(*rec.tree);
}

std::vector<int> project_order(const std::vector<int>& order, int n) {
  std::vector<int> out;
  out.reserve(n);
  for (int v : order)
    if (v < n) out.push_back(v);
  return out;
}

WidthResult weighted_impl(const Digraph& g, const DecompTree& t) {
  auto [g0, t0] = subdivide_parallel_arcs(g, t);
  const NodeSolution root = run_dp(t0, nullptr);
  const std::int64_t value =
      *std::max_element(root.cut_sizes.begin(), root.cut_sizes.end());
  return {value, project_order(root.order, g.n)};
}

// In/out splitting without the simplicity gate: parallel arcs become
// parallel unit arcs, which the weighted solver subdivides soundly.
McwTransform transform_core(const Digraph& g) {
  McwTransform out;
  out.in_vertex.assign(g.n, -1);
  out.out_vertex.assign(g.n, -1);
  int next = 0;
  for (int v = 0; v < g.n; ++v) {
    if (v == g.source || v == g.sink) {
      out.in_vertex[v] = out.out_vertex[v] = next++;
    } else {
      out.in_vertex[v] = next++;
      out.out_vertex[v] = next++;
    }
  }
  const std::int64_t heavy = static_cast<std::int64_t>(g.arcs.size()) + 1;
  out.graph.n = next;
  for (int v = 0; v < g.n; ++v)
    if (v != g.source && v != g.sink)
      out.graph.arcs.push_back({out.in_vertex[v], out.out_vertex[v], heavy});
  for (const Arc& a : g.arcs)
    out.graph.arcs.push_back({out.out_vertex[a.tail], out.in_vertex[a.head], 1});
  out.graph.source = out.out_vertex[g.source];
  out.graph.sink = out.in_vertex[g.sink];
  return out;
}

DecompTree transform_tree(const DecompTree& t, const McwTransform& tr,
                          std::int64_t heavy) {
  std::vector<std::pair<int, int>> term(t.nodes.size());
  std::vector<int> idmap(t.nodes.size(), -1);
  DecompTree out;
  for (int id : postorder(t)) {
    const DecompTree::Node& node = t.nodes[id];
    if (node.kind == DecompTree::Kind::leaf) {
      term[id] = {node.arc.tail, node.arc.head};
      idmap[id] =
          out.add_leaf({tr.out_vertex[node.arc.tail], tr.in_vertex[node.arc.head], 1});
    } else if (node.kind == DecompTree::Kind::series) {
      term[id] = {term[node.left].first, term[node.right].second};
      const int x = term[node.left].second;
      const int hv = out.add_leaf({tr.in_vertex[x], tr.out_vertex[x], heavy});
      const int l = out.add_series(idmap[node.left], hv);
      idmap[id] = out.add_series(l, idmap[node.right]);
    } else {
      term[id] = term[node.left];
      idmap[id] = out.add_parallel(idmap[node.left], idmap[node.right]);
    }
  }
  out.root = idmap[t.root];
  return out;
}

WidthResult modified_impl(const Digraph& g, const DecompTree& t) {
  if (g.n == 2) return {0, {g.source, g.sink}};
  const std::int64_t m = static_cast<std::int64_t>(g.arcs.size());
  const McwTransform tr = transform_core(g);
  const DecompTree t1 = transform_tree(t, tr, m + 1);
  validate_tree(t1, tr.graph);
  const WidthResult wr = weighted_impl(tr.graph, t1);
  const std::int64_t k = wr.value - m - 1;
  assert(k >= 0);

  // Order of g: s first, t last, interior vertices by the position of their
  // in-half in the weighted certificate.
  std::vector<int> pos(tr.graph.n, -1);
  for (std::size_t i = 0; i < wr.order.size(); ++i) pos[wr.order[i]] = static_cast<int>(i);
  std::vector<int> inner;
  for (int v = 0; v < g.n; ++v)
    if (v != g.source && v != g.sink) inner.push_back(v);
  std::sort(inner.begin(), inner.end(),
            [&](int u, int v) { return pos[tr.in_vertex[u]] < pos[tr.in_vertex[v]]; });
  std::vector<int> order{g.source};
  order.insert(order.end(), inner.begin(), inner.end());
  order.push_back(g.sink);
  return {k, order};
}

}  // namespace

std::vector<NodeSolution> dominating_orders(const Digraph& g, const DecompTree& t) {
  validate_digraph(g);
  Digraph gg = g;
  if (gg.source < 0 || gg.sink < 0) infer_terminals(gg);
  check_simple(gg);
  validate_tree(t, gg);
  std::vector<NodeSolution> all;
  run_dp(t, &all);
  return all;
}

WidthResult spd_weighted_cutwidth(const Digraph& g) {
  validate_digraph(g);
  Digraph gg = g;
  const DecompTree t = recognize_or_throw(gg);
  return weighted_impl(gg, t);
}

WidthResult spd_weighted_cutwidth(const Digraph& g, const DecompTree& t) {
  validate_digraph(g);
  Digraph gg = g;
  if (gg.source < 0 || gg.sink < 0) infer_terminals(gg);
  validate_tree(t, gg);
  return weighted_impl(gg, t);
}

WidthResult spd_cutwidth(const Digraph& g) {
  Digraph unit = g;
  for (Arc& a : unit.arcs) a.weight = 1;
  return spd_weighted_cutwidth(unit);
}

WidthResult spd_cutwidth(const Digraph& g, const DecompTree& t) {
  Digraph unit = g;
  for (Arc& a : unit.arcs) a.weight = 1;
  DecompTree tt = t;
  for (DecompTree::Node& node : tt.nodes)
    if (node.kind == DecompTree::Kind::leaf) node.arc.weight = 1;
  return spd_weighted_cutwidth(unit, tt);
}

McwTransform mcw_transform(const Digraph& g) {
  validate_digraph(g);
  Digraph gg = g;
  if (gg.source < 0 || gg.sink < 0) infer_terminals(gg);
  if (gg.n < 2) throw GraphError("graph must have at least 2 vertices");
  check_simple(gg);
  return transform_core(gg);
}

WidthResult spd_modified_cutwidth(const Digraph& g) {
  validate_digraph(g);
  Digraph gg = g;
  const DecompTree t = recognize_or_throw(gg);
  return modified_impl(gg, t);
}

WidthResult spd_modified_cutwidth(const Digraph& g, const DecompTree& t) {
  validate_digraph(g);
  Digraph gg = g;
  if (gg.source < 0 || gg.sink < 0) infer_terminals(gg);
  validate_tree(t, gg);
  return modified_impl(gg, t);
}

}  // namespace seqdom
