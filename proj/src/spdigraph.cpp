#include "seqdom/spdigraph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <unordered_map>

#include "seqdom/errors.hpp"

namespace seqdom {

Digraph single_arc(std::int64_t weight) {
  if (weight < 1) throw GraphError("arc weight must be >= 1");
  return Digraph{2, {{0, 1, weight}}, 0, 1};
}

void validate_digraph(const Digraph& g) {
  if (g.n < 0) throw GraphError("negative vertex count");
  for (const Arc& a : g.arcs) {
    if (a.tail < 0 || a.tail >= g.n || a.head < 0 || a.head >= g.n)
      throw GraphError("arc endpoint out of range");
    if (a.tail == a.head) throw GraphError("self-loop");
    if (a.weight < 1) throw GraphError("arc weight must be >= 1");
  }
  for (int t : {g.source, g.sink})
    if (t != -1 && (t < 0 || t >= g.n)) throw GraphError("terminal out of range");
  if (g.source >= 0 && g.source == g.sink)
    throw GraphError("source and sink coincide");
}

void infer_terminals(Digraph& g) {
  std::vector<int> indeg(g.n, 0), outdeg(g.n, 0);
  for (const Arc& a : g.arcs) {
    ++outdeg[a.tail];
    ++indeg[a.head];
  }
  int src = -1, snk = -1;
  for (int v = 0; v < g.n; ++v) {
    if (indeg[v] == 0) {
      if (src != -1) throw GraphError("no unique source vertex");
      src = v;
    }
    if (outdeg[v] == 0) {
      if (snk != -1) throw GraphError("no unique sink vertex");
      snk = v;
    }
  }
  if (src == -1) throw GraphError("no unique source vertex");
  if (snk == -1) throw GraphError("no unique sink vertex");
  if (src == snk) throw GraphError("source and sink coincide");
  g.source = src;
  g.sink = snk;
}

bool is_acyclic(const Digraph& g) {
  std::vector<int> indeg(g.n, 0);
  std::vector<std::vector<int>> heads(g.n);
  for (const Arc& a : g.arcs) {
    ++indeg[a.head];
    heads[a.tail].push_back(a.head);
  }
  std::deque<int> ready;
  for (int v = 0; v < g.n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop_front();
    ++seen;
    for (int h : heads[v])
      if (--indeg[h] == 0) ready.push_back(h);
  }
  return seen == g.n;
}

namespace {

void require_terminals(const Digraph& g) {
  if (g.source < 0 || g.sink < 0) throw GraphError("terminals not set");
}

// b's source is glued to a's sink; b's other vertices follow a's ids in
// their original relative order.
void append_series(Digraph& a, const Digraph& b) {
  require_terminals(a);
  require_terminals(b);
  const int base = a.n;
  const auto map = [&](int v) {
    if (v == b.source) return a.sink;
    return base + v - (v > b.source ? 1 : 0);
  };
  for (const Arc& arc : b.arcs)
    a.arcs.push_back({map(arc.tail), map(arc.head), arc.weight});
  a.sink = map(b.sink);
  a.n = base + b.n - 1;
}

void append_parallel(Digraph& a, const Digraph& b) {
  require_terminals(a);
  require_terminals(b);
  const int base = a.n;
  const auto map = [&](int v) {
    if (v == b.source) return a.source;
    if (v == b.sink) return a.sink;
    return base + v - (v > b.source ? 1 : 0) - (v > b.sink ? 1 : 0);
  };
  for (const Arc& arc : b.arcs)
    a.arcs.push_back({map(arc.tail), map(arc.head), arc.weight});
  a.n = base + b.n - 2;
}

}  // namespace

Digraph compose_series(const Digraph& a, const Digraph& b) {
  Digraph out = a;
  append_series(out, b);
  return out;
}

Digraph compose_parallel(const Digraph& a, const Digraph& b) {
  Digraph out = a;
  append_parallel(out, b);
  return out;
}

int DecompTree::add_leaf(Arc a) {
  nodes.push_back({Kind::leaf, -1, -1, a});
  root = static_cast<int>(nodes.size()) - 1;
  return root;
}

int DecompTree::add_series(int left, int right) {
  nodes.push_back({Kind::series, left, right, {}});
  root = static_cast<int>(nodes.size()) - 1;
  return root;
}

int DecompTree::add_parallel(int left, int right) {
  nodes.push_back({Kind::parallel, left, right, {}});
  root = static_cast<int>(nodes.size()) - 1;
  return root;
}

std::size_t DecompTree::leaf_count() const {
  std::size_t k = 0;
  for (const Node& node : nodes)
    if (node.kind == Kind::leaf) ++k;
  return k;
}

std::vector<int> postorder(const DecompTree& t) {
  const int total = static_cast<int>(t.nodes.size());
  if (t.root < 0 || t.root >= total) throw GraphError("malformed tree");
  std::vector<int> out;
  out.reserve(t.nodes.size());
  std::vector<char> seen(t.nodes.size(), 0);
  std::vector<std::pair<int, int>> stack{{t.root, 0}};
  while (!stack.empty()) {
    const auto [id, stage] = stack.back();
    const DecompTree::Node& node = t.nodes[id];
    if (stage == 0) {
      if (seen[id]) throw GraphError("malformed tree");
      seen[id] = 1;
      if (node.kind == DecompTree::Kind::leaf) {
        if (node.left != -1 || node.right != -1) throw GraphError("malformed tree");
        out.push_back(id);
        stack.pop_back();
        continue;
      }
      if (node.left < 0 || node.left >= total || node.right < 0 || node.right >= total)
        throw GraphError("malformed tree");
      stack.back().second = 1;
      stack.push_back({node.left, 0});
    } else if (stage == 1) {
      stack.back().second = 2;
      stack.push_back({node.right, 0});
    } else {
      out.push_back(id);
      stack.pop_back();
    }
  }
  if (out.size() != t.nodes.size()) throw GraphError("malformed tree");
  return out;
}

std::vector<int> leaves_in_order(const DecompTree& t) {
  std::vector<int> out;
  for (int id : postorder(t))
    if (t.nodes[id].kind == DecompTree::Kind::leaf) out.push_back(id);
  return out;
}

Digraph evaluate_tree(const DecompTree& t) {
  std::vector<std::optional<Digraph>> res(t.nodes.size());
  for (int id : postorder(t)) {
    const DecompTree::Node& node = t.nodes[id];
    if (node.kind == DecompTree::Kind::leaf) {
      res[id] = single_arc(node.arc.weight);
      continue;
    }
    Digraph g = std::move(*res[node.left]);
    if (node.kind == DecompTree::Kind::series)
      append_series(g, *res[node.right]);
    else
      append_parallel(g, *res[node.right]);
    res[node.left].reset();
    res[node.right].reset();
    res[id] = std::move(g);
  }
  return std::move(*res[t.root]);
}

Digraph instantiate_tree(DecompTree& t) {
  Digraph g = evaluate_tree(t);
  const std::vector<int> lv = leaves_in_order(t);
  assert(lv.size() == g.arcs.size());
  for (std::size_t k = 0; k < lv.size(); ++k) t.nodes[lv[k]].arc = g.arcs[k];
  return g;
}

void validate_tree(const DecompTree& t, const Digraph& g) {
  validate_digraph(g);
  Digraph expect = g;
  if (expect.source < 0 || expect.sink < 0) infer_terminals(expect);

  const Digraph h = evaluate_tree(t);
  if (h.n != expect.n || h.arcs.size() != expect.arcs.size())
    throw GraphError("tree does not match digraph");

  // Leaf ids must relabel the fresh evaluation consistently.
  const std::vector<int> lv = leaves_in_order(t);
  std::vector<int> phi(h.n, -1);
  const auto bind = [&](int hv, int gv) {
    if (gv < 0 || gv >= expect.n) throw GraphError("tree leaf names an unknown vertex");
    if (phi[hv] == -1)
      phi[hv] = gv;
    else if (phi[hv] != gv)
      throw GraphError("tree does not match digraph");
  };
  for (std::size_t k = 0; k < lv.size(); ++k) {
    const Arc claimed = t.nodes[lv[k]].arc;
    bind(h.arcs[k].tail, claimed.tail);
    bind(h.arcs[k].head, claimed.head);
    if (h.arcs[k].weight != claimed.weight)
      throw GraphError("tree does not match digraph");
  }
  std::vector<char> hit(expect.n, 0);
  for (int v = 0; v < h.n; ++v) {
    if (phi[v] == -1 || hit[phi[v]]) throw GraphError("tree does not match digraph");
    hit[phi[v]] = 1;
  }
  if (phi[h.source] != expect.source || phi[h.sink] != expect.sink)
    throw GraphError("tree terminals do not match digraph");

  auto key = [](const Arc& a) { return std::tuple{a.tail, a.head, a.weight}; };
  std::vector<std::tuple<int, int, std::int64_t>> lhs, rhs;
  for (std::size_t k = 0; k < lv.size(); ++k) lhs.push_back(key(t.nodes[lv[k]].arc));
  for (const Arc& a : expect.arcs) rhs.push_back(key(a));
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  if (lhs != rhs) throw GraphError("tree does not match digraph");
}

Recognition recognize_spd(const Digraph& g) {
  validate_digraph(g);
  if (g.n < 2) throw GraphError("graph must have at least 2 vertices");
  Digraph w = g;
  if (w.source < 0 || w.sink < 0) {
    try {
      infer_terminals(w);
    } catch (const GraphError& e) {
      return {SpdVerdict::bad_terminals, std::nullopt, e.what()};
    }
  }
  if (!is_acyclic(w))
    return {SpdVerdict::cyclic, std::nullopt, "digraph contains a cycle"};

  DecompTree tree;
  struct RArc {
    int tail, head, tnode;
    bool alive;
  };
  std::vector<RArc> arcs;
  std::vector<std::set<int>> ins(w.n), outs(w.n);
  std::vector<std::unordered_map<int, int>> by_tail(w.n);

  const auto insert_arc = [&](int tail, int head, int tnode) {
    const auto it = by_tail[tail].find(head);
    if (it != by_tail[tail].end() && arcs[it->second].alive) {
      arcs[it->second].tnode = tree.add_parallel(arcs[it->second].tnode, tnode);
      return;
    }
    const int id = static_cast<int>(arcs.size());
    arcs.push_back({tail, head, tnode, true});
    by_tail[tail][head] = id;
    ins[head].insert(id);
    outs[tail].insert(id);
  };
  const auto remove_arc = [&](int id) {
    arcs[id].alive = false;
    ins[arcs[id].head].erase(id);
    outs[arcs[id].tail].erase(id);
    auto& m = by_tail[arcs[id].tail];
    const auto it = m.find(arcs[id].head);
    if (it != m.end() && it->second == id) m.erase(it);
  };

  for (const Arc& a : w.arcs) insert_arc(a.tail, a.head, tree.add_leaf(a));

  std::deque<int> queue;
  for (int v = 0; v < w.n; ++v)
    if (v != w.source && v != w.sink) queue.push_back(v);
  std::vector<char> dead(w.n, 0);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (dead[v] || v == w.source || v == w.sink) continue;
    if (ins[v].size() != 1 || outs[v].size() != 1) continue;
    const int e1 = *ins[v].begin(), e2 = *outs[v].begin();
    const int u = arcs[e1].tail, x = arcs[e2].head;
    assert(u != x);
    const int tnode = tree.add_series(arcs[e1].tnode, arcs[e2].tnode);
    remove_arc(e1);
    remove_arc(e2);
    dead[v] = 1;
    insert_arc(u, x, tnode);
    queue.push_back(u);
    queue.push_back(x);
  }

  int last = -1, alive = 0, consumed = 0;
  for (std::size_t id = 0; id < arcs.size(); ++id)
    if (arcs[id].alive) {
      ++alive;
      last = static_cast<int>(id);
    }
  for (int v = 0; v < w.n; ++v) consumed += dead[v];
  if (alive == 1 && arcs[last].tail == w.source && arcs[last].head == w.sink &&
      consumed == w.n - 2) {
    tree.root = arcs[last].tnode;
    return {SpdVerdict::spd, std::move(tree), ""};
  }
  return {SpdVerdict::irreducible, std::nullopt,
          "no series or parallel reduction applies"};
}

Digraph subdivide_parallel_arcs(const Digraph& g) {
  validate_digraph(g);
  Digraph out{g.n, {}, g.source, g.sink};
  std::set<std::pair<int, int>> seen;
  int next = g.n;
  for (const Arc& a : g.arcs) {
    if (seen.insert({a.tail, a.head}).second) {
      out.arcs.push_back(a);
    } else {
      const int z = next++;
      out.arcs.push_back({a.tail, z, a.weight});
      out.arcs.push_back({z, a.head, a.weight});
    }
  }
  out.n = next;
  return out;
}

std::pair<Digraph, DecompTree> subdivide_parallel_arcs(const Digraph& g,
                                                       const DecompTree& t) {
  validate_digraph(g);
  DecompTree out = t;
  std::set<std::pair<int, int>> seen;
  int next = g.n;
  for (int id : leaves_in_order(t)) {
    const Arc a = out.nodes[id].arc;
    if (!seen.insert({a.tail, a.head}).second) {
      const int z = next++;
      const int l = static_cast<int>(out.nodes.size());
      out.nodes.push_back({DecompTree::Kind::leaf, -1, -1, {a.tail, z, a.weight}});
      const int r = static_cast<int>(out.nodes.size());
      out.nodes.push_back({DecompTree::Kind::leaf, -1, -1, {z, a.head, a.weight}});
      out.nodes[id] = {DecompTree::Kind::series, l, r, {}};
    }
  }
  Digraph h{next, {}, g.source, g.sink};
  for (int id : leaves_in_order(out)) h.arcs.push_back(out.nodes[id].arc);
  return {std::move(h), std::move(out)};
}

bool is_topological_order(const Digraph& g, const std::vector<int>& order) {
  if (order.size() != static_cast<std::size_t>(g.n))
    throw GraphError("order is not a permutation of the vertices");
  std::vector<int> pos(g.n, -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] < 0 || order[k] >= g.n || pos[order[k]] != -1)
      throw GraphError("order is not a permutation of the vertices");
    pos[order[k]] = static_cast<int>(k);
  }
  for (const Arc& a : g.arcs)
    if (pos[a.tail] >= pos[a.head]) return false;
  return true;
}

}  // namespace seqdom
