#include "seqdom/oracle.hpp"

#include <algorithm>
#include <cstddef>

#include "seqdom/errors.hpp"

namespace seqdom::oracle {

void enumerate_topological_orders(
    const Digraph& g, const std::function<bool(const std::vector<int>&)>& fn) {
  validate_digraph(g);
  if (!is_acyclic(g)) throw GraphError("digraph contains a cycle");
  std::vector<int> indeg(static_cast<std::size_t>(g.n), 0);
  std::vector<std::vector<int>> heads(static_cast<std::size_t>(g.n));
  for (const Arc& a : g.arcs) {
    ++indeg[static_cast<std::size_t>(a.head)];
    heads[static_cast<std::size_t>(a.tail)].push_back(a.head);
  }
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.n));
  std::vector<char> used(static_cast<std::size_t>(g.n), 0);
  bool stop = false;
  auto rec = [&](auto&& self) -> void {
    if (stop) return;
    if (order.size() == static_cast<std::size_t>(g.n)) {
      if (!fn(order)) stop = true;
      return;
    }
    for (int v = 0; v < g.n && !stop; ++v) {
      std::size_t vi = static_cast<std::size_t>(v);
      if (used[vi] || indeg[vi] != 0) continue;
      used[vi] = 1;
      order.push_back(v);
      for (int h : heads[vi]) --indeg[static_cast<std::size_t>(h)];
      self(self);
      for (int h : heads[vi]) ++indeg[static_cast<std::size_t>(h)];
      order.pop_back();
      used[vi] = 0;
    }
  };
  rec(rec);
}

std::vector<std::vector<int>> all_topological_orders(const Digraph& g) {
  std::vector<std::vector<int>> out;
  enumerate_topological_orders(g, [&](const std::vector<int>& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

namespace {

WidthResult brute_min(const Digraph& g, int max_n,
                      std::int64_t (*eval)(const Digraph&, const std::vector<int>&)) {
  if (g.n > max_n) throw BoundError("oracle size bound exceeded");
  if (g.n < 2) throw GraphError("graph must have at least 2 vertices");
  WidthResult best;
  bool have = false;
  enumerate_topological_orders(g, [&](const std::vector<int>& o) {
    std::int64_t v = eval(g, o);
    if (!have || v < best.value) {
      best.value = v;
      best.order = o;
      have = true;
    }
    return true;
  });
  return best;
}

}  // namespace

WidthResult brute_cutwidth(const Digraph& g, int max_n) {
  return brute_min(g, max_n, &cutwidth_of_order);
}

WidthResult brute_weighted_cutwidth(const Digraph& g, int max_n) {
  return brute_min(g, max_n, &weighted_cutwidth_of_order);
}

WidthResult brute_modified_cutwidth(const Digraph& g, int max_n) {
  return brute_min(g, max_n, &modified_cutwidth_of_order);
}

void enumerate_merges(const IntSeq& r, const IntSeq& c,
                      const std::function<bool(const GridPath&)>& fn,
                      std::size_t max_dims) {
  if (r.size() + c.size() > max_dims) throw BoundError("oracle size bound exceeded");
  std::size_t m = r.size();
  std::size_t n = c.size();
  GridPath p;
  p.cells.push_back({0, 0});
  bool stop = false;
  auto rec = [&](auto&& self) -> void {
    if (stop) return;
    Cell cur = p.cells.back();
    if (cur.row == m - 1 && cur.col == n - 1) {
      if (!fn(p)) stop = true;
      return;
    }
    if (cur.row + 1 < m) {
      p.cells.push_back({cur.row + 1, cur.col});
      self(self);
      p.cells.pop_back();
    }
    if (cur.col + 1 < n && !stop) {
      p.cells.push_back({cur.row, cur.col + 1});
      self(self);
      p.cells.pop_back();
    }
    if (cur.row + 1 < m && cur.col + 1 < n && !stop) {
      p.cells.push_back({cur.row + 1, cur.col + 1});
      self(self);
      p.cells.pop_back();
    }
  };
  rec(rec);
}

bool brute_dominating_check(const IntSeq& r, const IntSeq& c,
                            const GridPath& candidate, std::size_t max_dims) {
  MergeContext ctx{r, c};
  IntSeq cand = path_values(ctx, candidate);
  bool ok = true;
  enumerate_merges(r, c,
                   [&](const GridPath& p) {
                     if (!dominates(cand, path_values(ctx, p))) {
                       ok = false;
                       return false;
                     }
                     return true;
                   },
                   max_dims);
  return ok;
}

std::int64_t delannoy(std::size_t a, std::size_t b) {
  std::vector<std::vector<std::int64_t>> d(a + 1, std::vector<std::int64_t>(b + 1, 1));
  for (std::size_t i = 1; i <= a; ++i)
    for (std::size_t j = 1; j <= b; ++j)
      d[i][j] = checked_add(checked_add(d[i - 1][j], d[i][j - 1]), d[i - 1][j - 1]);
  return d[a][b];
}

namespace {

int build_random_tree(DecompTree& t, int leaves, std::int64_t wlo, std::int64_t whi,
                      std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> wdist(wlo, whi);
  if (leaves == 1) return t.add_leaf(Arc{0, 1, wdist(rng)});
  std::uniform_int_distribution<int> split(1, leaves - 1);
  int nl = split(rng);
  int left = build_random_tree(t, nl, wlo, whi, rng);
  int right = build_random_tree(t, leaves - nl, wlo, whi, rng);
  std::uniform_int_distribution<int> coin(0, 1);
  return coin(rng) == 0 ? t.add_series(left, right) : t.add_parallel(left, right);
}

int build_with_vertices(DecompTree& t, int n, std::int64_t wlo, std::int64_t whi,
                        std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> wdist(wlo, whi);
  if (n == 2) return t.add_leaf(Arc{0, 1, wdist(rng)});
  std::uniform_int_distribution<int> coin(0, 1);
  // parallel needs >= 3 vertices per side so the composition stays simple
  bool par = n >= 4 && coin(rng) == 0;
  if (par) {
    std::uniform_int_distribution<int> split(3, n - 1);
    int n1 = split(rng);
    int left = build_with_vertices(t, n1, wlo, whi, rng);
    int right = build_with_vertices(t, n + 2 - n1, wlo, whi, rng);
    return t.add_parallel(left, right);
  }
  std::uniform_int_distribution<int> split(2, n - 1);
  int n1 = split(rng);
  int left = build_with_vertices(t, n1, wlo, whi, rng);
  int right = build_with_vertices(t, n + 1 - n1, wlo, whi, rng);
  return t.add_series(left, right);
}

}  // namespace

DecompTree random_decomp_tree(int leaves, std::int64_t wlo, std::int64_t whi,
                              std::mt19937_64& rng) {
  if (leaves < 1) throw std::invalid_argument("tree needs at least one leaf");
  DecompTree t;
  t.root = build_random_tree(t, leaves, wlo, whi, rng);
  return t;
}

DecompTree random_spd_tree_with_vertices(int n, std::int64_t wlo, std::int64_t whi,
                                         std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("graph needs at least two vertices");
  DecompTree t;
  t.root = build_with_vertices(t, n, wlo, whi, rng);
  return t;
}

}  // namespace seqdom::oracle
