#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "seqdom/intseq.hpp"
#include "seqdom/io.hpp"
#include "seqdom/spdigraph.hpp"

namespace testutil {

inline seqdom::IntSeq random_seq(std::mt19937_64& rng, std::size_t len,
                                 std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::vector<std::int64_t> v(len);
  for (auto& x : v) x = dist(rng);
  return seqdom::IntSeq(std::move(v));
}

// Exact domination reference built from the definition: some pair of
// equal-length extensions compares pointwise.  A witnessing pair never
// needs more than |r|+|s|-1 elements, so the bounded search is exact.
inline bool dominates_by_extensions(const seqdom::IntSeq& r, const seqdom::IntSeq& s) {
  std::size_t m = r.size();
  std::size_t n = s.size();
  std::size_t cap = m + n - 1;

  std::vector<std::vector<std::vector<std::size_t>>> reps(2);
  for (std::size_t side = 0; side < 2; ++side) {
    std::size_t parts = side == 0 ? m : n;
    std::vector<std::size_t> cur(parts, 1);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == parts) {
        reps[side].push_back(cur);
        return;
      }
      std::size_t used = 0;
      for (std::size_t k = 0; k < i; ++k) used += cur[k];
      for (std::size_t c = 1; used + c + (parts - i - 1) <= cap; ++c) {
        cur[i] = c;
        self(self, i + 1);
      }
      cur[i] = 1;
    };
    rec(rec, 0);
  }

  auto expand = [](const seqdom::IntSeq& q, const std::vector<std::size_t>& rep) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < q.size(); ++i)
      out.insert(out.end(), rep[i], q[i]);
    return out;
  };

  for (const auto& ra : reps[0]) {
    std::vector<std::int64_t> re = expand(r, ra);
    for (const auto& sa : reps[1]) {
      std::vector<std::int64_t> se = expand(s, sa);
      if (re.size() != se.size()) continue;
      bool le = true;
      for (std::size_t k = 0; k < re.size() && le; ++k) le = re[k] <= se[k];
      if (le) return true;
    }
  }
  return false;
}

// Every decomposition tree with the given number of leaves, as
// s-expressions with unit weights; leaf labels are placeholders.
inline std::vector<std::string> all_tree_exprs(int leaves) {
  if (leaves == 1) return {"(a 1 2 1)"};
  std::vector<std::string> out;
  for (int l = 1; l < leaves; ++l) {
    std::vector<std::string> ls = all_tree_exprs(l);
    std::vector<std::string> rs = all_tree_exprs(leaves - l);
    for (const std::string& a : ls)
      for (const std::string& b : rs) {
        out.push_back("(S " + a + " " + b + ")");
        out.push_back("(P " + a + " " + b + ")");
      }
  }
  return out;
}

inline void randomize_leaf_weights(seqdom::DecompTree& t, std::int64_t lo,
                                   std::int64_t hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  for (auto& node : t.nodes)
    if (node.kind == seqdom::DecompTree::Kind::leaf) node.arc.weight = dist(rng);
}

inline std::vector<std::tuple<int, int, std::int64_t>> arc_multiset(const seqdom::Digraph& g) {
  std::vector<std::tuple<int, int, std::int64_t>> v;
  for (const seqdom::Arc& a : g.arcs) v.emplace_back(a.tail, a.head, a.weight);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace testutil
