#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqdom/errors.hpp"
#include "seqdom/intseq.hpp"
#include "seqdom/io.hpp"
#include "seqdom/mergedom.hpp"
#include "seqdom/oracle.hpp"
#include "seqdom/spdigraph.hpp"
#include "seqdom/width.hpp"

namespace {

using namespace seqdom;

Digraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return read_graph(in);
}

std::string format_indices(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(idx[i] + 1);
  }
  return out;
}

std::string format_order(const std::vector<int>& order) {
  std::string out = "order";
  for (int v : order) {
    out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

int run_typseq(const std::string& text) {
  TypicalView t = typical_sequence(IntSeq::parse(text));
  std::cout << t.values.str() << "\n" << format_indices(t.source_indices) << "\n";
  return 0;
}

int run_dominates(const std::string& a, const std::string& b) {
  std::cout << (dominates(IntSeq::parse(a), IntSeq::parse(b)) ? "true" : "false")
            << "\n";
  return 0;
}

int run_merge_dominator(const std::string& a, const std::string& b) {
  IntSeq r = IntSeq::parse(a);
  IntSeq c = IntSeq::parse(b);
  GridPath p = merge_dominator(r, c);
  std::cout << path_values(MergeContext{r, c}, p).str() << "\n" << p.str() << "\n";
  return 0;
}

int run_recognize(const std::string& path) {
  Recognition rec = recognize_spd(load_graph(path));
  if (rec.verdict != SpdVerdict::spd) {
    std::cout << "not-series-parallel\n";
    return 3;
  }
  std::cout << format_tree(*rec.tree) << "\n";
  return 0;
}

int run_width(const std::string& path, WidthResult (*solver)(const Digraph&)) {
  WidthResult r = solver(load_graph(path));
  std::cout << "value " << r.value << "\n" << format_order(r.order) << "\n";
  return 0;
}

int run_verify(const std::string& path, int max_n) {
  Digraph g = load_graph(path);
  struct Row {
    const char* name;
    WidthResult (*solve)(const Digraph&);
    WidthResult (*brute)(const Digraph&, int);
    std::int64_t (*eval)(const Digraph&, const std::vector<int>&);
  };
  const Row rows[] = {
      {"cutwidth", [](const Digraph& h) { return spd_cutwidth(h); },
       &oracle::brute_cutwidth, &cutwidth_of_order},
      {"weighted-cutwidth", [](const Digraph& h) { return spd_weighted_cutwidth(h); },
       &oracle::brute_weighted_cutwidth, &weighted_cutwidth_of_order},
      {"modified-cutwidth", [](const Digraph& h) { return spd_modified_cutwidth(h); },
       &oracle::brute_modified_cutwidth, &modified_cutwidth_of_order},
  };
  for (const Row& row : rows) {
    WidthResult solved = row.solve(g);
    Digraph h = g;
    if (h.source < 0 || h.sink < 0) infer_terminals(h);
    std::int64_t certified = row.eval(h, solved.order);
    if (certified != solved.value) {
      std::cout << row.name << " MISMATCH solver=" << solved.value
                << " certificate=" << certified << "\n";
      return 4;
    }
    WidthResult ref = row.brute(h, max_n);
    if (ref.value != solved.value) {
      std::cout << row.name << " MISMATCH solver=" << solved.value
                << " oracle=" << ref.value << "\n";
      return 4;
    }
  }
  std::cout << "match\n";
  return 0;
}

int run_bench_md(std::size_t len, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
  auto random_seq = [&](std::size_t k) {
    std::vector<std::int64_t> v(k);
    for (auto& x : v) x = dist(rng);
    return IntSeq(std::move(v));
  };
  double total_ms = 0.0;
  for (int t = 0; t < trials; ++t) {
    IntSeq r = random_seq(len);
    IntSeq c = random_seq(len);
    auto start = std::chrono::steady_clock::now();
    GridPath p = merge_dominator(r, c);
    auto stop = std::chrono::steady_clock::now();
    if (p.cells.empty()) return 4;
    total_ms += std::chrono::duration<double, std::milli>(stop - start).count();
  }
  std::cout << "len trials total_ms avg_ms\n";
  std::cout << std::fixed << std::setprecision(3) << len << ' ' << trials << ' '
            << total_ms << ' ' << total_ms / trials << "\n";
  return 0;
}

int run_bench_cw(int leaves, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double total_ms = 0.0;
  for (int t = 0; t < trials; ++t) {
    DecompTree tree = oracle::random_decomp_tree(leaves, 1, 1, rng);
    Digraph g = instantiate_tree(tree);
    auto start = std::chrono::steady_clock::now();
    WidthResult r = spd_cutwidth(g, tree);
    auto stop = std::chrono::steady_clock::now();
    if (r.order.empty()) return 4;
    total_ms += std::chrono::duration<double, std::milli>(stop - start).count();
  }
  std::cout << "leaves trials total_ms avg_ms\n";
  std::cout << std::fixed << std::setprecision(3) << leaves << ' ' << trials << ' '
            << total_ms << ' ' << total_ms / trials << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"typical-sequence domination toolkit for series parallel digraphs"};
  app.require_subcommand(1);

  std::string seq_a, seq_b, file;
  int max_n = 10;

  auto* c_typseq = app.add_subcommand("typseq", "reduce a sequence to typical form");
  c_typseq->add_option("seq", seq_a, "comma-separated integers")->required();

  auto* c_dom = app.add_subcommand("dominates", "test sequence domination");
  c_dom->add_option("seqA", seq_a, "comma-separated integers")->required();
  c_dom->add_option("seqB", seq_b, "comma-separated integers")->required();

  auto* c_md = app.add_subcommand("merge-dominator", "dominating non-diagonal merge");
  c_md->add_option("seqA", seq_a, "comma-separated integers")->required();
  c_md->add_option("seqB", seq_b, "comma-separated integers")->required();

  auto* c_rec = app.add_subcommand("recognize", "series parallel recognition");
  c_rec->add_option("file", file, "graph file")->required();

  auto* c_cw = app.add_subcommand("cutwidth", "optimal cutwidth of an SPD");
  c_cw->add_option("file", file, "graph file")->required();

  auto* c_wcw = app.add_subcommand("weighted-cutwidth", "optimal weighted cutwidth");
  c_wcw->add_option("file", file, "graph file")->required();

  auto* c_mcw = app.add_subcommand("modified-cutwidth", "optimal modified cutwidth");
  c_mcw->add_option("file", file, "graph file")->required();

  auto* c_ver = app.add_subcommand("verify", "cross-check solvers against oracles");
  c_ver->add_option("file", file, "graph file")->required();
  c_ver->add_option("--max-n", max_n, "oracle vertex bound");

  auto* c_bench = app.add_subcommand("bench", "timing tables");
  c_bench->require_subcommand(1);
  std::size_t bench_len = 1000000;
  int bench_trials = 5;
  int bench_leaves = 1000;
  std::uint64_t bench_seed = 12345;
  auto* b_md = c_bench->add_subcommand("merge-dominator", "time merge_dominator");
  b_md->add_option("--len", bench_len, "sequence length")->required();
  b_md->add_option("--trials", bench_trials, "number of trials")->required();
  b_md->add_option("--seed", bench_seed, "rng seed");
  auto* b_cw = c_bench->add_subcommand("cutwidth", "time the cutwidth solver");
  b_cw->add_option("--leaves", bench_leaves, "decomposition tree leaves")->required();
  b_cw->add_option("--trials", bench_trials, "number of trials");
  b_cw->add_option("--seed", bench_seed, "rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_typseq->parsed()) return run_typseq(seq_a);
    if (c_dom->parsed()) return run_dominates(seq_a, seq_b);
    if (c_md->parsed()) return run_merge_dominator(seq_a, seq_b);
    if (c_rec->parsed()) return run_recognize(file);
    if (c_cw->parsed())
      return run_width(file, [](const Digraph& g) { return spd_cutwidth(g); });
    if (c_wcw->parsed())
      return run_width(file, [](const Digraph& g) { return spd_weighted_cutwidth(g); });
    if (c_mcw->parsed())
      return run_width(file, [](const Digraph& g) { return spd_modified_cutwidth(g); });
    if (c_ver->parsed()) return run_verify(file, max_n);
    if (c_bench->parsed()) {
      if (b_md->parsed()) return run_bench_md(bench_len, bench_trials, bench_seed);
      if (b_cw->parsed()) return run_bench_cw(bench_leaves, bench_trials, bench_seed);
    }
  } catch (const NotSeriesParallelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
