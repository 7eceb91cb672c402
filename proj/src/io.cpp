#include "seqdom/io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "seqdom/errors.hpp"

namespace seqdom {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] == '#') continue;
    return true;
  }
  return false;
}

template <typename T>
T parse_int_token(const std::string& tok) {
  T v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError("bad integer: '" + tok + "'");
  return v;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Digraph read_graph(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw ParseError("missing graph header");
  auto head = split_tokens(line);
  if (head.size() != 2) throw ParseError("expected header 'n m'");
  int n = parse_int_token<int>(head[0]);
  int m = parse_int_token<int>(head[1]);
  if (n < 2) throw ParseError("graph must have at least 2 vertices");
  if (m < 0) throw ParseError("negative arc count");
  Digraph g;
  g.n = n;
  g.arcs.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    if (!next_data_line(in, line)) throw ParseError("unexpected end of input");
    auto toks = split_tokens(line);
    if (toks.size() != 2 && toks.size() != 3)
      throw ParseError("expected arc line 'u v' or 'u v w'");
    int u = parse_int_token<int>(toks[0]);
    int v = parse_int_token<int>(toks[1]);
    std::int64_t w = toks.size() == 3 ? parse_int_token<std::int64_t>(toks[2]) : 1;
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError("vertex id out of range");
    if (u == v) throw ParseError("self-loop");
    if (w < 1) throw ParseError("arc weight must be >= 1");
    g.arcs.push_back(Arc{u - 1, v - 1, w});
  }
  return g;
}

void format_graph(const Digraph& g, std::ostream& out) {
  out << g.n << ' ' << g.arcs.size() << '\n';
  for (const Arc& a : g.arcs)
    out << a.tail + 1 << ' ' << a.head + 1 << ' ' << a.weight << '\n';
}

namespace {

struct TreeParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit TreeParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of tree expression");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "' in tree expression");
    ++pos;
  }

  std::string token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected token in tree expression");
    return text.substr(start, pos - start);
  }

  int parse_node(DecompTree& t) {
    expect('(');
    std::string tag = token();
    if (tag == "a") {
      int u = parse_int_token<int>(token());
      int v = parse_int_token<int>(token());
      std::int64_t w = parse_int_token<std::int64_t>(token());
      expect(')');
      if (u < 1 || v < 1) throw ParseError("vertex id out of range");
      if (u == v) throw ParseError("self-loop");
      if (w < 1) throw ParseError("arc weight must be >= 1");
      return t.add_leaf(Arc{u - 1, v - 1, w});
    }
    if (tag == "S" || tag == "P") {
      int left = parse_node(t);
      int right = parse_node(t);
      expect(')');
      return tag == "S" ? t.add_series(left, right) : t.add_parallel(left, right);
    }
    throw ParseError("unknown tree node tag: '" + tag + "'");
  }
};

void format_node(const DecompTree& t, int id, std::string& out) {
  const DecompTree::Node& node = t.nodes[static_cast<std::size_t>(id)];
  if (node.kind == DecompTree::Kind::leaf) {
    out += "(a ";
    out += std::to_string(node.arc.tail + 1);
    out += ' ';
    out += std::to_string(node.arc.head + 1);
    out += ' ';
    out += std::to_string(node.arc.weight);
    out += ')';
    return;
  }
  out += node.kind == DecompTree::Kind::series ? "(S " : "(P ";
  format_node(t, node.left, out);
  out += ' ';
  format_node(t, node.right, out);
  out += ')';
}

}  // namespace

DecompTree parse_tree(const std::string& text) {
  DecompTree t;
  TreeParser p(text);
  t.root = p.parse_node(t);
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing text after tree expression");
  return t;
}

std::string format_tree(const DecompTree& t) {
  if (t.root < 0) throw std::invalid_argument("malformed tree");
  std::string out;
  format_node(t, t.root, out);
  return out;
}

}  // namespace seqdom
