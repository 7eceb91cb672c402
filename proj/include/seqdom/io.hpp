#pragma once

#include <iosfwd>
#include <string>

#include "seqdom/spdigraph.hpp"

namespace seqdom {

// Text format: '#' lines are comments, first data line is "n m", then m
// lines "u v" or "u v w" with 1-based vertex ids.  Terminals are left
// unset.  Malformed input raises ParseError.
Digraph read_graph(std::istream& in);

// Inverse of read_graph; the weight column is always printed.
void format_graph(const Digraph& g, std::ostream& out);

// S-expression with 1-based vertex ids: leaf "(a u v w)", series
// "(S L R)", parallel "(P L R)".
DecompTree parse_tree(const std::string& text);
std::string format_tree(const DecompTree& t);

}  // namespace seqdom
