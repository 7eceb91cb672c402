#pragma once

#include <stdexcept>

namespace seqdom {

// Malformed text input: sequence literals, graph files, s-expressions.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally invalid graph, order, or decomposition tree.
struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Width solvers reject inputs that are not series parallel.
struct NotSeriesParallelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Oracles refuse instances beyond their exhaustive-search bounds.
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace seqdom
