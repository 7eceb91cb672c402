#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "seqdom/intseq.hpp"

namespace seqdom {

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  bool operator==(const Cell&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Cell& c);

// Monotone staircase walk over a grid: starts at (0,0), ends at the bottom
// right corner, each step is (+1,0), (0,+1) or (+1,+1).  A path with no
// (+1,+1) step is non-diagonal and visits exactly rows+cols-1 cells.
struct GridPath {
  std::vector<Cell> cells;

  bool non_diagonal() const;

  // "(1,1) (1,2) (2,2)"; the text form is 1-based.
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GridPath& p);

// The merge matrix of two sequences: entry (i,j) = rows[i] + cols[j].
// Never materialized; cells are evaluated on demand.
struct MergeContext {
  IntSeq rows;
  IntSeq cols;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return cols.size(); }
  std::int64_t value(Cell c) const { return checked_add(rows[c.row], cols[c.col]); }
};

// Sequence of matrix entries along the path.  Throws std::out_of_range when
// a cell falls outside the grid.
IntSeq path_values(const MergeContext& ctx, const GridPath& p);

// Start, end, and step-shape check.  Throws std::invalid_argument.
void check_path(const MergeContext& ctx, const GridPath& p);

// Replaces each diagonal step by the two-step corner with the smaller matrix
// entry (the column-first corner on ties).  The result dominates the input
// path's values.
GridPath make_nondiagonal(const MergeContext& ctx, const GridPath& p);

// Dominating non-diagonal path for a pair of typical sequences: splits the
// grid at the canonical minima and peels two-cell blocks off the corners.
// Throws std::invalid_argument when an input is not typical.
GridPath split_and_chop(const IntSeq& r, const IntSeq& c);

// Transfers a path over the typical-sequence grid back to the full grid of
// the original sequences, walking the witness indices of each view.  The
// result is non-diagonal and its values dominate every merge of the
// originals whenever t is a dominating path for the typical pair.
GridPath typical_lift(const GridPath& t, const TypicalView& rows,
                      const TypicalView& cols);

// Non-diagonal path through the merge matrix of r and c whose value sequence
// dominates the values of every path, diagonal steps included.  Runs in
// linear time.
GridPath merge_dominator(const IntSeq& r, const IntSeq& c);

}  // namespace seqdom
