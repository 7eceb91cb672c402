#include "seqdom/mergedom.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace seqdom {

std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << c.row + 1 << ',' << c.col + 1 << ')';
}

bool GridPath::non_diagonal() const {
  for (std::size_t k = 1; k < cells.size(); ++k)
    if (cells[k].row == cells[k - 1].row + 1 && cells[k].col == cells[k - 1].col + 1)
      return false;
  return true;
}

std::string GridPath::str() const {
  std::string out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) out += ' ';
    out += '(' + std::to_string(cells[k].row + 1) + ',' +
           std::to_string(cells[k].col + 1) + ')';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GridPath& p) { return os << p.str(); }

IntSeq path_values(const MergeContext& ctx, const GridPath& p) {
  if (p.cells.empty()) throw std::invalid_argument("empty path");
  std::vector<std::int64_t> vals;
  vals.reserve(p.cells.size());
  for (const Cell c : p.cells) {
    if (c.row >= ctx.row_count() || c.col >= ctx.col_count())
      throw std::out_of_range("path cell outside grid");
    vals.push_back(ctx.value(c));
  }
  return IntSeq(std::move(vals));
}

void check_path(const MergeContext& ctx, const GridPath& p) {
  if (p.cells.empty()) throw std::invalid_argument("empty path");
  if (!(p.cells.front() == Cell{0, 0}))
    throw std::invalid_argument("path must start at the top-left cell");
  for (std::size_t k = 0; k < p.cells.size(); ++k) {
    const Cell c = p.cells[k];
    if (c.row >= ctx.row_count() || c.col >= ctx.col_count())
      throw std::out_of_range("path cell outside grid");
    if (k > 0) {
      const Cell a = p.cells[k - 1];
      const bool step = (c.row == a.row + 1 && c.col == a.col) ||
                        (c.row == a.row && c.col == a.col + 1) ||
                        (c.row == a.row + 1 && c.col == a.col + 1);
      if (!step) throw std::invalid_argument("invalid path step");
    }
  }
  if (!(p.cells.back() == Cell{ctx.row_count() - 1, ctx.col_count() - 1}))
    throw std::invalid_argument("path must end at the bottom-right cell");
}

GridPath make_nondiagonal(const MergeContext& ctx, const GridPath& p) {
  check_path(ctx, p);
  std::vector<Cell> out;
  out.reserve(p.cells.size() * 2);
  for (std::size_t k = 0; k < p.cells.size(); ++k) {
    if (k > 0) {
      const Cell a = p.cells[k - 1], b = p.cells[k];
      if (b.row == a.row + 1 && b.col == a.col + 1) {
        const Cell corner_col{a.row, b.col};
        const Cell corner_row{b.row, a.col};
        out.push_back(ctx.value(corner_col) <= ctx.value(corner_row) ? corner_col
                                                                     : corner_row);
      }
    }
    out.push_back(p.cells[k]);
  }
  return GridPath{std::move(out)};
}

namespace {

// Path from (0,0) to (i,j) in the subgrid [0..i] x [0..j], where row i holds
// the minimum of r[0..i] and column j the minimum of c[0..j].  Peels two-cell
// blocks off the bottom-right corner, always dropping the pair of rows or
// columns whose remaining corner entry is smaller.
std::vector<Cell> chop_bottom(const IntSeq& r, const IntSeq& c, std::size_t i,
                              std::size_t j) {
  std::vector<std::pair<Cell, Cell>> blocks;
  std::size_t mm = i, nn = j;
  while (mm >= 2 && nn >= 2) {
    if (checked_add(r[mm - 2], c[nn - 1]) <= checked_add(r[mm - 1], c[nn - 2])) {
      blocks.push_back({{mm - 1, nn}, {mm, nn}});
      mm -= 2;
    } else {
      blocks.push_back({{mm, nn - 1}, {mm, nn}});
      nn -= 2;
    }
  }
  std::vector<Cell> cells;
  cells.push_back({0, 0});
  if (mm <= 1) {
    if (mm == 1) cells.push_back({mm, 0});
    for (std::size_t col = 1; col <= nn; ++col) cells.push_back({mm, col});
  } else {
    if (nn == 1) cells.push_back({0, nn});
    for (std::size_t row = 1; row <= mm; ++row) cells.push_back({row, nn});
  }
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    cells.push_back(it->first);
    cells.push_back(it->second);
  }
  return cells;
}

// Path from (i,j) to the bottom-right corner of the full grid, where row i
// holds the minimum of r[i..] and column j the minimum of c[j..].  Mirror
// image of chop_bottom: blocks are peeled off the top-left corner and can be
// emitted in walking order directly.
std::vector<Cell> chop_top(const IntSeq& r, const IntSeq& c, std::size_t i,
                           std::size_t j) {
  const std::size_t m = r.size(), n = c.size();
  std::vector<Cell> cells;
  std::size_t a = i, b = j;
  while (m - a >= 3 && n - b >= 3) {
    if (checked_add(r[a + 2], c[b + 1]) <= checked_add(r[a + 1], c[b + 2])) {
      cells.push_back({a, b});
      cells.push_back({a + 1, b});
      a += 2;
    } else {
      cells.push_back({a, b});
      cells.push_back({a, b + 1});
      b += 2;
    }
  }
  cells.push_back({a, b});
  if (m - a <= 2) {
    for (std::size_t col = b + 1; col < n; ++col) cells.push_back({a, col});
    if (a != m - 1) cells.push_back({m - 1, n - 1});
  } else {
    for (std::size_t row = a + 1; row < m; ++row) cells.push_back({row, b});
    if (b != n - 1) cells.push_back({m - 1, n - 1});
  }
  return cells;
}

}  // namespace

GridPath split_and_chop(const IntSeq& r, const IntSeq& c) {
  if (!is_typical(r) || !is_typical(c))
    throw std::invalid_argument("input not typical");
  const std::size_t i = canonical_argmin(r), j = canonical_argmin(c);
  std::vector<Cell> cells = chop_bottom(r, c, i, j);
  const std::vector<Cell> top = chop_top(r, c, i, j);
  cells.insert(cells.end(), top.begin() + 1, top.end());
  return GridPath{std::move(cells)};
}

GridPath typical_lift(const GridPath& t, const TypicalView& rows,
                      const TypicalView& cols) {
  const auto check_view = [](const TypicalView& v) {
    if (v.values.size() != v.source_indices.size() || v.source_indices.empty() ||
        v.source_indices.front() != 0)
      throw std::invalid_argument("index map mismatch");
    for (std::size_t i = 0; i < v.source_indices.size(); ++i) {
      if (v.source_indices[i] >= v.source_length ||
          (i > 0 && v.source_indices[i] <= v.source_indices[i - 1]))
        throw std::invalid_argument("index map mismatch");
    }
  };
  check_view(rows);
  check_view(cols);

  const MergeContext typgrid{rows.values, cols.values};
  const GridPath nd = make_nondiagonal(typgrid, t);

  // Walk the witness indices: each step of nd expands to the run of original
  // positions between consecutive witnesses, taken in the witness row or
  // column of the step's endpoint.
  std::vector<Cell> out;
  out.reserve(rows.source_length + cols.source_length - 1);
  out.push_back({0, 0});
  for (std::size_t k = 1; k < nd.cells.size(); ++k) {
    const Cell a = nd.cells[k - 1], b = nd.cells[k];
    if (b.row == a.row + 1) {
      const std::size_t col = cols.source_indices[b.col];
      for (std::size_t h = rows.source_indices[a.row] + 1;
           h <= rows.source_indices[b.row]; ++h)
        out.push_back({h, col});
    } else {
      const std::size_t row = rows.source_indices[b.row];
      for (std::size_t h = cols.source_indices[a.col] + 1;
           h <= cols.source_indices[b.col]; ++h)
        out.push_back({row, h});
    }
  }

  // Positions past the last witness belong to trailing runs of repeated
  // values; close the walk along them.
  const std::size_t m = rows.source_length, n = cols.source_length;
  const Cell last = out.back();
  for (std::size_t h = last.row + 1; h < m; ++h) out.push_back({h, last.col});
  for (std::size_t h = last.col + 1; h < n; ++h) out.push_back({m - 1, h});
  return GridPath{std::move(out)};
}

GridPath merge_dominator(const IntSeq& r, const IntSeq& c) {
  const TypicalView rv = typical_sequence(r);
  const TypicalView cv = typical_sequence(c);
  const GridPath t = split_and_chop(rv.values, cv.values);
  return typical_lift(t, rv, cv);
}

}  // namespace seqdom
