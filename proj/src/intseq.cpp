#include "seqdom/intseq.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "seqdom/errors.hpp"

namespace seqdom {

IntSeq::IntSeq(std::vector<std::int64_t> values) : vals_(std::move(values)) {
  if (vals_.empty()) throw std::invalid_argument("empty sequence");
}

IntSeq::IntSeq(std::initializer_list<std::int64_t> values)
    : IntSeq(std::vector<std::int64_t>(values)) {}

IntSeq IntSeq::parse(std::string_view text) {
  std::vector<std::int64_t> vals;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' ||
                            tok.back() == '\n' || tok.back() == '\r'))
      tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad integer in sequence: '" + std::string(tok) + "'");
    vals.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntSeq(std::move(vals));
}

std::string IntSeq::str() const {
  std::string out;
  for (std::size_t i = 0; i < vals_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vals_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntSeq& s) { return os << s.str(); }

std::int64_t min_value(const IntSeq& s) {
  return *std::min_element(s.begin(), s.end());
}

std::int64_t max_value(const IntSeq& s) {
  return *std::max_element(s.begin(), s.end());
}

std::size_t canonical_argmin(const IntSeq& s) {
  return static_cast<std::size_t>(std::min_element(s.begin(), s.end()) - s.begin());
}

std::size_t canonical_argmax(const IntSeq& s) {
  return static_cast<std::size_t>(std::max_element(s.begin(), s.end()) - s.begin());
}

IntSeq merge_pointwise(const IntSeq& r, const IntSeq& s) {
  if (r.size() != s.size()) throw std::invalid_argument("length mismatch");
  std::vector<std::int64_t> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = checked_add(r[i], s[i]);
  return IntSeq(std::move(out));
}

bool dominates(const IntSeq& r, const IntSeq& s) {
  const std::size_t m = r.size(), n = s.size();
  // reach[j]: current row; a cell is reachable from (0,0) through admissible
  // cells only.  Rolling row keeps the previous one for the (i-1,*) steps.
  std::vector<char> prev(n, 0), cur(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (r[i] > s[j]) {
        cur[j] = 0;
        continue;
      }
      if (i == 0 && j == 0)
        cur[j] = 1;
      else
        cur[j] = (j > 0 && cur[j - 1]) || (i > 0 && prev[j]) ||
                 (i > 0 && j > 0 && prev[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[n - 1];
}

bool equivalent(const IntSeq& r, const IntSeq& s) {
  return dominates(r, s) && dominates(s, r);
}

namespace {

// Marking scan over the deduplicated prefix d[0..last]: walks the prefix
// keeping the indices of the running strict minimum and maximum, and marks
// the one that is displaced whenever the other is renewed.
void mark_prefix(const std::vector<std::int64_t>& d, std::size_t last,
                 std::vector<char>& keep) {
  keep[0] = 1;
  if (last == 0) return;
  std::size_t jmin = d[0] < d[1] ? 0 : 1;
  std::size_t jmax = d[0] < d[1] ? 1 : 0;
  for (std::size_t j = 2; j <= last; ++j) {
    if (d[j] < d[jmin]) {
      keep[jmax] = 1;
      jmin = j;
    } else if (d[j] > d[jmax]) {
      keep[jmin] = 1;
      jmax = j;
    }
  }
  keep[jmin] = 1;
  keep[jmax] = 1;
}

// Mirror image of mark_prefix over the suffix d[start..k-1], walked from the
// right end.
void mark_suffix(const std::vector<std::int64_t>& d, std::size_t start,
                 std::vector<char>& keep) {
  const std::size_t k = d.size();
  keep[k - 1] = 1;
  if (start == k - 1) return;
  std::size_t jmin = d[k - 1] < d[k - 2] ? k - 1 : k - 2;
  std::size_t jmax = d[k - 1] < d[k - 2] ? k - 2 : k - 1;
  for (std::size_t j = k - 2; j-- > start;) {
    if (d[j] < d[jmin]) {
      keep[jmax] = 1;
      jmin = j;
    } else if (d[j] > d[jmax]) {
      keep[jmin] = 1;
      jmax = j;
    }
  }
  keep[jmin] = 1;
  keep[jmax] = 1;
}

}  // namespace

TypicalView typical_sequence(const IntSeq& s) {
  // Collapse runs of equal values; run-start indices are rederived on output.
  std::vector<std::int64_t> d;
  d.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (d.empty() || s[i] != d.back()) d.push_back(s[i]);
  const std::size_t k = d.size();

  std::vector<char> keep(k, 0);
  if (k == 1) {
    keep[0] = 1;
  } else {
    std::int64_t lo = d[0], hi = d[0];
    std::size_t first_min = 0, first_max = 0, last_min = 0, last_max = 0;
    for (std::size_t i = 1; i < k; ++i) {
      if (d[i] < lo) {
        lo = d[i];
        first_min = last_min = i;
      } else if (d[i] == lo) {
        last_min = i;
      }
      if (d[i] > hi) {
        hi = d[i];
        first_max = last_max = i;
      } else if (d[i] == hi) {
        last_max = i;
      }
    }
    const std::size_t i_star = std::min(first_min, first_max);
    const std::size_t k_star = std::max(last_min, last_max);

    mark_prefix(d, i_star, keep);
    mark_suffix(d, k_star, keep);

    // Between the first and last extreme position nothing survives unless
    // both ends attain the same extreme; then the opposite extreme does.
    keep[i_star] = 1;
    keep[k_star] = 1;
    if ((d[i_star] == lo) == (d[k_star] == lo))
      keep[d[i_star] == lo ? first_max : first_min] = 1;
  }

  TypicalView view{IntSeq{0}, {}, s.size()};
  std::vector<std::int64_t> vals;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && s[i] == s[i - 1]) continue;
    if (keep[pos]) {
      vals.push_back(s[i]);
      view.source_indices.push_back(i);
    }
    ++pos;
  }
  view.values = IntSeq(std::move(vals));
  return view;
}

IntSeq typical_sequence_naive(const IntSeq& s) {
  std::vector<std::int64_t> v = s.values();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1]) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t i = 0; i + 2 < v.size() && !changed; ++i) {
      std::int64_t lo = v[i], hi = v[i];
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        lo = std::min(lo, v[j]);
        hi = std::max(hi, v[j]);
        if (j >= i + 2 &&
            ((v[i] == lo && v[j] == hi) || (v[i] == hi && v[j] == lo))) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                  v.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
      }
    }
  }
  return IntSeq(std::move(v));
}

bool is_typical(const IntSeq& s) {
  return typical_sequence(s).values == s;
}

}  // namespace seqdom
