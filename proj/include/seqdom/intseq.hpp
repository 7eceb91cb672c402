#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace seqdom {

// Addition with an overflow assert in debug builds.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
#ifndef NDEBUG
  std::int64_t wide = 0;
  assert(!__builtin_add_overflow(a, b, &wide));
#endif
  return a + b;
}

// Nonempty sequence of 64-bit integers.  Indexing is 0-based everywhere in
// the API; the text form ("3,1,4,1,5") has no positional markers.
class IntSeq {
 public:
  explicit IntSeq(std::vector<std::int64_t> values);
  IntSeq(std::initializer_list<std::int64_t> values);

  // Parses a comma-separated integer list.  Throws ParseError.
  static IntSeq parse(std::string_view text);

  std::size_t size() const { return vals_.size(); }
  std::int64_t operator[](std::size_t i) const { return vals_[i]; }
  std::int64_t front() const { return vals_.front(); }
  std::int64_t back() const { return vals_.back(); }
  const std::vector<std::int64_t>& values() const { return vals_; }

  auto begin() const { return vals_.begin(); }
  auto end() const { return vals_.end(); }

  bool operator==(const IntSeq&) const = default;

  std::string str() const;

 private:
  std::vector<std::int64_t> vals_;
};

std::ostream& operator<<(std::ostream& os, const IntSeq& s);

std::int64_t min_value(const IntSeq& s);
std::int64_t max_value(const IntSeq& s);

// Smallest index attaining the minimum (resp. maximum).
std::size_t canonical_argmin(const IntSeq& s);
std::size_t canonical_argmax(const IntSeq& s);

// Pointwise s[i] + t[i].  Lengths must match.
IntSeq merge_pointwise(const IntSeq& r, const IntSeq& s);

// r dominates s: r and s have extensions r*, s* of equal length (extensions
// repeat elements in place) with r*[i] <= s*[i] everywhere.  Decided as
// reachability on the m x n grid whose cell (i,j) is admissible iff
// r[i] <= s[j], with steps (i+1,j), (i,j+1), (i+1,j+1).
bool dominates(const IntSeq& r, const IntSeq& s);

// Mutual domination.
bool equivalent(const IntSeq& r, const IntSeq& s);

// Typical sequence of s plus the witness positions in s it was taken from.
// values[i] == s[source_indices[i]]; indices are strictly increasing and
// each names the first element of its run of equal values in s.
struct TypicalView {
  IntSeq values;
  std::vector<std::size_t> source_indices;
  std::size_t source_length = 0;
};

// Linear-time computation of the typical sequence: the fixpoint of removing
// consecutive repetitions and of dropping all elements strictly between two
// positions i < j whenever every element of s[i..j] lies between s[i] and
// s[j] (in either orientation).
TypicalView typical_sequence(const IntSeq& s);

// Reference implementation: repeatedly applies the leftmost applicable
// reduction (repetition removal first) until none applies.
IntSeq typical_sequence_naive(const IntSeq& s);

// True iff s is its own typical sequence.
bool is_typical(const IntSeq& s);

}  // namespace seqdom
