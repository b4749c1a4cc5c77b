#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace secseq {

// Result of the total order on equal-length term vectors.  The order is
// decided at the highest stored index where the vectors differ; all lower
// positions are ignored.  Equivalently: compare from the back.
enum class TotalOrder { less, equal, greater };

// Result of the termwise partial order on equal-length term vectors.
enum class TermwiseOrder { less, equal, greater, incomparable };

TotalOrder compare_total(const std::vector<std::int64_t>& a,
                         const std::vector<std::int64_t>& b);
TermwiseOrder compare_termwise(const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b);

// A jump of size >= 2 between consecutive terms.  `position` is the index of
// the term *after* the jump (1 .. length-1); `size` = terms[position] -
// terms[position-1] >= 2.  Rendering places a bar just before that term.
struct Gap {
  std::size_t position = 0;
  std::int64_t size = 0;

  bool operator==(const Gap&) const = default;
};

struct GapProfile {
  std::vector<Gap> gaps;

  bool operator==(const GapProfile&) const = default;
};

// An index sequence as the library stores it: nondecreasing, every term >= 1.
// Secant-index sequences are kept in ascending orientation (term 0 is the
// value after the most reduction steps, the last term is the full dimension
// count); the total order on them therefore weights the last term most.
class IndexSequence {
 public:
  IndexSequence() = default;
  // Throws ValidationError unless terms is nonempty, every term >= 1, and the
  // terms are nondecreasing.
  explicit IndexSequence(std::vector<std::int64_t> terms);

  const std::vector<std::int64_t>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::int64_t front() const { return terms_.front(); }
  std::int64_t back() const { return terms_.back(); }
  std::int64_t operator[](std::size_t i) const { return terms_[i]; }

  bool operator==(const IndexSequence&) const = default;

 private:
  std::vector<std::int64_t> terms_;
};

TotalOrder compare_total(const IndexSequence& a, const IndexSequence& b);
TermwiseOrder compare_termwise(const IndexSequence& a, const IndexSequence& b);

// All jumps of size >= 2, in increasing position order.  A sequence is
// recoverable from its first term, its length, its gap profile, and the rule
// that un-barred steps advance by exactly the unit step of the listing --
// see reconstruct_from_gaps below for the exact inverse used in tests.
GapProfile gaps(const IndexSequence& s);

// Inverse of `gaps` given the first term and the length: consecutive terms
// differ by 1 except at the recorded gap positions, where they differ by the
// recorded size.
IndexSequence reconstruct_from_gaps(std::int64_t first, std::size_t length,
                                    const GapProfile& profile);

// Comma-separated terms with " | " replacing ", " just before each gap:
// e.g. "1, 2, 3, 4 | 6".  No trailing separator, no bar after the last term.
std::string render_with_bars(const IndexSequence& s);

// Parses render_with_bars output (bars are accepted anywhere and do not have
// to match the gap rule; they are simply separators on input).  Throws
// ValidationError on malformed text or on terms violating the sequence
// invariants.
IndexSequence parse_sequence(const std::string& text);

std::ostream& operator<<(std::ostream& os, const IndexSequence& s);

const char* to_string(TotalOrder o);
const char* to_string(TermwiseOrder o);

}  // namespace secseq
