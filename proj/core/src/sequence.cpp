#include "secseq/sequence.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <string>

#include "secseq/budget.hpp"

namespace secseq {

namespace {

void require_same_length(const std::vector<std::int64_t>& a,
                         const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) {
    throw ValidationError("sequence comparison requires equal lengths, got " +
                          std::to_string(a.size()) + " and " +
                          std::to_string(b.size()));
  }
}

}  // namespace

TotalOrder compare_total(const std::vector<std::int64_t>& a,
                         const std::vector<std::int64_t>& b) {
  require_same_length(a, b);
  // Decided at the highest index where the terms differ.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] < b[i]) return TotalOrder::less;
    if (a[i] > b[i]) return TotalOrder::greater;
  }
  return TotalOrder::equal;
}

TermwiseOrder compare_termwise(const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b) {
  require_same_length(a, b);
  bool some_less = false;
  bool some_greater = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) some_less = true;
    if (a[i] > b[i]) some_greater = true;
  }
  if (some_less && some_greater) return TermwiseOrder::incomparable;
  if (some_less) return TermwiseOrder::less;
  if (some_greater) return TermwiseOrder::greater;
  return TermwiseOrder::equal;
}

IndexSequence::IndexSequence(std::vector<std::int64_t> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw ValidationError("an index sequence must have at least one term");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 1) {
      throw ValidationError("index sequence terms must be >= 1, got " +
                            std::to_string(terms_[i]) + " at position " +
                            std::to_string(i));
    }
    if (i > 0 && terms_[i] < terms_[i - 1]) {
      throw ValidationError("index sequence terms must be nondecreasing, got " +
                            std::to_string(terms_[i - 1]) + " then " +
                            std::to_string(terms_[i]));
    }
  }
}

TotalOrder compare_total(const IndexSequence& a, const IndexSequence& b) {
  return compare_total(a.terms(), b.terms());
}

TermwiseOrder compare_termwise(const IndexSequence& a, const IndexSequence& b) {
  return compare_termwise(a.terms(), b.terms());
}

GapProfile gaps(const IndexSequence& s) {
  GapProfile profile;
  const auto& t = s.terms();
  for (std::size_t i = 1; i < t.size(); ++i) {
    const std::int64_t diff = t[i] - t[i - 1];
    if (diff >= 2) profile.gaps.push_back(Gap{i, diff});
  }
  return profile;
}

IndexSequence reconstruct_from_gaps(std::int64_t first, std::size_t length,
                                    const GapProfile& profile) {
  std::vector<std::int64_t> terms;
  terms.reserve(length);
  terms.push_back(first);
  std::size_t next_gap = 0;
  for (std::size_t i = 1; i < length; ++i) {
    std::int64_t step = 1;
    if (next_gap < profile.gaps.size() && profile.gaps[next_gap].position == i) {
      step = profile.gaps[next_gap].size;
      ++next_gap;
    }
    terms.push_back(terms.back() + step);
  }
  if (next_gap != profile.gaps.size()) {
    throw ValidationError("gap profile lists a position beyond the sequence length");
  }
  return IndexSequence(std::move(terms));
}

std::string render_with_bars(const IndexSequence& s) {
  const auto& t = s.terms();
  std::ostringstream out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out << (t[i] - t[i - 1] >= 2 ? " | " : ", ");
    out << t[i];
  }
  return out.str();
}

IndexSequence parse_sequence(const std::string& text) {
  std::vector<std::int64_t> terms;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool expect_term = true;
  while (i < text.size()) {
    if (expect_term) {
      const std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
        throw ValidationError("expected a number at position " +
                              std::to_string(start) + " of \"" + text + "\"");
      }
      terms.push_back(std::stoll(text.substr(start, i - start)));
      expect_term = false;
    } else {
      if (text[i] == ',' || text[i] == '|') {
        ++i;
        expect_term = true;
      } else {
        throw ValidationError("expected ',' or '|' at position " +
                              std::to_string(i) + " of \"" + text + "\"");
      }
    }
    skip_ws();
  }
  if (expect_term) {
    throw ValidationError("sequence text ends with a dangling separator: \"" +
                          text + "\"");
  }
  return IndexSequence(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const IndexSequence& s) {
  return os << render_with_bars(s);
}

const char* to_string(TotalOrder o) {
  switch (o) {
    case TotalOrder::less: return "less";
    case TotalOrder::equal: return "equal";
    case TotalOrder::greater: return "greater";
  }
  return "?";
}

const char* to_string(TermwiseOrder o) {
  switch (o) {
    case TermwiseOrder::less: return "less";
    case TermwiseOrder::equal: return "equal";
    case TermwiseOrder::greater: return "greater";
    case TermwiseOrder::incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace secseq
