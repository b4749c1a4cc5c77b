#pragma once

#include <cstdint>
#include <vector>

namespace secseq {

// Exact binomial coefficient.  Throws ValidationError if the value (or an
// intermediate product) would overflow int64.
std::int64_t binomial(int n, int k);

// Exact b^e for e >= 0.  Throws ValidationError on int64 overflow.
std::int64_t ipow(std::int64_t b, int e);

// Colexicographic rank of a k-subset of {0, ..., n-1}.
// `members` must be strictly increasing; rank = sum_i binomial(members[i], i+1).
// Ranks run 0 .. binomial(n, k) - 1 and order subsets by their largest
// element first.
std::int64_t colex_rank(const std::vector<int>& members);

// Inverse of colex_rank for k-subsets of an arbitrarily large ground set.
std::vector<int> colex_unrank(std::int64_t rank, int k);

}  // namespace secseq
