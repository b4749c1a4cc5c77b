#include "secseq/combinatorics.hpp"

#include <limits>
#include <string>

#include "secseq/budget.hpp"

namespace secseq {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ValidationError("integer overflow in combinatorial quantity");
  }
  return out;
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0) {
    throw ValidationError("binomial requires nonnegative arguments, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k));
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) is always divisible by i at this point.
    result = checked_mul(result, n - k + i) / i;
  }
  return result;
}

std::int64_t ipow(std::int64_t b, int e) {
  if (e < 0) throw ValidationError("ipow requires a nonnegative exponent");
  std::int64_t result = 1;
  for (int i = 0; i < e; ++i) result = checked_mul(result, b);
  return result;
}

std::int64_t colex_rank(const std::vector<int>& members) {
  std::int64_t rank = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    rank += binomial(members[i], static_cast<int>(i) + 1);
  }
  return rank;
}

std::vector<int> colex_unrank(std::int64_t rank, int k) {
  std::vector<int> members(k);
  for (int i = k; i >= 1; --i) {
    // largest c with binomial(c, i) <= rank
    int c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    members[i - 1] = c;
    rank -= binomial(c, i);
  }
  return members;
}

}  // namespace secseq
