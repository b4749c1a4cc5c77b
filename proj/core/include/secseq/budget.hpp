#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace secseq {

// Node cap shared by every exhaustive solver in the library.  A solver that
// would overrun the cap refuses outright (BudgetExceeded) rather than return
// a silently truncated answer.
struct SearchBudget {
  std::int64_t max_nodes = 100'000'000;
};

// An exhaustive search refused to start, or to continue, because it cannot
// finish within the configured node budget (or a hard structural cap such as
// the 128-bit state-mask limit).
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Input data failed structural validation: bad order relation, malformed
// monomial, degenerate point coordinates, out-of-range parameters, ...
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace secseq
