#include "secseq/veronese.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "secseq/combinatorics.hpp"

namespace secseq {

std::int64_t VeroneseInstance::ambient_points() const {
  return binomial(n + d, n);
}

std::int64_t VeroneseInstance::codim() const {
  return ambient_points() - 1 - n;
}

std::int64_t VeroneseInstance::top_degree() const {
  return ipow(d, n);
}

void VeroneseInstance::validate() const {
  if (n < 1 || d < 1) {
    throw ValidationError("Veronese instance requires n >= 1 and d >= 1, got n=" +
                          std::to_string(n) + " d=" + std::to_string(d));
  }
  if (top_degree() > (std::int64_t{1} << 31)) {
    throw BudgetExceeded("Veronese box " + std::to_string(d) + "^" +
                         std::to_string(n) + " exceeds the supported size");
  }
  ambient_points();  // throws on overflow
}

std::vector<Monomial> veronese_addition_segment(int n, int d) {
  VeroneseInstance{n, d}.validate();
  std::vector<Monomial> segment;
  for (const Monomial& m : lex_degree_d(n + 1, d, /*exclude_pure_powers=*/true)) {
    segment.push_back(m.dehomogenize());
  }
  return segment;
}

namespace {

// Flat index of a box cell with mixed-radix digits e (each 0..d-1).
std::size_t cell_index(const std::vector<int>& e, int d) {
  std::size_t idx = 0;
  for (int x : e) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(x);
  return idx;
}

}  // namespace

IndexSequence rlg_veronese(const VeroneseInstance& inst) {
  inst.validate();
  const int n = inst.n;
  const int d = inst.d;
  const auto segment = veronese_addition_segment(n, d);
  const std::int64_t box = inst.top_degree();

  // Incrementally mark the multiples of each added segment monomial inside
  // the box and record the surviving-cell count after every addition.
  std::vector<char> marked(static_cast<std::size_t>(box), 0);
  std::int64_t alive = box;
  std::vector<std::int64_t> dims_after;
  dims_after.reserve(segment.size() + 1);
  dims_after.push_back(alive);

  std::vector<int> e(n, 0);
  for (const Monomial& m : segment) {
    // Walk the sub-box {m.e[v] .. d-1}^n of multiples of m.
    for (int v = 0; v < n; ++v) e[v] = m.exponent(v);
    std::int64_t removed = 0;
    while (true) {
      const std::size_t idx = cell_index(e, d);
      if (!marked[idx]) {
        marked[idx] = 1;
        ++removed;
      }
      int v = n - 1;
      while (v >= 0 && e[v] == d - 1) {
        e[v] = m.exponent(v);
        --v;
      }
      if (v < 0) break;
      ++e[v];
    }
    if (removed == 0) {
      throw std::logic_error("lex segment addition failed to shrink the quotient");
    }
    alive -= removed;
    dims_after.push_back(alive);
  }

  // Ascending orientation: the value after r additions sits at index
  // (codim - r); r = 0 contributes the top term.
  std::vector<std::int64_t> terms(dims_after.rbegin(), dims_after.rend());
  return IndexSequence(std::move(terms));
}

IndexSequence n2_closed_form(std::int64_t d) {
  if (d < 3) {
    throw ValidationError("the n=2 closed form requires d >= 3, got d=" +
                          std::to_string(d));
  }
  // Difference list, applied downward from the top term d^2:
  // for g = d-1 down to 3: g, then (d-g) ones; finally 2, then 3d-3 ones.
  std::vector<std::int64_t> diffs;
  for (std::int64_t g = d - 1; g >= 3; --g) {
    diffs.push_back(g);
    for (std::int64_t i = 0; i < d - g; ++i) diffs.push_back(1);
  }
  diffs.push_back(2);
  for (std::int64_t i = 0; i < 3 * d - 3; ++i) diffs.push_back(1);

  const std::int64_t length = binomial(static_cast<int>(d) + 2, 2) - 2;
  if (static_cast<std::int64_t>(diffs.size()) + 1 != length) {
    throw std::logic_error("closed-form difference list has the wrong length");
  }
  std::vector<std::int64_t> descending;
  descending.reserve(length);
  descending.push_back(d * d);
  for (std::int64_t diff : diffs) descending.push_back(descending.back() - diff);
  std::vector<std::int64_t> terms(descending.rbegin(), descending.rend());
  return IndexSequence(std::move(terms));
}

namespace {

struct OracleSearch {
  int n;
  int d;
  std::vector<Monomial> pool;
  std::int64_t max_nodes;
  std::int64_t nodes = 0;
  // divides_[i] bit j set when pool[i] divides pool[j].
  std::vector<std::uint32_t> divides_;
  struct Entry {
    bool feasible = false;
    std::vector<std::int64_t> best_chrono;  // dims after each further addition
  };
  std::unordered_map<std::uint32_t, Entry> memo;
  std::unordered_map<std::uint32_t, std::int64_t> dim_memo;

  std::int64_t dim_of(std::uint32_t mask) {
    if (auto it = dim_memo.find(mask); it != dim_memo.end()) return it->second;
    std::vector<Monomial> extras;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((mask >> i) & 1u) extras.push_back(pool[i]);
    }
    const std::int64_t dim = BoxIdeal(n, d, std::move(extras)).quotient_dim();
    dim_memo.emplace(mask, dim);
    return dim;
  }

  const Entry& solve(std::uint32_t mask) {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    if (++nodes > max_nodes) {
      throw BudgetExceeded("Veronese oracle exceeded the node budget of " +
                           std::to_string(max_nodes));
    }
    Entry entry;
    const std::uint32_t all = (pool.size() == 32)
                                  ? ~std::uint32_t{0}
                                  : ((std::uint32_t{1} << pool.size()) - 1);
    const std::uint32_t remaining = all & ~mask;
    if (remaining == 0) {
      entry.feasible = true;
      memo.emplace(mask, std::move(entry));
      return memo.at(mask);
    }
    // A remaining pool element divisible by an added one can never be added
    // with a strict dimension drop, so full length is already unreachable.
    bool stuck = false;
    for (std::size_t i = 0; i < pool.size() && !stuck; ++i) {
      if ((mask >> i) & 1u) {
        if (divides_[i] & remaining) stuck = true;
      }
    }
    if (!stuck) {
      for (std::size_t c = 0; c < pool.size(); ++c) {
        if (!((remaining >> c) & 1u)) continue;
        const std::uint32_t child = mask | (std::uint32_t{1} << c);
        const Entry& sub = solve(child);
        if (!sub.feasible) continue;
        std::vector<std::int64_t> candidate;
        candidate.reserve(sub.best_chrono.size() + 1);
        candidate.push_back(dim_of(child));
        candidate.insert(candidate.end(), sub.best_chrono.begin(),
                         sub.best_chrono.end());
        // Chronological prefix comparison: the dimension after the next
        // addition is the most significant entry (ascending storage puts it
        // at the top index).
        if (!entry.feasible || candidate > entry.best_chrono) {
          entry.feasible = true;
          entry.best_chrono = std::move(candidate);
        }
      }
    }
    memo.emplace(mask, std::move(entry));
    return memo.at(mask);
  }
};

}  // namespace

VeroneseOracleResult rlg_veronese_oracle(const VeroneseInstance& inst,
                                         const SearchBudget& budget) {
  inst.validate();
  OracleSearch search;
  search.n = inst.n;
  search.d = inst.d;
  search.pool = veronese_addition_segment(inst.n, inst.d);
  search.max_nodes = budget.max_nodes;
  const std::size_t p = search.pool.size();
  if (p > 24) {
    throw BudgetExceeded("Veronese oracle refuses a pool of " +
                         std::to_string(p) + " addition monomials (cap 24)");
  }
  if ((std::int64_t{1} << p) > budget.max_nodes) {
    throw BudgetExceeded("Veronese oracle needs 2^" + std::to_string(p) +
                         " subsets, beyond the node budget of " +
                         std::to_string(budget.max_nodes));
  }

  search.divides_.assign(p, 0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (i != j && search.pool[i].divides(search.pool[j])) {
        search.divides_[i] |= std::uint32_t{1} << j;
      }
    }
  }

  // Mode (a): positionwise maxima over all addition sets of each size.
  std::vector<std::int64_t> best_by_count(p + 1, 0);
  const std::uint32_t subsets = std::uint32_t{1} << p;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    ++search.nodes;
    const int count = std::popcount(mask);
    const std::int64_t dim = search.dim_of(mask);
    best_by_count[count] = std::max(best_by_count[count], dim);
  }
  std::vector<std::int64_t> termwise(p + 1);
  for (std::size_t r = 0; r <= p; ++r) termwise[p - r] = best_by_count[r];

  // Mode (b): total-order maximum over full-length strictly-decreasing
  // addition orders.
  const OracleSearch::Entry& root = search.solve(0);
  if (!root.feasible) {
    throw std::logic_error("Veronese oracle found no full-length addition order");
  }
  std::vector<std::int64_t> chrono;
  chrono.push_back(inst.top_degree());
  chrono.insert(chrono.end(), root.best_chrono.begin(), root.best_chrono.end());
  std::vector<std::int64_t> lexmax(chrono.rbegin(), chrono.rend());

  VeroneseOracleResult out;
  out.termwise = IndexSequence(std::move(termwise));
  out.lexmax = IndexSequence(std::move(lexmax));
  out.nodes = search.nodes;
  return out;
}

}  // namespace secseq
