#pragma once

#include <cstdint>
#include <vector>

#include "secseq/budget.hpp"
#include "secseq/monomial.hpp"
#include "secseq/sequence.hpp"

namespace secseq {

// Parameters of the degree-d Veronese embedding of P^n, together with the
// derived quantities the reduction game uses.
struct VeroneseInstance {
  int n = 1;
  int d = 1;

  std::int64_t ambient_points() const;  // N = binomial(n + d, n)
  std::int64_t codim() const;           // N - 1 - n
  std::int64_t top_degree() const;      // d^n
  std::int64_t reducibility() const { return d; }
  std::int64_t mu() const { return static_cast<std::int64_t>(n) * d; }

  // Throws ValidationError unless n >= 1, d >= 1 and the derived sizes fit
  // comfortably in int64 (box no larger than 2^31 cells).
  void validate() const;
};

// The addition segment driving the greedy reduction: all degree-d monomials
// in n+1 variables in descending lexicographic order, pure powers excluded,
// each dehomogenized with respect to the last variable.  Length N - n - 1.
std::vector<Monomial> veronese_addition_segment(int n, int d);

// The greedy reducible secant index sequence, ascending: the term at index
// (N - n - 1 - r) is the box quotient dimension after adding the first r
// segment monomials to the pure-power ideal.  Computed by incremental
// marking over the box.
IndexSequence rlg_veronese(const VeroneseInstance& inst);

// Closed form for n = 2, d >= 3, built from the difference list
// (for g = d-1 down to 3: g then (d-g) ones; then 2 then 3d-3 ones)
// applied downward from the top term d^2.  Throws ValidationError for d < 3.
IndexSequence n2_closed_form(std::int64_t d);

struct VeroneseOracleResult {
  // Mode (a): for each addition count r, the maximum quotient dimension over
  // *all* r-element sets of admissible extras (not just lex segments),
  // arranged in the same ascending orientation as rlg_veronese.
  IndexSequence termwise;
  // Mode (b): the greatest full-length strictly-decreasing addition sequence
  // under the total order, ascending orientation.
  IndexSequence lexmax;
  std::int64_t nodes = 0;
};

// Brute-force oracle, independent of the lex-segment pipeline: enumerates
// admissible extras (monomials m in n variables with 1 <= deg(m) <= d,
// excluding the pure powers x_i^d -- exactly the dehomogenized non-pure
// degree-d monomials) as an unordered pool.  Refuses instances whose pool
// exceeds 24 monomials or whose search exceeds the node budget.
VeroneseOracleResult rlg_veronese_oracle(const VeroneseInstance& inst,
                                         const SearchBudget& budget = {});

}  // namespace secseq
