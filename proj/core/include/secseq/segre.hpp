#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secseq/budget.hpp"
#include "secseq/sequence.hpp"

namespace secseq {

// Parameters of the Segre embedding of P^n x P^m and the derived quantities
// the cut game uses.
struct SegreInstance {
  int n = 1;
  int m = 1;

  std::int64_t ambient_points() const;  // N = (n+1)(m+1) - 1
  std::int64_t codim() const;           // n * m
  std::int64_t top_degree() const;      // binomial(n+m, n)
  std::int64_t reducibility() const { return 2; }
  std::int64_t mu() const { return 2 * static_cast<std::int64_t>(n + m); }

  // Throws ValidationError unless n, m >= 1; throws BudgetExceeded when
  // binomial(n+m, n) exceeds the 128-bit state-mask limit.
  void validate() const;
};

// 128-bit subset mask over the bipartition states.
struct Mask128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  bool operator==(const Mask128&) const = default;
};

Mask128 mask_and(Mask128 a, Mask128 b);
Mask128 mask_andnot(Mask128 a, Mask128 b);  // a & ~b
bool mask_test(Mask128 m, int bit);
Mask128 mask_with(Mask128 m, int bit);
int mask_popcount(Mask128 m);

// A cut (a, b): keeps every bipartition whose first class contains a or
// misses b.  Labels are 1-based points of {1, ..., n+m}, a != b.
struct Cut {
  int a = 0;
  int b = 0;

  bool operator==(const Cut&) const = default;
};

// Precomputed game context for one Segre instance: the bipartition states
// (n-subsets of {1..n+m} in colexicographic rank order over 0-based labels),
// all cuts, and each cut's removal mask.
class SegreGame {
 public:
  explicit SegreGame(const SegreInstance& inst);

  const SegreInstance& instance() const { return inst_; }
  int bits() const { return bits_; }  // binomial(n+m, n)
  Mask128 full_mask() const { return full_; }
  const std::vector<Cut>& cuts() const { return cuts_; }
  Mask128 removal_mask(int cut_index) const { return removal_[cut_index]; }

  // The state at colex rank r, as its sorted 1-based first class.
  const std::vector<int>& state_members(int r) const { return states_[r]; }

 private:
  SegreInstance inst_;
  int bits_ = 0;
  Mask128 full_;
  std::vector<std::vector<int>> states_;
  std::vector<Cut> cuts_;
  std::vector<Mask128> removal_;
};

// A position in the cut game: the set of surviving bipartitions plus the cut
// history that produced it.
struct CutState {
  Mask128 alive;
  std::vector<Cut> history;
};

CutState initial_state(const SegreGame& game);
CutState apply_cut(const SegreGame& game, const CutState& state, Cut cut);

struct SegreResult {
  IndexSequence seq;          // ascending: index j = count after nm - j cuts
  std::vector<Cut> witness;   // the nm cuts of one optimal play, in order
  std::vector<std::int64_t> removals;  // removal count of each witness cut
  std::int64_t nodes = 0;
};

// The greedy reducible secant index sequence of the Segre instance: the
// total-order maximum over all nm-cut plays that strictly shrink the alive
// set at every step, found by minimal-removal-first search with fallback,
// exact tie exploration, and memoization on (alive mask, depth).
// threads > 1 parallelizes the exploration of the root tie group; results
// and the sequence are identical to the single-threaded run (node counts may
// differ across thread counts).
SegreResult rlg_segre(const SegreInstance& inst, const SearchBudget& budget = {},
                      int threads = 1);

struct SegreOracleResult {
  IndexSequence lexmax;                 // same orientation as rlg_segre
  std::vector<std::int64_t> termwise;   // ascending positionwise maxima
  std::int64_t nodes = 0;
};

// Independent brute-force oracle: full memoized enumeration over *all* cuts
// at every state (no removal-size ordering), computing both the total-order
// maximum and the termwise profile.  Refuses instances with more than 16
// bipartition states.
SegreOracleResult rlg_segre_oracle(const SegreInstance& inst,
                                   const SearchBudget& budget = {});

// The closed-form removal count of any cut applied to the full state:
// binomial(n+m-2, n-1).  This is the size of the last gap of the sequence.
std::int64_t segre_full_state_removal(const SegreInstance& inst);

}  // namespace secseq
