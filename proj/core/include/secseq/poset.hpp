#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secseq/budget.hpp"

namespace secseq {

// How a poset instance's relation pairs are to be read.
enum class RelationKind {
  covers,                     // pairs are cover relations; closure is taken
  all,                        // pairs are the full order; closure is checked
  divisibility_of_monomials,  // labels parse as monomials; x <= y iff x | y
};

// A finite poset C with a distinguished pick set A, for the removal game:
// a pick a in A removes every element >= a still present.  A play of length
// |A|-1 yields the cardinality sequence (|C|, then the count after each
// removal), stored in play order (descending values) and compared by the
// total order as stored — the final cardinality is the most significant
// position.
class PosetInstance {
 public:
  // Builds and validates an instance.  Under RelationKind::all the given
  // pairs must already be transitive; antisymmetry is always required; the
  // errors name the violating elements.  At most 64 elements.
  static PosetInstance from_pairs(std::vector<std::string> elements,
                                  std::vector<std::string> pick_set,
                                  const std::vector<std::pair<std::string, std::string>>& pairs,
                                  RelationKind kind);

  // Divisibility order: every element label is parsed as a monomial in
  // `nvars` variables.
  static PosetInstance from_divisibility(std::vector<std::string> elements,
                                         std::vector<std::string> pick_set,
                                         int nvars);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool leq(int i, int j) const;  // element i <= element j
  bool in_pick_set(int i) const { return (a_mask_ >> i) & 1u; }
  int pick_set_size() const;

  // Plays the given picks under the formal rule: each pick must be a distinct
  // pick-set element still present at its turn, i.e. not removed by an
  // earlier pick.  Returns the cardinality sequence in play order: |C| first,
  // then the count after each pick.  Errors name the offending pick.
  std::vector<std::int64_t> play(const std::vector<std::string>& picks) const;

  struct GreedyResult {
    std::vector<std::int64_t> cards;  // play order, |C| first
    std::vector<std::string> picks;
    bool completed = true;  // false if no legal pick existed at some turn
  };

  // The greedy play under the strict informal rule: a pick is legal only if
  // it removes no *other* still-present pick-set element; among legal picks
  // choose one of minimal removal count, tie-broken by smallest label.
  GreedyResult solve_greedy() const;

  struct ExactResult {
    std::vector<std::int64_t> lexmax;    // play order; total-order maximum
    std::vector<std::int64_t> termwise;  // positionwise maxima over all plays
    std::vector<std::string> witness;    // picks achieving lexmax
    std::int64_t nodes = 0;
  };

  // Exhaustive search over all full-length plays legal under the formal rule,
  // memoized on (alive mask, remaining picks).
  ExactResult solve_exact(const SearchBudget& budget = {}) const;

 private:
  PosetInstance() = default;
  void finalize_masks();

  std::vector<std::string> labels_;
  std::vector<std::uint64_t> up_;  // up_[i] = mask of {j : i <= j}, incl. i
  std::uint64_t a_mask_ = 0;
};

// First 1-based position where `better` strictly exceeds `base` (0 if none):
// the "beaten at position k" verdict between a greedy play and the lexmax.
int first_improvement_position(const std::vector<std::int64_t>& base,
                               const std::vector<std::int64_t>& better);

// The nine-element divisibility poset {1, a, b, b^2, c, a^2, a^3, a^4, a^5}
// with pick set {1, a, b, c, a^2, a^3}, on which the greedy play is beaten
// under the total order.
PosetInstance counterexample_poset();

// The monomial addition game of the degree-d Veronese of P^n as a poset
// instance: elements are the box cells {0..d-1}^n under divisibility; the
// pick set is the cells of degree <= d (the addition pool plus the constant
// cell, so full plays make exactly pool-many picks; picking the constant
// empties the board and is always total-order dominated).  Requires
// d^n <= 64.
PosetInstance veronese_monomial_game(int n, int d);

}  // namespace secseq
