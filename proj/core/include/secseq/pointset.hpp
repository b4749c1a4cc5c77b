#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "secseq/budget.hpp"
#include "secseq/sequence.hpp"

namespace secseq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "2/3", "-1", "0"; denominator must be nonzero.  Throws ValidationError.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

// A finite set of distinct points of P^n with exact rational homogeneous
// coordinates.
struct PointConfig {
  int ambient_dim = 0;                          // n
  std::vector<std::vector<Rational>> points;    // each of size n+1
  std::vector<std::string> labels;              // same length as points

  int size() const { return static_cast<int>(points.size()); }
};

// Throws ValidationError unless: ambient_dim >= 1, at least one point, every
// coordinate vector has n+1 entries, none is the zero vector, and no two are
// proportional (all points projectively distinct).
void validate_config(const PointConfig& cfg);

// Exact rank of the subset's coordinate vectors over Q, by fraction-free
// (Bareiss) elimination on denominator-cleared integer rows.
int subset_rank(const PointConfig& cfg, const std::vector<int>& subset);

// Y ∩ span(subset): every point index whose vector lies in the span.
std::vector<int> closure(const PointConfig& cfg, const std::vector<int>& subset);

struct Flat {
  std::vector<int> members;  // sorted point indices
  int rank = 0;
};

// All flats (closure-closed subsets), grouped by rank; rank 0 is the empty
// flat.  flats_of_rank(r) returns indices into flats.
struct FlatLattice {
  std::vector<Flat> flats;

  std::vector<int> flats_of_rank(int r) const;
  int top_rank() const;
};

// Enumerates the full flat lattice by repeated closure (BFS by rank).
// Refuses configurations with more than 16 points.
FlatLattice flats(const PointConfig& cfg, const SearchBudget& budget = {});

// Term j (0-based, j = 0..n) = maximum size of a subset of rank <= j+1,
// found by pruned subset search.  Ascending by construction.
IndexSequence secant_sequence(const PointConfig& cfg, const SearchBudget& budget = {});

struct ChainResult {
  IndexSequence seq;
  // witness[j] = members of the flat chosen at position j (nested chain).
  std::vector<std::vector<int>> witness;
};

// The total-order maximum over all nested chains F_0 ⊆ F_1 ⊆ ... ⊆ F_n of
// flats with rank(F_j) <= j+1 and |F_j| >= 1, of the count vector
// (|F_0|, ..., |F_n|).  Flats may repeat along a chain (a stalled position);
// the top flat is all of Y.
ChainResult chain_sequence(const PointConfig& cfg, const SearchBudget& budget = {});

// One named genericity condition of a shipped configuration, with its result.
struct GenericityCheck {
  std::string name;
  bool pass = false;
};

// The 8-point configuration of the Question-2 example in P^3: three collinear
// points p1,p2,p3 on a line T and five points q1..q5 on a plane H, chosen so
// that T ⊄ H, no p lies on H, no three q's are collinear, and no two q's lie
// on a line through T ∩ H.
PointConfig q2_example_config();

// Verifies every stated genericity condition of the q2 configuration by exact
// rank computations; all must pass before its sequences are trusted.
std::vector<GenericityCheck> verify_q2_genericity(const PointConfig& cfg);

// The 3x3 affine grid {1,2,3}^2 embedded in P^2 via (x : y : 1).
PointConfig grid_3x3_config();

// n+1 coordinate points of P^n (general position simplex).
PointConfig simplex_config(int n);

}  // namespace secseq
