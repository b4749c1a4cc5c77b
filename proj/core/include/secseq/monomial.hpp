#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace secseq {

// A monomial in variables x0, x1, ..., given by its exponent vector.
// The number of variables is exponents().size(); the constant monomial "1"
// has an all-zero exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  const std::vector<int>& exponents() const { return e_; }
  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const;
  int exponent(int var) const { return e_[var]; }

  bool divides(const Monomial& other) const;
  bool is_constant() const { return degree() == 0; }

  // Drops the last exponent: the image of the monomial under setting the last
  // variable to 1.  E.g. x0^2*x2 in 3 variables -> x0^2 in 2 variables.
  Monomial dehomogenize() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> e_;
};

// Descending lexicographic order with x0 heaviest: a precedes b when at the
// first differing variable a has the larger exponent.
bool lex_precedes(const Monomial& a, const Monomial& b);

// "x0^2*x1" / "x2" / "1".  Factors are '*'-separated; exponent omitted means
// 1; repeated variables accumulate.  Throws ValidationError on bad syntax,
// variable index >= nvars, or nonpositive exponent.
Monomial parse_monomial(const std::string& text, int nvars);
std::string format_monomial(const Monomial& m);

// All degree-d monomials in `nvars` variables, in descending lexicographic
// order (x0 heaviest).  With exclude_pure_powers, the monomials x_i^d are
// omitted.
std::vector<Monomial> lex_degree_d(int nvars, int d, bool exclude_pure_powers);

// One linear factor (x_var - shift) of the interpolation product attached to
// a box monomial.
struct PhiFactor {
  int var = 0;
  int shift = 0;

  bool operator==(const PhiFactor&) const = default;
};

// The interpolation product attached to a monomial m inside the box
// {0..d-1}^n: one factor (x_i - s) for every variable i and every
// 1 <= s <= e_i.  The constant monomial maps to the empty product.
// Divisibility of monomials corresponds to factor-set containment.
std::vector<PhiFactor> phi_factors(const Monomial& m);
std::string format_phi(const std::vector<PhiFactor>& factors);

// The ideal (x_0^d, ..., x_{n-1}^d) + extra monomial generators, studied
// through its standard monomials inside the box {0..d-1}^n.
class BoxIdeal {
 public:
  // Throws ValidationError when an extra has the wrong variable count, degree
  // > d, or is divisible by a pure power x_i^d (such a generator is redundant
  // with the box and the callers' games never produce one).  Extras divisible
  // by another extra are dropped silently; duplicates likewise.
  BoxIdeal(int n, int d, std::vector<Monomial> extras);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Monomial>& extras() const { return extras_; }

  // True when m lies in the ideal (divisible by a pure power or by an extra).
  bool contains(const Monomial& m) const;

  // Number of box cells {0..d-1}^n not divisible by any extra, counted by
  // direct enumeration of the box.
  std::int64_t quotient_dim() const;

  // The same count via inclusion–exclusion over subsets of the extras
  // (independent cross-check; exponential in the number of extras).
  std::int64_t quotient_dim_inclusion_exclusion() const;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Monomial> extras_;
};

}  // namespace secseq
