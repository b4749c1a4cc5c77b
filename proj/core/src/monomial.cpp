#include "secseq/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

#include "secseq/budget.hpp"
#include "secseq/combinatorics.hpp"

namespace secseq {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int x : e_) {
    if (x < 0) throw ValidationError("monomial exponents must be >= 0");
  }
}

int Monomial::degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

bool Monomial::divides(const Monomial& other) const {
  if (e_.size() != other.e_.size()) {
    throw ValidationError("divisibility requires the same variable count");
  }
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::dehomogenize() const {
  if (e_.empty()) {
    throw ValidationError("cannot dehomogenize a monomial in zero variables");
  }
  return Monomial(std::vector<int>(e_.begin(), e_.end() - 1));
}

bool lex_precedes(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw ValidationError("lexicographic comparison requires the same variable count");
  }
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  }
  return false;
}

Monomial parse_monomial(const std::string& text, int nvars) {
  if (nvars < 0) throw ValidationError("negative variable count");
  std::vector<int> e(nvars, 0);
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto read_int = [&](const char* what) {
    skip_ws();
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) {
      throw ValidationError(std::string("expected ") + what + " at position " +
                            std::to_string(start) + " of \"" + text + "\"");
    }
    return std::stoi(text.substr(start, i - start));
  };

  skip_ws();
  if (i < text.size() && text[i] == '1' &&
      [&] { std::size_t j = i + 1; while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j; return j == text.size(); }()) {
    return Monomial(std::move(e));  // the constant monomial
  }
  bool expect_factor = true;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (expect_factor) {
      if (text[i] != 'x') {
        throw ValidationError("expected a factor 'x<i>' at position " +
                              std::to_string(i) + " of \"" + text + "\"");
      }
      ++i;
      const int var = read_int("a variable index");
      if (var >= nvars) {
        throw ValidationError("variable x" + std::to_string(var) +
                              " out of range for " + std::to_string(nvars) +
                              " variables in \"" + text + "\"");
      }
      int exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        exp = read_int("an exponent");
        if (exp < 1) {
          throw ValidationError("exponents must be >= 1 in \"" + text + "\"");
        }
      }
      e[var] += exp;
      expect_factor = false;
    } else {
      if (text[i] != '*') {
        throw ValidationError("expected '*' between factors at position " +
                              std::to_string(i) + " of \"" + text + "\"");
      }
      ++i;
      expect_factor = true;
    }
  }
  if (expect_factor) {
    throw ValidationError("monomial text \"" + text +
                          "\" is empty or ends with a dangling '*'");
  }
  return Monomial(std::move(e));
}

std::string format_monomial(const Monomial& m) {
  if (m.is_constant()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int v = 0; v < m.nvars(); ++v) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    if (!first) out << '*';
    out << 'x' << v;
    if (e > 1) out << '^' << e;
    first = false;
  }
  return out.str();
}

namespace {

void gen_degree_d(int nvars, int var, int remaining, std::vector<int>& e,
                  bool exclude_pure_powers, int d,
                  std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    e[var] = remaining;
    // A pure power carries its whole degree on one variable.
    bool is_pure = false;
    for (int v = 0; v < nvars; ++v) {
      if (e[v] == d) is_pure = true;
    }
    if (!(exclude_pure_powers && is_pure)) out.push_back(Monomial{e});
    e[var] = 0;
    return;
  }
  // Descending lex with x0 heaviest: highest exponent of the current
  // variable first.
  for (int take = remaining; take >= 0; --take) {
    e[var] = take;
    gen_degree_d(nvars, var + 1, remaining - take, e, exclude_pure_powers, d, out);
  }
  e[var] = 0;
}

}  // namespace

std::vector<Monomial> lex_degree_d(int nvars, int d, bool exclude_pure_powers) {
  if (nvars < 1) throw ValidationError("lex_degree_d requires at least one variable");
  if (d < 0) throw ValidationError("lex_degree_d requires degree >= 0");
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  if (nvars == 1) {
    e[0] = d;
    Monomial m{e};
    if (!(exclude_pure_powers && d >= 1)) out.push_back(std::move(m));
    return out;
  }
  gen_degree_d(nvars, 0, d, e, exclude_pure_powers, d, out);
  return out;
}

std::vector<PhiFactor> phi_factors(const Monomial& m) {
  std::vector<PhiFactor> out;
  for (int v = 0; v < m.nvars(); ++v) {
    for (int s = 1; s <= m.exponent(v); ++s) out.push_back(PhiFactor{v, s});
  }
  return out;
}

std::string format_phi(const std::vector<PhiFactor>& factors) {
  if (factors.empty()) return "1";
  std::ostringstream out;
  for (const auto& f : factors) out << "(x" << f.var << "-" << f.shift << ")";
  return out.str();
}

BoxIdeal::BoxIdeal(int n, int d, std::vector<Monomial> extras) : n_(n), d_(d) {
  if (n < 1) throw ValidationError("box ideal requires n >= 1");
  if (d < 1) throw ValidationError("box ideal requires d >= 1");
  // Guard the enumeration cost of quotient_dim up front.
  std::int64_t cells = 1;
  for (int i = 0; i < n; ++i) {
    cells *= d;
    if (cells > (std::int64_t{1} << 31)) {
      throw BudgetExceeded("standard-monomial box " + std::to_string(d) + "^" +
                           std::to_string(n) + " exceeds the supported size");
    }
  }
  for (auto& m : extras) {
    if (m.nvars() != n) {
      throw ValidationError("extra generator " + format_monomial(m) + " has " +
                            std::to_string(m.nvars()) + " variables, expected " +
                            std::to_string(n));
    }
    if (m.degree() > d) {
      throw ValidationError("extra generator " + format_monomial(m) +
                            " has degree " + std::to_string(m.degree()) +
                            " > " + std::to_string(d));
    }
    for (int v = 0; v < n; ++v) {
      if (m.exponent(v) >= d) {
        throw ValidationError("extra generator " + format_monomial(m) +
                              " is divisible by the pure power x" +
                              std::to_string(v) + "^" + std::to_string(d));
      }
    }
  }
  // Keep only minimal generators: drop any extra divisible by another
  // (duplicates included).
  for (std::size_t i = 0; i < extras.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < extras.size() && !redundant; ++j) {
      if (i == j) continue;
      if (extras[j].divides(extras[i])) {
        // Break duplicate ties by keeping the earlier copy.
        redundant = !(extras[i] == extras[j] && j > i);
      }
    }
    if (!redundant) extras_.push_back(extras[i]);
  }
}

bool BoxIdeal::contains(const Monomial& m) const {
  if (m.nvars() != n_) {
    throw ValidationError("membership test requires a monomial in " +
                          std::to_string(n_) + " variables");
  }
  for (int v = 0; v < n_; ++v) {
    if (m.exponent(v) >= d_) return true;
  }
  for (const auto& g : extras_) {
    if (g.divides(m)) return true;
  }
  return false;
}

std::int64_t BoxIdeal::quotient_dim() const {
  // Odometer over the box {0..d-1}^n, counting cells hit by no extra.
  std::vector<int> e(n_, 0);
  std::int64_t count = 0;
  while (true) {
    bool in_ideal = false;
    for (const auto& g : extras_) {
      bool divides = true;
      for (int v = 0; v < n_; ++v) {
        if (g.exponent(v) > e[v]) {
          divides = false;
          break;
        }
      }
      if (divides) {
        in_ideal = true;
        break;
      }
    }
    if (!in_ideal) ++count;
    int v = n_ - 1;
    while (v >= 0 && e[v] == d_ - 1) e[v--] = 0;
    if (v < 0) break;
    ++e[v];
  }
  return count;
}

std::int64_t BoxIdeal::quotient_dim_inclusion_exclusion() const {
  const int k = static_cast<int>(extras_.size());
  if (k > 20) {
    throw BudgetExceeded("inclusion-exclusion over " + std::to_string(k) +
                         " generators is out of budget");
  }
  std::int64_t total = 0;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    // lcm of the chosen extras; multiples of it inside the box number
    // prod_i max(0, d - e_i).
    std::vector<int> lcm(n_, 0);
    for (int j = 0; j < k; ++j) {
      if ((mask >> j) & 1u) {
        for (int v = 0; v < n_; ++v) {
          lcm[v] = std::max(lcm[v], extras_[j].exponent(v));
        }
      }
    }
    std::int64_t multiples = 1;
    for (int v = 0; v < n_; ++v) {
      multiples *= std::max(0, d_ - lcm[v]);
    }
    total += (std::popcount(mask) % 2 == 0) ? multiples : -multiples;
  }
  return total;
}

}  // namespace secseq
