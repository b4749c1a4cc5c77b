#include "secseq/pointset.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace secseq {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw ValidationError("empty rational literal");
  const auto slash = t.find('/');
  BigInt num;
  BigInt den = 1;
  try {
    if (slash == std::string::npos) {
      num = BigInt(t);
    } else {
      num = BigInt(t.substr(0, slash));
      den = BigInt(t.substr(slash + 1));
    }
  } catch (const std::runtime_error&) {
    throw ValidationError("malformed rational literal \"" + text + "\"");
  }
  if (den == 0) {
    throw ValidationError("rational literal \"" + text + "\" has denominator 0");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

void validate_config(const PointConfig& cfg) {
  if (cfg.ambient_dim < 1) {
    throw ValidationError("ambient dimension must be >= 1");
  }
  if (cfg.points.empty()) {
    throw ValidationError("a point configuration needs at least one point");
  }
  if (!cfg.labels.empty() && cfg.labels.size() != cfg.points.size()) {
    throw ValidationError("labels and points must have the same length");
  }
  const std::size_t width = static_cast<std::size_t>(cfg.ambient_dim) + 1;
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    if (cfg.points[i].size() != width) {
      throw ValidationError("point " + std::to_string(i) + " has " +
                            std::to_string(cfg.points[i].size()) +
                            " coordinates, expected " + std::to_string(width));
    }
    bool all_zero = true;
    for (const auto& x : cfg.points[i]) {
      if (x != 0) all_zero = false;
    }
    if (all_zero) {
      throw ValidationError("point " + std::to_string(i) +
                            " is the zero vector");
    }
  }
  // Pairwise non-proportional: cross-ratio of first nonzero entries.
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.points.size(); ++j) {
      bool proportional = true;
      // p_i and p_j are proportional iff all 2x2 minors vanish.
      for (std::size_t r = 0; r < width && proportional; ++r) {
        for (std::size_t s = r + 1; s < width && proportional; ++s) {
          if (cfg.points[i][r] * cfg.points[j][s] !=
              cfg.points[i][s] * cfg.points[j][r]) {
            proportional = false;
          }
        }
      }
      if (proportional) {
        throw ValidationError("points " + std::to_string(i) + " and " +
                              std::to_string(j) +
                              " coincide as projective points");
      }
    }
  }
}

namespace {

// Denominator-cleared integer row of a point.
std::vector<BigInt> integer_row(const std::vector<Rational>& p) {
  BigInt lcm = 1;
  for (const auto& x : p) {
    const BigInt den = boost::multiprecision::denominator(x);
    lcm = boost::multiprecision::lcm(lcm, den);
  }
  std::vector<BigInt> row;
  row.reserve(p.size());
  for (const auto& x : p) {
    row.push_back(boost::multiprecision::numerator(x) *
                  (lcm / boost::multiprecision::denominator(x)));
  }
  return row;
}

// Fraction-free (Bareiss) elimination rank of integer rows.
int bareiss_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  BigInt prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    // Find a pivot row at or below `rank` with a nonzero entry in `col`.
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev_pivot;
      }
      m[r][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

int subset_rank(const PointConfig& cfg, const std::vector<int>& subset) {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(subset.size());
  for (int i : subset) {
    if (i < 0 || i >= cfg.size()) {
      throw ValidationError("point index " + std::to_string(i) + " out of range");
    }
    rows.push_back(integer_row(cfg.points[i]));
  }
  return bareiss_rank(std::move(rows));
}

std::vector<int> closure(const PointConfig& cfg, const std::vector<int>& subset) {
  const int base_rank = subset_rank(cfg, subset);
  std::vector<int> closed;
  std::set<int> in_subset(subset.begin(), subset.end());
  std::vector<int> extended(subset);
  extended.push_back(0);
  for (int p = 0; p < cfg.size(); ++p) {
    if (in_subset.count(p)) {
      closed.push_back(p);
      continue;
    }
    extended.back() = p;
    if (subset_rank(cfg, extended) == base_rank) closed.push_back(p);
  }
  std::sort(closed.begin(), closed.end());
  return closed;
}

std::vector<int> FlatLattice::flats_of_rank(int r) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (flats[i].rank == r) out.push_back(static_cast<int>(i));
  }
  return out;
}

int FlatLattice::top_rank() const {
  int top = 0;
  for (const auto& f : flats) top = std::max(top, f.rank);
  return top;
}

namespace {

std::uint32_t members_mask(const std::vector<int>& members) {
  std::uint32_t mask = 0;
  for (int i : members) mask |= std::uint32_t{1} << i;
  return mask;
}

void check_point_budget(const PointConfig& cfg) {
  validate_config(cfg);
  if (cfg.size() > 16) {
    throw BudgetExceeded("configuration has " + std::to_string(cfg.size()) +
                         " points, beyond the 16-point enumeration budget");
  }
}

}  // namespace

FlatLattice flats(const PointConfig& cfg, const SearchBudget& budget) {
  check_point_budget(cfg);
  (void)budget;
  FlatLattice lattice;
  std::set<std::uint32_t> seen;

  // Rank 0: the empty flat (no zero vectors, so its closure is empty).
  lattice.flats.push_back(Flat{{}, 0});
  seen.insert(0);

  // BFS by rank: flats of rank r+1 are closures of (rank-r flat) + one point.
  std::size_t frontier_begin = 0;
  while (frontier_begin < lattice.flats.size()) {
    const std::size_t frontier_end = lattice.flats.size();
    for (std::size_t f = frontier_begin; f < frontier_end; ++f) {
      const Flat flat = lattice.flats[f];
      for (int p = 0; p < cfg.size(); ++p) {
        if (std::binary_search(flat.members.begin(), flat.members.end(), p)) {
          continue;
        }
        std::vector<int> extended = flat.members;
        extended.push_back(p);
        std::vector<int> closed = closure(cfg, extended);
        const std::uint32_t mask = members_mask(closed);
        if (seen.insert(mask).second) {
          lattice.flats.push_back(Flat{std::move(closed), flat.rank + 1});
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return lattice;
}

namespace {

// Largest subset of rank <= max_rank, by pruned DFS over point indices.
int max_subset_of_rank(const PointConfig& cfg, int max_rank,
                       const SearchBudget& budget, std::int64_t& nodes) {
  const int n = cfg.size();
  int best = 0;
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, int next) -> void {
    if (++nodes > budget.max_nodes) {
      throw BudgetExceeded("subset search exceeded the node budget");
    }
    best = std::max(best, static_cast<int>(chosen.size()));
    if (next == n) return;
    // Bound: even taking every remaining point cannot beat `best`.
    if (static_cast<int>(chosen.size()) + (n - next) <= best) return;
    // Try taking `next` if the rank stays within bound.
    chosen.push_back(next);
    if (subset_rank(cfg, chosen) <= max_rank) {
      self(self, next + 1);
    }
    chosen.pop_back();
    self(self, next + 1);
  };
  dfs(dfs, 0);
  return best;
}

}  // namespace

IndexSequence secant_sequence(const PointConfig& cfg, const SearchBudget& budget) {
  check_point_budget(cfg);
  std::int64_t nodes = 0;
  std::vector<std::int64_t> terms;
  for (int j = 0; j <= cfg.ambient_dim; ++j) {
    terms.push_back(max_subset_of_rank(cfg, j + 1, budget, nodes));
  }
  return IndexSequence(std::move(terms));
}

ChainResult chain_sequence(const PointConfig& cfg, const SearchBudget& budget) {
  check_point_budget(cfg);
  const FlatLattice lattice = flats(cfg, budget);
  const int n = cfg.ambient_dim;
  const int flat_count = static_cast<int>(lattice.flats.size());

  // Precompute containment: contained[f] = flats that are subsets of f.
  std::vector<std::uint32_t> masks(flat_count);
  for (int f = 0; f < flat_count; ++f) masks[f] = members_mask(lattice.flats[f].members);

  // best[j][f] = the total-order maximum of (|F_0|, ..., |F_j|) over nested
  // chains ending at flat f at position j (rank(F_i) <= i+1, counts >= 1).
  // Compared from the top index, the deeper suffix decides first, so the
  // maximum decomposes position by position.
  std::vector<std::map<int, std::vector<std::int64_t>>> best(n + 1);
  std::vector<std::map<int, int>> parent(n + 1);
  for (int f = 0; f < flat_count; ++f) {
    const Flat& flat = lattice.flats[f];
    if (flat.rank <= 1 && !flat.members.empty()) {
      best[0][f] = {static_cast<std::int64_t>(flat.members.size())};
      parent[0][f] = -1;
    }
  }
  for (int j = 1; j <= n; ++j) {
    for (int f = 0; f < flat_count; ++f) {
      const Flat& flat = lattice.flats[f];
      if (flat.rank > j + 1 || flat.members.empty()) continue;
      const std::vector<std::int64_t>* best_sub = nullptr;
      int best_parent = -1;
      for (const auto& [g, sub] : best[j - 1]) {
        if ((masks[g] & ~masks[f]) != 0) continue;  // not nested
        if (best_sub == nullptr ||
            compare_total(*best_sub, sub) == TotalOrder::less) {
          best_sub = &sub;
          best_parent = g;
        }
      }
      if (best_sub == nullptr) continue;
      std::vector<std::int64_t> seq = *best_sub;
      seq.push_back(static_cast<std::int64_t>(flat.members.size()));
      best[j][f] = std::move(seq);
      parent[j][f] = best_parent;
    }
  }

  // The top flat is all of Y.
  const int top = [&] {
    for (int f = 0; f < flat_count; ++f) {
      if (static_cast<int>(lattice.flats[f].members.size()) == cfg.size()) return f;
    }
    throw std::logic_error("flat lattice lost its top flat");
  }();
  const auto it = best[n].find(top);
  if (it == best[n].end()) {
    throw std::logic_error("no chain reaches the full configuration");
  }

  ChainResult out;
  out.seq = IndexSequence(it->second);
  int f = top;
  for (int j = n; j >= 0; --j) {
    out.witness.push_back(lattice.flats[f].members);
    if (j > 0) f = parent[j].at(f);
  }
  std::reverse(out.witness.begin(), out.witness.end());
  return out;
}

PointConfig q2_example_config() {
  PointConfig cfg;
  cfg.ambient_dim = 3;
  const auto pt = [](int a, int b, int c, int d) {
    return std::vector<Rational>{a, b, c, d};
  };
  // Three collinear points on the line T = {x2 = x3 = 0} ...
  cfg.points.push_back(pt(1, 0, 0, 0));
  cfg.points.push_back(pt(1, 1, 0, 0));
  cfg.points.push_back(pt(1, 2, 0, 0));
  // ... and five points on the plane H = {x0 = 0}, placed on the moment
  // curve (0 : 1 : t : t^2) so no three are collinear and no two lie on a
  // line through T ∩ H = (0 : 1 : 0 : 0).
  for (int t = 1; t <= 5; ++t) {
    cfg.points.push_back(pt(0, 1, t, t * t));
  }
  cfg.labels = {"p1", "p2", "p3", "q1", "q2", "q3", "q4", "q5"};
  return cfg;
}

std::vector<GenericityCheck> verify_q2_genericity(const PointConfig& cfg) {
  std::vector<GenericityCheck> checks;
  const auto add = [&](std::string name, bool pass) {
    checks.push_back(GenericityCheck{std::move(name), pass});
  };

  bool distinct = true;
  try {
    validate_config(cfg);
  } catch (const ValidationError&) {
    distinct = false;
  }
  add("eight distinct projective points in P^3",
      distinct && cfg.size() == 8 && cfg.ambient_dim == 3);
  if (!checks.back().pass) return checks;

  add("p1, p2, p3 span a line T", subset_rank(cfg, {0, 1, 2}) == 2);
  add("q1..q5 span a plane H", subset_rank(cfg, {3, 4, 5, 6, 7}) == 3);
  add("T is not contained in H",
      subset_rank(cfg, {0, 1, 2, 3, 4, 5, 6, 7}) == 4);
  {
    bool ok = true;
    for (int p = 0; p < 3; ++p) {
      if (subset_rank(cfg, {3, 4, 5, 6, 7, p}) != 4) ok = false;
    }
    add("no p_i lies on H", ok);
  }
  {
    bool ok = true;
    for (int i = 3; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) {
        for (int k = j + 1; k < 8; ++k) {
          if (subset_rank(cfg, {i, j, k}) != 3) ok = false;
        }
      }
    }
    add("no three q_i are collinear", ok);
  }
  {
    // The line through two q's meets T iff together with T they span only a
    // plane (T ∩ H is the one point of T on H).
    bool ok = true;
    for (int i = 3; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) {
        if (subset_rank(cfg, {i, j, 0, 1}) != 4) ok = false;
      }
    }
    add("no two q_i lie on a line meeting T", ok);
  }
  return checks;
}

PointConfig grid_3x3_config() {
  PointConfig cfg;
  cfg.ambient_dim = 2;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      cfg.points.push_back({Rational(i), Rational(j), Rational(1)});
      cfg.labels.push_back("g" + std::to_string(i) + std::to_string(j));
    }
  }
  return cfg;
}

PointConfig simplex_config(int n) {
  if (n < 1) throw ValidationError("simplex requires ambient dimension >= 1");
  PointConfig cfg;
  cfg.ambient_dim = n;
  for (int i = 0; i <= n; ++i) {
    std::vector<Rational> p(n + 1, Rational(0));
    p[i] = 1;
    cfg.points.push_back(std::move(p));
    cfg.labels.push_back("e" + std::to_string(i));
  }
  return cfg;
}

}  // namespace secseq
