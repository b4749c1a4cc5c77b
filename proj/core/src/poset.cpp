#include "secseq/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "secseq/monomial.hpp"
#include "secseq/sequence.hpp"

namespace secseq {

namespace {

int index_of(const std::vector<std::string>& labels, const std::string& label,
             const char* role) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  throw ValidationError(std::string(role) + " '" + label +
                        "' is not an element of the poset");
}

}  // namespace

PosetInstance PosetInstance::from_pairs(
    std::vector<std::string> elements, std::vector<std::string> pick_set,
    const std::vector<std::pair<std::string, std::string>>& pairs,
    RelationKind kind) {
  if (kind == RelationKind::divisibility_of_monomials) {
    throw ValidationError(
        "divisibility instances are built via from_divisibility");
  }
  PosetInstance p;
  p.labels_ = std::move(elements);
  const int n = p.size();
  if (n < 1) throw ValidationError("a poset needs at least one element");
  if (n > 64) {
    throw ValidationError("poset has " + std::to_string(n) +
                          " elements, beyond the 64-element game limit");
  }
  {
    std::set<std::string> seen;
    for (const auto& l : p.labels_) {
      if (!seen.insert(l).second) {
        throw ValidationError("duplicate element label '" + l + "'");
      }
    }
  }

  // leq[i] as a row mask: bit j set when i <= j.
  std::vector<std::uint64_t> leq(n, 0);
  for (int i = 0; i < n; ++i) leq[i] |= std::uint64_t{1} << i;  // reflexive
  for (const auto& [x, y] : pairs) {
    const int i = index_of(p.labels_, x, "relation element");
    const int j = index_of(p.labels_, y, "relation element");
    leq[i] |= std::uint64_t{1} << j;
  }

  if (kind == RelationKind::covers) {
    // Transitive closure over the cover pairs.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        std::uint64_t reach = leq[i];
        std::uint64_t frontier = reach;
        while (frontier != 0) {
          const int j = std::countr_zero(frontier);
          frontier &= frontier - 1;
          reach |= leq[j];
        }
        if (reach != leq[i]) {
          leq[i] = reach;
          changed = true;
        }
      }
    }
  } else {
    // The given pairs must already be transitive.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || !((leq[i] >> j) & 1u)) continue;
        const std::uint64_t beyond = leq[j] & ~leq[i];
        if (beyond != 0) {
          const int k = std::countr_zero(beyond);
          throw ValidationError(
              "relation is not transitive: " + p.labels_[i] + " <= " +
              p.labels_[j] + " and " + p.labels_[j] + " <= " + p.labels_[k] +
              " but the pair (" + p.labels_[i] + ", " + p.labels_[k] +
              ") is missing");
        }
      }
    }
  }

  // Antisymmetry (also rejects cycles introduced by cover closure).
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (((leq[i] >> j) & 1u) && ((leq[j] >> i) & 1u)) {
        throw ValidationError("relation is not antisymmetric: " + p.labels_[i] +
                              " <= " + p.labels_[j] + " and " + p.labels_[j] +
                              " <= " + p.labels_[i]);
      }
    }
  }

  p.up_ = std::move(leq);
  for (const auto& a : pick_set) {
    const int i = index_of(p.labels_, a, "pick-set element");
    p.a_mask_ |= std::uint64_t{1} << i;
  }
  if (static_cast<std::size_t>(std::popcount(p.a_mask_)) != pick_set.size()) {
    throw ValidationError("pick set contains a duplicate element");
  }
  return p;
}

PosetInstance PosetInstance::from_divisibility(std::vector<std::string> elements,
                                               std::vector<std::string> pick_set,
                                               int nvars) {
  std::vector<Monomial> parsed;
  parsed.reserve(elements.size());
  for (const auto& l : elements) parsed.push_back(parse_monomial(l, nvars));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    for (std::size_t j = 0; j < parsed.size(); ++j) {
      if (i != j && parsed[i].divides(parsed[j])) {
        pairs.emplace_back(elements[i], elements[j]);
      }
    }
  }
  return from_pairs(std::move(elements), std::move(pick_set), pairs,
                    RelationKind::all);
}

bool PosetInstance::leq(int i, int j) const {
  return (up_[i] >> j) & 1u;
}

int PosetInstance::pick_set_size() const {
  return std::popcount(a_mask_);
}

std::vector<std::int64_t> PosetInstance::play(
    const std::vector<std::string>& picks) const {
  std::uint64_t alive = size() == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << size()) - 1;
  std::vector<std::int64_t> cards;
  cards.push_back(std::popcount(alive));
  std::set<std::string> seen;
  for (const auto& label : picks) {
    const int i = index_of(labels_, label, "pick");
    if (!in_pick_set(i)) {
      throw ValidationError("pick '" + label + "' is not in the pick set");
    }
    if (!seen.insert(label).second) {
      throw ValidationError("pick '" + label + "' appears twice");
    }
    if (!((alive >> i) & 1u)) {
      throw ValidationError("pick '" + label +
                            "' was already removed by an earlier pick");
    }
    alive &= ~up_[i];
    cards.push_back(std::popcount(alive));
  }
  return cards;
}

PosetInstance::GreedyResult PosetInstance::solve_greedy() const {
  std::uint64_t alive = size() == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << size()) - 1;
  GreedyResult out;
  out.cards.push_back(std::popcount(alive));
  const int turns = pick_set_size() - 1;
  for (int turn = 0; turn < turns; ++turn) {
    int best = -1;
    int best_removal = -1;
    for (int i = 0; i < size(); ++i) {
      if (!in_pick_set(i) || !((alive >> i) & 1u)) continue;
      // Strict rule: a legal pick removes no other still-present pick-set
      // element.
      const std::uint64_t removed = alive & up_[i];
      if ((removed & a_mask_) != (std::uint64_t{1} << i)) continue;
      const int removal = std::popcount(removed);
      if (best < 0 || removal < best_removal ||
          (removal == best_removal && labels_[i] < labels_[best])) {
        best = i;
        best_removal = removal;
      }
    }
    if (best < 0) {
      out.completed = false;
      return out;
    }
    alive &= ~up_[best];
    out.picks.push_back(labels_[best]);
    out.cards.push_back(std::popcount(alive));
  }
  return out;
}

namespace {

struct PosetKeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, int>& key) const {
    std::uint64_t x = key.first ^ (static_cast<std::uint64_t>(key.second) << 56);
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

}  // namespace

PosetInstance::ExactResult PosetInstance::solve_exact(
    const SearchBudget& budget) const {
  struct Entry {
    bool feasible = false;
    std::vector<std::int64_t> best;      // cards after each further pick
    std::vector<std::int64_t> termwise;  // positionwise maxima, same shape
    int best_pick = -1;
  };
  std::unordered_map<std::pair<std::uint64_t, int>, Entry, PosetKeyHash> memo;
  std::int64_t nodes = 0;
  const std::uint64_t full = size() == 64 ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << size()) - 1;
  const int turns = pick_set_size() - 1;

  auto solve = [&](auto&& self, std::uint64_t alive, int depth) -> const Entry& {
    const auto key = std::make_pair(alive, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (++nodes > budget.max_nodes) {
      throw BudgetExceeded("poset search exceeded the node budget of " +
                           std::to_string(budget.max_nodes));
    }
    Entry entry;
    if (depth == turns) {
      entry.feasible = true;
      return memo.emplace(key, std::move(entry)).first->second;
    }
    const int remaining = turns - depth;
    if (std::popcount(alive & a_mask_) < remaining) {
      // Not enough present pick-set elements left to finish.
      return memo.emplace(key, std::move(entry)).first->second;
    }
    for (int i = 0; i < size(); ++i) {
      if (!in_pick_set(i) || !((alive >> i) & 1u)) continue;
      const std::uint64_t child = alive & ~up_[i];
      const Entry& sub = self(self, child, depth + 1);
      if (!sub.feasible) continue;
      const std::int64_t child_cards = std::popcount(child);
      std::vector<std::int64_t> candidate;
      candidate.push_back(child_cards);
      candidate.insert(candidate.end(), sub.best.begin(), sub.best.end());
      // The cardinality sequence is compared as stored in play order: the
      // final entry is the most significant, so the suffix from the child
      // decides first and the head breaks ties.
      bool better = false;
      if (!entry.feasible) {
        better = true;
      } else {
        const auto cmp = compare_total(entry.best, candidate);
        better = cmp == TotalOrder::less;
      }
      if (better) {
        entry.best = candidate;
        entry.best_pick = i;
      }
      std::vector<std::int64_t> cand_termwise;
      cand_termwise.push_back(child_cards);
      cand_termwise.insert(cand_termwise.end(), sub.termwise.begin(),
                           sub.termwise.end());
      if (!entry.feasible) {
        entry.termwise = cand_termwise;
      } else {
        for (std::size_t k = 0; k < cand_termwise.size(); ++k) {
          entry.termwise[k] = std::max(entry.termwise[k], cand_termwise[k]);
        }
      }
      entry.feasible = true;
    }
    return memo.emplace(key, std::move(entry)).first->second;
  };

  const Entry root = solve(solve, full, 0);
  if (!root.feasible) {
    throw ValidationError(
        "no full-length pick sequence exists for this instance");
  }

  ExactResult out;
  out.lexmax.push_back(std::popcount(full));
  out.lexmax.insert(out.lexmax.end(), root.best.begin(), root.best.end());
  out.termwise.push_back(std::popcount(full));
  out.termwise.insert(out.termwise.end(), root.termwise.begin(),
                      root.termwise.end());
  out.nodes = nodes;

  std::uint64_t alive = full;
  for (int depth = 0; depth < turns; ++depth) {
    const Entry& e = depth == 0 ? root : solve(solve, alive, depth);
    if (e.best_pick < 0) throw std::logic_error("witness reconstruction failed");
    out.witness.push_back(labels_[e.best_pick]);
    alive &= ~up_[e.best_pick];
  }
  return out;
}

int first_improvement_position(const std::vector<std::int64_t>& base,
                               const std::vector<std::int64_t>& better) {
  for (std::size_t i = 0; i < base.size() && i < better.size(); ++i) {
    if (better[i] > base[i]) return static_cast<int>(i) + 1;
  }
  return 0;
}

PosetInstance counterexample_poset() {
  const std::vector<std::string> elements = {"1",   "a",   "b",   "b^2", "c",
                                             "a^2", "a^3", "a^4", "a^5"};
  const std::vector<std::string> pick_set = {"1", "a", "b", "c", "a^2", "a^3"};
  // Divisibility order in two variables-free form: powers of a form a chain,
  // b | b^2, and 1 divides everything.  Encode labels as monomials in the
  // three symbols a, b, c to reuse the divisibility builder: a -> x0,
  // b -> x1, c -> x2.
  std::vector<std::string> monomial_labels;
  monomial_labels.reserve(elements.size());
  for (const auto& l : elements) {
    std::string m = l;
    std::size_t pos;
    while ((pos = m.find('a')) != std::string::npos) m.replace(pos, 1, "x0");
    while ((pos = m.find('b')) != std::string::npos) m.replace(pos, 1, "x1");
    while ((pos = m.find('c')) != std::string::npos) m.replace(pos, 1, "x2");
    monomial_labels.push_back(m);
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<Monomial> parsed;
  for (const auto& l : monomial_labels) parsed.push_back(parse_monomial(l, 3));
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    for (std::size_t j = 0; j < parsed.size(); ++j) {
      if (i != j && parsed[i].divides(parsed[j])) {
        pairs.emplace_back(elements[i], elements[j]);
      }
    }
  }
  return PosetInstance::from_pairs(elements, pick_set, pairs, RelationKind::all);
}

PosetInstance veronese_monomial_game(int n, int d) {
  if (n < 1 || d < 1) {
    throw ValidationError("monomial game requires n >= 1 and d >= 1");
  }
  std::int64_t cells = 1;
  for (int i = 0; i < n; ++i) cells *= d;
  if (cells > 64) {
    throw ValidationError("monomial game box " + std::to_string(d) + "^" +
                          std::to_string(n) +
                          " exceeds the 64-element game limit");
  }
  // All box cells, descending lex so the labels list reads naturally.
  std::vector<Monomial> cell_monomials;
  std::vector<int> e(n, 0);
  while (true) {
    cell_monomials.emplace_back(e);
    int v = n - 1;
    while (v >= 0 && e[v] == d - 1) e[v--] = 0;
    if (v < 0) break;
    ++e[v];
  }
  std::sort(cell_monomials.begin(), cell_monomials.end(), lex_precedes);

  std::vector<std::string> elements;
  std::vector<std::string> pick_set;
  for (const auto& m : cell_monomials) {
    elements.push_back(format_monomial(m));
    if (m.degree() <= d) pick_set.push_back(format_monomial(m));
  }
  return PosetInstance::from_divisibility(std::move(elements),
                                          std::move(pick_set), n);
}

}  // namespace secseq
