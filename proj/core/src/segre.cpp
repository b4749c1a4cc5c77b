#include "secseq/segre.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "secseq/combinatorics.hpp"

namespace secseq {

std::int64_t SegreInstance::ambient_points() const {
  return static_cast<std::int64_t>(n + 1) * (m + 1) - 1;
}

std::int64_t SegreInstance::codim() const {
  return static_cast<std::int64_t>(n) * m;
}

std::int64_t SegreInstance::top_degree() const {
  return binomial(n + m, n);
}

void SegreInstance::validate() const {
  if (n < 1 || m < 1) {
    throw ValidationError("Segre instance requires n >= 1 and m >= 1, got n=" +
                          std::to_string(n) + " m=" + std::to_string(m));
  }
  if (top_degree() > 128) {
    throw BudgetExceeded("Segre instance has " + std::to_string(top_degree()) +
                         " bipartition states, beyond the 128-bit mask limit");
  }
}

Mask128 mask_and(Mask128 a, Mask128 b) { return {a.lo & b.lo, a.hi & b.hi}; }
Mask128 mask_andnot(Mask128 a, Mask128 b) { return {a.lo & ~b.lo, a.hi & ~b.hi}; }

bool mask_test(Mask128 m, int bit) {
  return bit < 64 ? (m.lo >> bit) & 1u : (m.hi >> (bit - 64)) & 1u;
}

Mask128 mask_with(Mask128 m, int bit) {
  if (bit < 64) {
    m.lo |= std::uint64_t{1} << bit;
  } else {
    m.hi |= std::uint64_t{1} << (bit - 64);
  }
  return m;
}

int mask_popcount(Mask128 m) {
  return std::popcount(m.lo) + std::popcount(m.hi);
}

SegreGame::SegreGame(const SegreInstance& inst) : inst_(inst) {
  inst_.validate();
  const int points = inst_.n + inst_.m;
  bits_ = static_cast<int>(inst_.top_degree());

  states_.reserve(bits_);
  for (int r = 0; r < bits_; ++r) {
    std::vector<int> members = colex_unrank(r, inst_.n);  // 0-based
    for (int& x : members) ++x;                           // expose 1-based
    states_.push_back(std::move(members));
  }

  full_ = {};
  for (int r = 0; r < bits_; ++r) full_ = mask_with(full_, r);

  for (int a = 1; a <= points; ++a) {
    for (int b = 1; b <= points; ++b) {
      if (a == b) continue;
      Mask128 removal{};
      for (int r = 0; r < bits_; ++r) {
        const auto& mem = states_[r];
        const bool has_a = std::binary_search(mem.begin(), mem.end(), a);
        const bool has_b = std::binary_search(mem.begin(), mem.end(), b);
        // The cut keeps states with a in the first class or b outside it.
        if (!has_a && has_b) removal = mask_with(removal, r);
      }
      cuts_.push_back(Cut{a, b});
      removal_.push_back(removal);
    }
  }
}

CutState initial_state(const SegreGame& game) {
  return CutState{game.full_mask(), {}};
}

CutState apply_cut(const SegreGame& game, const CutState& state, Cut cut) {
  const auto& cuts = game.cuts();
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i] == cut) {
      CutState next;
      next.alive = mask_andnot(state.alive, game.removal_mask(static_cast<int>(i)));
      next.history = state.history;
      next.history.push_back(cut);
      return next;
    }
  }
  throw ValidationError("cut (" + std::to_string(cut.a) + "," +
                        std::to_string(cut.b) + ") is not a legal move of this game");
}

std::int64_t segre_full_state_removal(const SegreInstance& inst) {
  inst.validate();
  return binomial(inst.n + inst.m - 2, inst.n - 1);
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<Mask128, int>& key) const {
    auto mix = [](std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ull;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
      return x ^ (x >> 31);
    };
    return static_cast<std::size_t>(
        mix(key.first.lo ^ mix(key.first.hi ^ static_cast<std::uint64_t>(key.second))));
  }
};

struct KeyEq {
  bool operator()(const std::pair<Mask128, int>& a,
                  const std::pair<Mask128, int>& b) const {
    return a.first == b.first && a.second == b.second;
  }
};

struct Entry {
  bool feasible = false;
  std::vector<std::int32_t> best;  // alive counts after each further cut
  int best_cut = -1;
};

// One worker's search context.  Workers never share a memo, so the search is
// lock-free; the root may distribute its tie-group children across workers.
struct Solver {
  const SegreGame* game;
  std::int64_t max_nodes;
  std::int64_t nodes = 0;
  std::unordered_map<std::pair<Mask128, int>, Entry, KeyHash, KeyEq> memo;

  const Entry& solve(Mask128 alive, int depth) {
    const auto key = std::make_pair(alive, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (++nodes > max_nodes) {
      throw BudgetExceeded("Segre search exceeded the node budget of " +
                           std::to_string(max_nodes));
    }
    const int total = static_cast<int>(game->instance().codim());
    const int remaining = total - depth;
    Entry entry;
    if (remaining == 0) {
      entry.feasible = true;
      return memo.emplace(key, std::move(entry)).first->second;
    }
    const int alive_count = mask_popcount(alive);
    // Every further cut must remove at least one state and at least one
    // state must survive to the end.
    if (remaining > alive_count - 1) {
      return memo.emplace(key, std::move(entry)).first->second;
    }

    // Group cuts by removal count; explore minimal removal first and fall
    // back to the next group only when a group has no feasible completion.
    std::map<int, std::vector<Mask128>> children_by_removal;
    const auto& cuts = game->cuts();
    for (std::size_t c = 0; c < cuts.size(); ++c) {
      const Mask128 rem = mask_and(alive, game->removal_mask(static_cast<int>(c)));
      const int removed = mask_popcount(rem);
      if (removed == 0) continue;
      children_by_removal[removed].push_back(mask_andnot(alive, rem));
    }
    for (auto& [removed, children] : children_by_removal) {
      // Identical children arise from different cuts; search each once.
      std::sort(children.begin(), children.end(),
                [](const Mask128& a, const Mask128& b) {
                  return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
                });
      children.erase(std::unique(children.begin(), children.end()), children.end());
      const std::int32_t child_alive = static_cast<std::int32_t>(alive_count - removed);
      for (const Mask128& child : children) {
        const Entry& sub = solve(child, depth + 1);
        if (!sub.feasible) continue;
        // Chronological comparison: entry.best[0] (the next alive count) is
        // the most significant position of the ascending sequence.
        bool better = false;
        if (!entry.feasible) {
          better = true;
        } else if (entry.best[0] == child_alive) {
          better = std::lexicographical_compare(
              entry.best.begin() + 1, entry.best.end(), sub.best.begin(),
              sub.best.end());
        }
        if (better) {
          entry.feasible = true;
          entry.best.clear();
          entry.best.push_back(child_alive);
          entry.best.insert(entry.best.end(), sub.best.begin(), sub.best.end());
          // Recover which cut produced this child for witness reconstruction.
          entry.best_cut = -1;
          for (std::size_t c = 0; c < cuts.size(); ++c) {
            const Mask128 rem =
                mask_and(alive, game->removal_mask(static_cast<int>(c)));
            if (mask_popcount(rem) == removed &&
                mask_andnot(alive, rem) == child) {
              entry.best_cut = static_cast<int>(c);
              break;
            }
          }
        }
      }
      if (entry.feasible) break;  // smaller removal strictly dominates
    }
    return memo.emplace(key, std::move(entry)).first->second;
  }
};

SegreResult finish_result(const SegreGame& game, Solver& solver,
                          const Entry& root, std::int64_t nodes) {
  const auto& inst = game.instance();
  const int total = static_cast<int>(inst.codim());
  if (!root.feasible) {
    throw std::logic_error("Segre search found no full-length cut sequence");
  }
  std::vector<std::int64_t> chrono;
  chrono.push_back(game.bits());
  for (std::int32_t v : root.best) chrono.push_back(v);

  SegreResult out;
  std::vector<std::int64_t> terms(chrono.rbegin(), chrono.rend());
  out.seq = IndexSequence(std::move(terms));
  out.nodes = nodes;

  // Walk the memoized best cuts to recover a witness play.
  Mask128 alive = game.full_mask();
  for (int depth = 0; depth < total; ++depth) {
    const Entry& e = depth == 0 ? root : solver.solve(alive, depth);
    if (e.best_cut < 0) throw std::logic_error("witness reconstruction failed");
    const Mask128 rem = mask_and(alive, game.removal_mask(e.best_cut));
    out.witness.push_back(game.cuts()[e.best_cut]);
    out.removals.push_back(mask_popcount(rem));
    alive = mask_andnot(alive, rem);
  }
  return out;
}

}  // namespace

SegreResult rlg_segre(const SegreInstance& inst, const SearchBudget& budget,
                      int threads) {
  inst.validate();
  if (threads < 1) {
    throw ValidationError("thread count must be >= 1, got " + std::to_string(threads));
  }
  SegreGame game(inst);

  if (threads == 1) {
    Solver solver;
    solver.game = &game;
    solver.max_nodes = budget.max_nodes;
    const Entry root = solver.solve(game.full_mask(), 0);
    return finish_result(game, solver, root, solver.nodes);
  }

  // Parallel variant: distribute the root's first feasible removal group
  // across workers, each with a private memo, then merge.
  const int total = static_cast<int>(inst.codim());
  const Mask128 full = game.full_mask();
  const int alive_count = game.bits();
  std::map<int, std::vector<Mask128>> children_by_removal;
  const auto& cuts = game.cuts();
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    const Mask128 rem = mask_and(full, game.removal_mask(static_cast<int>(c)));
    const int removed = mask_popcount(rem);
    if (removed == 0) continue;
    children_by_removal[removed].push_back(mask_andnot(full, rem));
  }
  std::int64_t nodes_total = 1;  // the root itself
  for (auto& [removed, children] : children_by_removal) {
    std::sort(children.begin(), children.end(),
              [](const Mask128& a, const Mask128& b) {
                return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
              });
    children.erase(std::unique(children.begin(), children.end()), children.end());

    struct ChildOutcome {
      bool feasible = false;
      std::vector<std::int32_t> best;
      std::int64_t nodes = 0;
      std::string error;
    };
    std::vector<ChildOutcome> outcomes(children.size());
    std::atomic<std::size_t> next{0};
    const int worker_count = std::min<int>(threads, static_cast<int>(children.size()));
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    // Each child subtree gets the full node budget; the serial run bounds
    // total work by the same cap, so this only ever refuses later, never
    // spuriously earlier.
    for (int w = 0; w < worker_count; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < children.size();
             i = next.fetch_add(1)) {
          Solver solver;
          solver.game = &game;
          solver.max_nodes = budget.max_nodes;
          try {
            const Entry& sub = solver.solve(children[i], 1);
            outcomes[i].feasible = sub.feasible;
            outcomes[i].best = sub.best;
          } catch (const BudgetExceeded& e) {
            outcomes[i].error = e.what();
          }
          outcomes[i].nodes = solver.nodes;
        }
      });
    }
    for (auto& t : workers) t.join();

    std::size_t best_index = children.size();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      nodes_total += outcomes[i].nodes;
      if (!outcomes[i].error.empty()) throw BudgetExceeded(outcomes[i].error);
      if (!outcomes[i].feasible) continue;
      if (best_index == children.size() ||
          std::lexicographical_compare(outcomes[best_index].best.begin(),
                                       outcomes[best_index].best.end(),
                                       outcomes[i].best.begin(),
                                       outcomes[i].best.end())) {
        best_index = i;
      }
    }
    if (best_index != children.size()) {
      // Re-solve only the winning child's subtree serially to recover the
      // witness, then splice the root cut in front.
      const Mask128 child = children[best_index];
      int root_cut = -1;
      for (std::size_t c = 0; c < cuts.size(); ++c) {
        const Mask128 rem = mask_and(full, game.removal_mask(static_cast<int>(c)));
        if (mask_popcount(rem) == removed && mask_andnot(full, rem) == child) {
          root_cut = static_cast<int>(c);
          break;
        }
      }
      if (root_cut < 0) throw std::logic_error("root cut recovery failed");
      Solver solver;
      solver.game = &game;
      solver.max_nodes = budget.max_nodes;
      const Entry sub = solver.solve(child, 1);
      if (!sub.feasible || sub.best != outcomes[best_index].best) {
        throw std::logic_error("parallel and serial child searches disagree");
      }
      nodes_total += solver.nodes;

      std::vector<std::int64_t> chrono;
      chrono.push_back(alive_count);
      chrono.push_back(alive_count - removed);
      for (std::int32_t v : sub.best) chrono.push_back(v);

      SegreResult out;
      std::vector<std::int64_t> terms(chrono.rbegin(), chrono.rend());
      out.seq = IndexSequence(std::move(terms));
      out.nodes = nodes_total;
      out.witness.push_back(cuts[root_cut]);
      out.removals.push_back(removed);
      Mask128 alive = child;
      for (int depth = 1; depth < total; ++depth) {
        const Entry& e = solver.solve(alive, depth);
        if (e.best_cut < 0) throw std::logic_error("witness reconstruction failed");
        const Mask128 rem = mask_and(alive, game.removal_mask(e.best_cut));
        out.witness.push_back(cuts[e.best_cut]);
        out.removals.push_back(mask_popcount(rem));
        alive = mask_andnot(alive, rem);
      }
      return out;
    }
  }
  throw std::logic_error("Segre search found no full-length cut sequence");
}

namespace {

// Independent brute-force engine on at most 16 states: plain uint32 masks,
// no removal-size ordering, explicit termwise profile.
struct OracleSolver {
  int bits = 0;
  int total = 0;
  std::vector<std::uint32_t> removal;  // per cut
  std::int64_t max_nodes = 0;
  std::int64_t nodes = 0;

  struct OEntry {
    bool feasible = false;
    std::vector<std::int64_t> best;
    std::vector<std::int64_t> termwise;
  };
  std::map<std::pair<std::uint32_t, int>, OEntry> memo;

  const OEntry& solve(std::uint32_t alive, int depth) {
    const auto key = std::make_pair(alive, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (++nodes > max_nodes) {
      throw BudgetExceeded("Segre oracle exceeded the node budget of " +
                           std::to_string(max_nodes));
    }
    OEntry entry;
    if (depth == total) {
      entry.feasible = true;
      return memo.emplace(key, std::move(entry)).first->second;
    }
    for (const std::uint32_t rem_mask : removal) {
      const std::uint32_t rem = alive & rem_mask;
      if (rem == 0) continue;
      const std::uint32_t child = alive & ~rem;
      if (child == 0) continue;
      const OEntry& sub = solve(child, depth + 1);
      if (!sub.feasible) continue;
      std::vector<std::int64_t> candidate;
      candidate.push_back(std::popcount(child));
      candidate.insert(candidate.end(), sub.best.begin(), sub.best.end());
      if (!entry.feasible) {
        entry.best = candidate;
        entry.termwise.assign(candidate.size(), 0);
      } else if (std::lexicographical_compare(entry.best.begin(), entry.best.end(),
                                              candidate.begin(), candidate.end())) {
        entry.best = candidate;
      }
      std::vector<std::int64_t> cand_termwise;
      cand_termwise.push_back(std::popcount(child));
      cand_termwise.insert(cand_termwise.end(), sub.termwise.begin(),
                           sub.termwise.end());
      for (std::size_t i = 0; i < cand_termwise.size(); ++i) {
        entry.termwise[i] = std::max(entry.termwise[i], cand_termwise[i]);
      }
      entry.feasible = true;
    }
    return memo.emplace(key, std::move(entry)).first->second;
  }
};

}  // namespace

SegreOracleResult rlg_segre_oracle(const SegreInstance& inst,
                                   const SearchBudget& budget) {
  inst.validate();
  if (inst.top_degree() > 16) {
    throw BudgetExceeded("Segre oracle refuses " + std::to_string(inst.top_degree()) +
                         " states (cap 16); use the main solver instead");
  }
  SegreGame game(inst);

  OracleSolver solver;
  solver.bits = game.bits();
  solver.total = static_cast<int>(inst.codim());
  solver.max_nodes = budget.max_nodes;
  for (int c = 0; c < static_cast<int>(game.cuts().size()); ++c) {
    const Mask128 rem = game.removal_mask(c);
    solver.removal.push_back(static_cast<std::uint32_t>(rem.lo));
  }
  const std::uint32_t full = game.bits() == 32
                                 ? ~std::uint32_t{0}
                                 : (std::uint32_t{1} << game.bits()) - 1;
  const OracleSolver::OEntry& root = solver.solve(full, 0);
  if (!root.feasible) {
    throw std::logic_error("Segre oracle found no full-length cut sequence");
  }

  std::vector<std::int64_t> chrono;
  chrono.push_back(game.bits());
  chrono.insert(chrono.end(), root.best.begin(), root.best.end());
  std::vector<std::int64_t> lexmax(chrono.rbegin(), chrono.rend());

  SegreOracleResult out;
  out.lexmax = IndexSequence(std::move(lexmax));
  out.termwise.push_back(game.bits());
  out.termwise.insert(out.termwise.end(), root.termwise.begin(),
                      root.termwise.end());
  std::reverse(out.termwise.begin(), out.termwise.end());
  out.nodes = solver.nodes;
  return out;
}

}  // namespace secseq
