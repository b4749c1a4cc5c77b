// Acceptance gate: one test case per release criterion, each printing a
// single "[criterion N] PASS/FAIL" line with its runtime.  Tolerances and
// runtime budgets are pinned here, in code.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <vector>

#include "secseq/budget.hpp"
#include "secseq/combinatorics.hpp"
#include "secseq/monomial.hpp"
#include "secseq/pointset.hpp"
#include "secseq/poset.hpp"
#include "secseq/segre.hpp"
#include "secseq/sequence.hpp"
#include "secseq/veronese.hpp"
#include "support/reference_data.hpp"

using namespace secseq;

namespace {

class Criterion {
 public:
  explicit Criterion(int id) : id_(id) {}
  ~Criterion() {
    std::printf("[criterion %d] %s (%.2f s)\n", id_, ok_ ? "PASS" : "FAIL",
                seconds());
    std::fflush(stdout);
  }
  void note(bool cond) { ok_ &= cond; }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  int id_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// Records the condition in the criterion line and asserts it via doctest.
#define CRIT_CHECK(crit, ...)              \
  do {                                     \
    const bool crit_ok_ = (__VA_ARGS__);   \
    (crit).note(crit_ok_);                 \
    CHECK_MESSAGE(crit_ok_, #__VA_ARGS__); \
  } while (0)

constexpr double kVeroneseSuiteBudgetSeconds = 5.0;
constexpr double kSegreSmallBudgetSeconds = 10.0;
constexpr double kSegreLargeBudgetSeconds = 600.0;  // (4,4) and (5,3)
constexpr double kOracleBudgetSeconds = 120.0;
constexpr double kPointsetBudgetSeconds = 5.0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

TEST_CASE("criterion 1: published Veronese table, bit-exact with bars") {
  Criterion crit{1};
  for (const auto& ref : refdata::veronese_published()) {
    CAPTURE(ref.n);
    CAPTURE(ref.d);
    const IndexSequence computed = rlg_veronese({ref.n, ref.d});
    const IndexSequence published{ref.terms};
    CRIT_CHECK(crit, computed == published);
    CRIT_CHECK(crit, render_with_bars(computed) == render_with_bars(published));
  }
  CRIT_CHECK(crit, crit.seconds() < kVeroneseSuiteBudgetSeconds);
}

TEST_CASE("criterion 2: published Segre table within runtime budgets") {
  Criterion crit{2};
  for (const auto& ref : refdata::segre_published()) {
    CAPTURE(ref.n);
    CAPTURE(ref.m);
    const auto t0 = std::chrono::steady_clock::now();
    const SegreResult res = rlg_segre({ref.n, ref.m});
    const double elapsed = seconds_since(t0);
    CRIT_CHECK(crit, res.seq == IndexSequence{ref.terms});
    const bool large = (ref.n == 4 && ref.m == 4) || (ref.n == 5 && ref.m == 3);
    CRIT_CHECK(crit, elapsed < (large ? kSegreLargeBudgetSeconds
                                      : kSegreSmallBudgetSeconds));
  }
}

TEST_CASE("criterion 3: last-gap law on every computed Segre sequence") {
  Criterion crit{3};
  CRIT_CHECK(crit, segre_full_state_removal({2, 2}) == 2);
  CRIT_CHECK(crit, segre_full_state_removal({3, 3}) == 6);
  CRIT_CHECK(crit, segre_full_state_removal({4, 3}) == 10);
  for (const auto& ref : refdata::segre_published()) {
    CAPTURE(ref.n);
    CAPTURE(ref.m);
    const SegreInstance inst{ref.n, ref.m};
    const IndexSequence seq = rlg_segre(inst).seq;
    const std::size_t len = seq.size();
    REQUIRE(len >= 2);
    CRIT_CHECK(crit, seq[len - 1] - seq[len - 2] ==
                         binomial(ref.n + ref.m - 2, ref.n - 1));
    CRIT_CHECK(crit,
               segre_full_state_removal(inst) ==
                   binomial(ref.n + ref.m - 2, ref.n - 1));
  }
}

TEST_CASE("criterion 4: plane closed form equals the engine for d = 3..7") {
  Criterion crit{4};
  for (int d = 3; d <= 7; ++d) {
    CAPTURE(d);
    CRIT_CHECK(crit, n2_closed_form(d) == rlg_veronese({2, d}));
  }
}

TEST_CASE("criterion 5: oracle equivalences at desk scale") {
  Criterion crit{5};

  for (const auto& [n, d] : {std::pair{2, 2}, std::pair{2, 3}}) {
    CAPTURE(n);
    CAPTURE(d);
    const auto t0 = std::chrono::steady_clock::now();
    const IndexSequence seq = rlg_veronese({n, d});
    const VeroneseOracleResult orc = rlg_veronese_oracle({n, d});
    CRIT_CHECK(crit, orc.termwise == seq);  // mode (a): per-count maxima
    CRIT_CHECK(crit, orc.lexmax == seq);    // mode (b): total-order maximum
    CRIT_CHECK(crit, seconds_since(t0) < kOracleBudgetSeconds);
  }

  for (const auto& [n, m] : {std::pair{2, 2}, std::pair{2, 1}, std::pair{3, 2}}) {
    CAPTURE(n);
    CAPTURE(m);
    const auto t0 = std::chrono::steady_clock::now();
    const SegreOracleResult orc = rlg_segre_oracle({n, m});
    CRIT_CHECK(crit, orc.lexmax == rlg_segre({n, m}).seq);
    CRIT_CHECK(crit, seconds_since(t0) < kOracleBudgetSeconds);
  }

  {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::int64_t> ascending =
        veronese_monomial_game(2, 3).solve_exact().lexmax;
    std::reverse(ascending.begin(), ascending.end());
    CRIT_CHECK(crit, IndexSequence{ascending} == rlg_veronese({2, 3}));
    CRIT_CHECK(crit, seconds_since(t0) < kOracleBudgetSeconds);
  }
}

TEST_CASE("criterion 6: counterexample poset verbatim values") {
  Criterion crit{6};
  const PosetInstance p = counterexample_poset();

  const PosetInstance::GreedyResult greedy = p.solve_greedy();
  CRIT_CHECK(crit, greedy.cards == std::vector<std::int64_t>{9, 8, 6, 3, 2, 1});

  // The criterion pins the exhaustive total-order maximum to the published
  // alternative play (9, 6, 5, 4, 3, 1).  The search instead finds
  // (9, 8, 5, 4, 3, 1) via the play (c, a^3, a^2, a, b), which dominates the
  // published play termwise; this check is therefore expected to fail until
  // the pinned value is revised.  The engine result is asserted as the honest
  // value in the unit suite.
  const PosetInstance::ExactResult exact = p.solve_exact();
  CRIT_CHECK(crit, exact.lexmax == std::vector<std::int64_t>{9, 6, 5, 4, 3, 1});

  // "Beaten at the fourth term" holds for the published alternative play and
  // for the exhaustive maximum alike.
  CRIT_CHECK(crit, p.play(refdata::poset_alternative_picks()) ==
                       refdata::poset_alternative_cards());
  CRIT_CHECK(crit, compare_total(greedy.cards, refdata::poset_alternative_cards()) ==
                       TotalOrder::less);
  CRIT_CHECK(crit, first_improvement_position(
                       greedy.cards, refdata::poset_alternative_cards()) == 4);
  CRIT_CHECK(crit, first_improvement_position(greedy.cards, exact.lexmax) == 4);
}

TEST_CASE("criterion 7: point-configuration example after genericity") {
  Criterion crit{7};
  const PointConfig cfg = q2_example_config();
  for (const GenericityCheck& check : verify_q2_genericity(cfg)) {
    CAPTURE(check.name);
    CRIT_CHECK(crit, check.pass);
  }
  CRIT_CHECK(crit, secant_sequence(cfg) ==
                       IndexSequence{refdata::q2_secant_terms()});
  CRIT_CHECK(crit, chain_sequence(cfg).seq ==
                       IndexSequence{refdata::q2_chain_terms()});
  CRIT_CHECK(crit, crit.seconds() < kPointsetBudgetSeconds);
}

TEST_CASE("criterion 8: structural invariants and randomized properties") {
  Criterion crit{8};

  // Strict increase from 1 to the top degree, length codim+1, and the
  // position bound term[i] <= degree - codim + i, on every computed sequence.
  const auto check_invariants = [&crit](const IndexSequence& seq,
                                        std::int64_t degree, std::int64_t codim) {
    CRIT_CHECK(crit, seq.size() == static_cast<std::size_t>(codim) + 1);
    CRIT_CHECK(crit, seq.front() == 1);
    CRIT_CHECK(crit, seq.back() == degree);
    bool strict = true;
    bool bounded = true;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i > 0 && seq[i] <= seq[i - 1]) strict = false;
      if (seq[i] > degree - codim + static_cast<std::int64_t>(i)) bounded = false;
    }
    CRIT_CHECK(crit, strict);
    CRIT_CHECK(crit, bounded);
  };
  for (const auto& ref : refdata::veronese_published()) {
    CAPTURE(ref.n);
    CAPTURE(ref.d);
    const VeroneseInstance inst{ref.n, ref.d};
    check_invariants(rlg_veronese(inst), inst.top_degree(), inst.codim());
  }
  for (const auto& ref : refdata::segre_published()) {
    CAPTURE(ref.n);
    CAPTURE(ref.m);
    const SegreInstance inst{ref.n, ref.m};
    check_invariants(rlg_segre(inst).seq, inst.top_degree(), inst.codim());
  }

  // 1000+ randomized monotonicity checks on monomial-ideal quotients.
  {
    std::mt19937 rng(20260822);
    std::uniform_int_distribution<int> n_dist(1, 3);
    std::uniform_int_distribution<int> d_dist(2, 4);
    std::uniform_int_distribution<int> count_dist(0, 3);
    bool monotone = true;
    int trials = 0;
    const auto admissible = [&rng](int n, int d) {
      std::uniform_int_distribution<int> e_dist(0, d - 1);
      while (true) {
        std::vector<int> e(n);
        int degree = 0;
        for (auto& x : e) {
          x = e_dist(rng);
          degree += x;
        }
        if (degree <= d) return Monomial{e};
      }
    };
    for (int iter = 0; iter < 1100; ++iter) {
      const int n = n_dist(rng);
      const int d = d_dist(rng);
      std::vector<Monomial> smaller;
      for (int i = count_dist(rng); i > 0; --i) {
        smaller.push_back(admissible(n, d));
      }
      std::vector<Monomial> larger = smaller;
      larger.push_back(admissible(n, d));
      if (BoxIdeal(n, d, larger).quotient_dim() >
          BoxIdeal(n, d, smaller).quotient_dim()) {
        monotone = false;
      }
      ++trials;
    }
    CRIT_CHECK(crit, trials >= 1000);
    CRIT_CHECK(crit, monotone);
  }

  // Inclusion-exclusion agrees with box enumeration on <= 3 generators.
  {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e_dist(0, 2);
    bool agrees = true;
    for (int iter = 0; iter < 200; ++iter) {
      const int n = 1 + iter % 3;
      const int d = 3;
      std::vector<Monomial> extras;
      for (int i = 0; i <= iter % 3; ++i) {
        std::vector<int> e(n);
        int degree = 0;
        for (auto& x : e) {
          x = e_dist(rng);
          degree += x;
        }
        if (degree <= d) extras.push_back(Monomial{e});
      }
      const BoxIdeal ideal(n, d, extras);
      if (ideal.quotient_dim_inclusion_exclusion() != ideal.quotient_dim()) {
        agrees = false;
      }
    }
    CRIT_CHECK(crit, agrees);
  }

  // Full-state cut-size uniformity over all cuts for n + m <= 8.
  for (int n = 1; n <= 7; ++n) {
    for (int m = 1; n + m <= 8; ++m) {
      const SegreGame game{SegreInstance{n, m}};
      const CutState full = initial_state(game);
      const std::int64_t expected = segre_full_state_removal(game.instance());
      bool uniform = true;
      for (const Cut& cut : game.cuts()) {
        const CutState after = apply_cut(game, full, cut);
        if (mask_popcount(full.alive) - mask_popcount(after.alive) != expected) {
          uniform = false;
        }
      }
      CAPTURE(n);
      CAPTURE(m);
      CRIT_CHECK(crit, uniform);
    }
  }
}
