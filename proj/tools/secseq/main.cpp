#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "report.hpp"
#include "secseq/budget.hpp"
#include "secseq/pointset.hpp"
#include "secseq/poset.hpp"
#include "secseq/segre.hpp"
#include "secseq/sequence.hpp"
#include "secseq/serialize.hpp"
#include "secseq/veronese.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBudget = 2;
constexpr int kExitValidation = 3;
constexpr int kExitMismatch = 4;

struct GlobalOptions {
  bool json = false;
  std::int64_t max_nodes = 100'000'000;
  int threads = 1;
  std::uint64_t seed = 0;  // reserved; every core computation is deterministic

  secseq::SearchBudget budget() const { return secseq::SearchBudget{max_nodes}; }
};

class Timer {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Report& r, const GlobalOptions& g) {
  std::cout << (g.json ? r.json() : r.text());
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw secseq::ValidationError("cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string format_cuts(const std::vector<secseq::Cut>& cuts) {
  std::string out;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (i > 0) out += " ";
    out += "(" + std::to_string(cuts[i].a) + "," + std::to_string(cuts[i].b) + ")";
  }
  return out;
}

int parse_positive_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size() || value < 1) throw std::invalid_argument(what);
    return value;
  } catch (const std::exception&) {
    throw secseq::ValidationError("invalid " + what + ": \"" + text + "\"");
  }
}

// ---------------------------------------------------------------------------
// veronese

int cmd_veronese(int n, int d, bool oracle, bool closed_form_check,
                 const GlobalOptions& g) {
  const secseq::VeroneseInstance inst{n, d};
  inst.validate();
  const Timer timer;
  const secseq::IndexSequence seq = secseq::rlg_veronese(inst);
  const std::int64_t elapsed = timer.ms();

  Report r;
  r.add_str("command", "veronese");
  r.add_int("n", n);
  r.add_int("d", d);
  r.add_int("ambient_points", inst.ambient_points());
  r.add_int("codim", inst.codim());
  r.add_int("degree", inst.top_degree());
  r.add_int("reducibility", inst.reducibility());
  r.add_int("mu", inst.mu());
  r.add_int("length", static_cast<std::int64_t>(seq.size()));
  r.add_terms("terms", seq.terms());
  r.add_str("sequence", secseq::render_with_bars(seq));
  r.add_gaps("gaps", secseq::gaps(seq));
  r.add_int("elapsed_ms", elapsed);

  int code = kExitOk;
  if (closed_form_check) {
    if (n != 2) {
      throw secseq::ValidationError("--closed-form-check requires n = 2");
    }
    const secseq::IndexSequence closed = secseq::n2_closed_form(d);
    const bool agrees = closed == seq;
    r.add_str("closed_form", secseq::render_with_bars(closed));
    r.add_bool("closed_form_agrees", agrees);
    if (!agrees) code = kExitValidation;
  }
  if (oracle) {
    const secseq::VeroneseOracleResult orc = secseq::rlg_veronese_oracle(inst, g.budget());
    const bool lex_ok = orc.lexmax == seq;
    const bool term_ok = orc.termwise == seq;
    r.add_str("oracle_lexmax", secseq::render_with_bars(orc.lexmax));
    r.add_str("oracle_termwise", secseq::render_with_bars(orc.termwise));
    r.add_bool("oracle_lexmax_agrees", lex_ok);
    r.add_bool("oracle_termwise_agrees", term_ok);
    r.add_bool("oracle_agreement", lex_ok && term_ok);
    r.add_int("oracle_nodes", orc.nodes);
    if (!lex_ok || !term_ok) code = kExitValidation;
  }
  emit(r, g);
  return code;
}

// ---------------------------------------------------------------------------
// segre

int cmd_segre(int n, int m, bool oracle, bool trace, const GlobalOptions& g) {
  const secseq::SegreInstance inst{n, m};
  inst.validate();
  const Timer timer;
  const secseq::SegreResult res = secseq::rlg_segre(inst, g.budget(), g.threads);
  const std::int64_t elapsed = timer.ms();

  Report r;
  r.add_str("command", "segre");
  r.add_int("n", n);
  r.add_int("m", m);
  r.add_int("ambient_points", inst.ambient_points());
  r.add_int("codim", inst.codim());
  r.add_int("degree", inst.top_degree());
  r.add_int("reducibility", inst.reducibility());
  r.add_int("mu", inst.mu());
  r.add_int("length", static_cast<std::int64_t>(res.seq.size()));
  r.add_terms("terms", res.seq.terms());
  r.add_str("sequence", secseq::render_with_bars(res.seq));
  r.add_gaps("gaps", secseq::gaps(res.seq));

  const std::int64_t expected_gap = secseq::segre_full_state_removal(inst);
  const std::size_t len = res.seq.size();
  const std::int64_t observed_gap =
      len >= 2 ? res.seq[len - 1] - res.seq[len - 2] : 0;
  r.add_int("last_gap", expected_gap);
  r.add_int("last_gap_observed", observed_gap);
  r.add_bool("last_gap_agrees", expected_gap == observed_gap);

  r.add_str("witness", format_cuts(res.witness));
  r.add_int("nodes_explored", res.nodes);
  r.add_int("elapsed_ms", elapsed);

  int code = expected_gap == observed_gap ? kExitOk : kExitValidation;
  if (trace) {
    const secseq::SegreGame game(inst);
    secseq::CutState state = secseq::initial_state(game);
    for (const secseq::Cut& cut : res.witness) {
      state = secseq::apply_cut(game, state, cut);
      r.add_trace_line("cut " + std::to_string(cut.a) + " " +
                       std::to_string(cut.b) + " -> " +
                       std::to_string(secseq::mask_popcount(state.alive)));
    }
  }
  if (oracle) {
    const secseq::SegreOracleResult orc = secseq::rlg_segre_oracle(inst, g.budget());
    const bool ok = orc.lexmax == res.seq;
    r.add_str("oracle_lexmax", secseq::render_with_bars(orc.lexmax));
    r.add_terms("oracle_termwise", orc.termwise);
    r.add_bool("oracle_agreement", ok);
    r.add_int("oracle_nodes", orc.nodes);
    if (!ok) code = kExitValidation;
  }
  emit(r, g);
  return code;
}

// ---------------------------------------------------------------------------
// poset

secseq::PosetInstance resolve_poset(const std::string& source) {
  if (source == "builtin:counterexample") return secseq::counterexample_poset();
  const std::string veronese_prefix = "builtin:veronese-";
  if (source.rfind(veronese_prefix, 0) == 0) {
    const std::vector<std::string> parts =
        split(source.substr(veronese_prefix.size()), '-');
    if (parts.size() != 2) {
      throw secseq::ValidationError(
          "builtin veronese poset must be builtin:veronese-<n>-<d>, got \"" +
          source + "\"");
    }
    const int n = parse_positive_int(parts[0], "veronese n");
    const int d = parse_positive_int(parts[1], "veronese d");
    return secseq::veronese_monomial_game(n, d);
  }
  if (source.rfind("builtin:", 0) == 0) {
    throw secseq::ValidationError(
        "unknown builtin poset \"" + source +
        "\" (available: builtin:counterexample, builtin:veronese-<n>-<d>)");
  }
  return secseq::poset_from_json(read_text_file(source));
}

int cmd_poset(const std::string& source, bool exact, const GlobalOptions& g) {
  const secseq::PosetInstance inst = resolve_poset(source);

  Report r;
  r.add_str("command", "poset");
  r.add_str("instance", source);
  r.add_int("elements", inst.size());
  r.add_int("pick_set", inst.pick_set_size());

  const Timer timer;
  const secseq::PosetInstance::GreedyResult greedy = inst.solve_greedy();
  r.add_terms("greedy_cards", greedy.cards);
  r.add_str("greedy_picks", join(greedy.picks, ", "));
  r.add_bool("greedy_completed", greedy.completed);

  int code = kExitOk;
  if (exact) {
    const secseq::PosetInstance::ExactResult ex = inst.solve_exact(g.budget());
    r.add_terms("lexmax_cards", ex.lexmax);
    r.add_str("lexmax_picks", join(ex.witness, ", "));
    r.add_terms("termwise_cards", ex.termwise);
    r.add_int("nodes_explored", ex.nodes);

    std::string verdict;
    if (!greedy.completed || greedy.cards.size() != ex.lexmax.size()) {
      verdict = "greedy incomplete";
    } else {
      switch (secseq::compare_total(greedy.cards, ex.lexmax)) {
        case secseq::TotalOrder::equal:
          verdict = "greedy optimal";
          break;
        case secseq::TotalOrder::less:
          verdict = "beaten at position " +
                    std::to_string(secseq::first_improvement_position(
                        greedy.cards, ex.lexmax));
          break;
        case secseq::TotalOrder::greater:
          verdict = "greedy exceeds exhaustive maximum";
          code = kExitValidation;
          break;
      }
    }
    r.add_str("verdict", verdict);
  }
  r.add_int("elapsed_ms", timer.ms());
  emit(r, g);
  return code;
}

// ---------------------------------------------------------------------------
// pointset

secseq::PointConfig resolve_pointset(const std::string& source, Report& r) {
  if (source == "builtin:q2-example") {
    const secseq::PointConfig cfg = secseq::q2_example_config();
    for (const secseq::GenericityCheck& check : secseq::verify_q2_genericity(cfg)) {
      r.add_bool("genericity: " + check.name, check.pass);
      if (!check.pass) {
        throw secseq::ValidationError("genericity check failed: " + check.name);
      }
    }
    return cfg;
  }
  if (source == "builtin:grid-3x3") return secseq::grid_3x3_config();
  const std::string simplex_prefix = "builtin:simplex-";
  if (source.rfind(simplex_prefix, 0) == 0) {
    const int n =
        parse_positive_int(source.substr(simplex_prefix.size()), "simplex n");
    return secseq::simplex_config(n);
  }
  if (source.rfind("builtin:", 0) == 0) {
    throw secseq::ValidationError(
        "unknown builtin point configuration \"" + source +
        "\" (available: builtin:q2-example, builtin:grid-3x3, "
        "builtin:simplex-<n>)");
  }
  return secseq::point_config_from_json(read_text_file(source));
}

int cmd_pointset(const std::string& source, const GlobalOptions& g) {
  Report r;
  r.add_str("command", "pointset");
  r.add_str("instance", source);

  const secseq::PointConfig cfg = resolve_pointset(source, r);
  r.add_int("ambient_dim", cfg.ambient_dim);
  r.add_int("points", cfg.size());

  const Timer timer;
  const secseq::IndexSequence secant = secseq::secant_sequence(cfg, g.budget());
  const secseq::ChainResult chain = secseq::chain_sequence(cfg, g.budget());

  r.add_terms("secant_terms", secant.terms());
  r.add_str("secant", secseq::render_with_bars(secant));
  r.add_terms("chain_terms", chain.seq.terms());
  r.add_str("chain", secseq::render_with_bars(chain.seq));
  r.add_str("secant_vs_chain",
            secseq::to_string(secseq::compare_total(secant, chain.seq)));

  std::vector<std::string> flats_text;
  for (const std::vector<int>& flat : chain.witness) {
    std::vector<std::string> labels;
    for (int idx : flat) labels.push_back(cfg.labels[idx]);
    flats_text.push_back("[" + join(labels, " ") + "]");
  }
  r.add_str("chain_witness", join(flats_text, " "));
  r.add_int("elapsed_ms", timer.ms());
  emit(r, g);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// reproduce

std::string golden_param(const secseq::GoldenEntry& e, const std::string& key) {
  for (const auto& [k, v] : e.params) {
    if (k == key) return v;
  }
  throw secseq::ValidationError("golden entry " + e.kind + "/" + e.name +
                                " lacks param \"" + key + "\"");
}

std::string render_cards(const std::vector<std::int64_t>& cards) {
  std::string out;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(cards[i]);
  }
  return out;
}

// Recomputes a golden entry's sequences from its parameters using the
// engines; the result must serialize to exactly the stored file bytes.
secseq::GoldenEntry recompute_entry(const secseq::GoldenEntry& stored,
                                    const GlobalOptions& g) {
  secseq::GoldenEntry fresh;
  fresh.kind = stored.kind;
  fresh.name = stored.name;
  fresh.params = stored.params;

  if (stored.kind == "veronese") {
    const int n = parse_positive_int(golden_param(stored, "n"), "veronese n");
    const int d = parse_positive_int(golden_param(stored, "d"), "veronese d");
    const secseq::VeroneseInstance inst{n, d};
    inst.validate();
    const secseq::IndexSequence seq = secseq::rlg_veronese(inst);
    fresh.sequences.emplace_back("sequence", seq.terms());
    fresh.renderings.emplace_back("sequence", secseq::render_with_bars(seq));
  } else if (stored.kind == "segre") {
    const int n = parse_positive_int(golden_param(stored, "n"), "segre n");
    const int m = parse_positive_int(golden_param(stored, "m"), "segre m");
    const secseq::SegreInstance inst{n, m};
    inst.validate();
    const secseq::SegreResult res = secseq::rlg_segre(inst, g.budget(), g.threads);
    fresh.sequences.emplace_back("sequence", res.seq.terms());
    fresh.renderings.emplace_back("sequence", secseq::render_with_bars(res.seq));
  } else if (stored.kind == "poset") {
    const secseq::PosetInstance inst =
        resolve_poset("builtin:" + golden_param(stored, "builtin"));
    const secseq::PosetInstance::GreedyResult greedy = inst.solve_greedy();
    fresh.sequences.emplace_back("greedy", greedy.cards);
    fresh.renderings.emplace_back("greedy", render_cards(greedy.cards));
    const std::string alt = golden_param(stored, "alternative_picks");
    const std::vector<std::int64_t> cards = inst.play(split(alt, ','));
    fresh.sequences.emplace_back("alternative", cards);
    fresh.renderings.emplace_back("alternative", render_cards(cards));
  } else if (stored.kind == "pointset") {
    Report scratch;  // genericity fields of builtins are not part of the entry
    const secseq::PointConfig cfg =
        resolve_pointset("builtin:" + golden_param(stored, "builtin"), scratch);
    const secseq::IndexSequence secant = secseq::secant_sequence(cfg, g.budget());
    const secseq::ChainResult chain = secseq::chain_sequence(cfg, g.budget());
    fresh.sequences.emplace_back("secant", secant.terms());
    fresh.renderings.emplace_back("secant", secseq::render_with_bars(secant));
    fresh.sequences.emplace_back("chain", chain.seq.terms());
    fresh.renderings.emplace_back("chain", secseq::render_with_bars(chain.seq));
  } else {
    throw secseq::ValidationError("unknown golden kind \"" + stored.kind + "\"");
  }
  return fresh;
}

int cmd_reproduce(const std::string& root, const GlobalOptions& g) {
  const std::vector<std::string> files = secseq::list_golden_files(root);

  Report r;
  r.add_str("command", "reproduce");
  r.add_str("corpus", root);

  if (files.empty()) {
    r.add_int("checked", 0);
    r.add_str("warning", "0 golden files checked (corpus is empty or missing)");
    emit(r, g);
    return kExitOk;
  }

  int passed = 0;
  int failed = 0;
  std::vector<std::string> lines;
  for (const std::string& path : files) {
    const std::string rel =
        std::filesystem::relative(path, root).generic_string();
    std::string status;
    try {
      const std::string original = read_text_file(path);
      const secseq::GoldenEntry stored = secseq::golden_entry_from_string(original);
      const std::string expected_rel = stored.kind + "/" + stored.name + ".txt";
      if (rel != expected_rel) {
        status = "MISMATCH (filed under " + rel + " but identifies as " +
                 expected_rel + ")";
      } else {
        const std::string recomputed =
            secseq::golden_entry_to_string(recompute_entry(stored, g));
        status = recomputed == original ? "ok" : "MISMATCH";
      }
    } catch (const secseq::BudgetExceeded& e) {
      status = std::string("MISMATCH (budget: ") + e.what() + ")";
    } catch (const secseq::ValidationError& e) {
      status = std::string("MISMATCH (corrupt: ") + e.what() + ")";
    }
    if (status == "ok") {
      ++passed;
    } else {
      ++failed;
    }
    lines.push_back(status + " " + rel);
  }

  r.add_int("checked", static_cast<std::int64_t>(files.size()));
  r.add_int("passed", passed);
  r.add_int("failed", failed);
  r.add_bool("all_match", failed == 0);
  for (const std::string& line : lines) r.add_trace_line(line);
  emit(r, g);
  return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Greedy reducible secant index sequences of Veronese and Segre "
      "varieties, with poset and point-configuration removal games"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_flag("--json", g.json, "Emit one JSON object instead of text");
  app.add_option("--max-nodes", g.max_nodes, "Search node budget")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for the Segre search")
      ->capture_default_str();
  app.add_option("--seed", g.seed,
                 "Random seed (reserved; core computations are deterministic)");

  int n = 0, d = 0, m = 0;
  bool oracle = false, closed_form_check = false, trace = false, exact = false;
  std::string source;
  std::string corpus = "golden";

  CLI::App* veronese = app.add_subcommand(
      "veronese", "Greedy sequence of the degree-d Veronese of P^n");
  veronese->add_option("--n", n, "Projective dimension n")->required();
  veronese->add_option("--d", d, "Embedding degree d")->required();
  veronese->add_flag("--oracle", oracle,
                     "Cross-check against the brute-force oracle");
  veronese->add_flag("--closed-form-check", closed_form_check,
                     "Check the n = 2 closed form (d >= 3)");

  CLI::App* segre =
      app.add_subcommand("segre", "Greedy sequence of the Segre of P^n x P^m");
  segre->add_option("--n", n, "First factor dimension n")->required();
  segre->add_option("--m", m, "Second factor dimension m")->required();
  segre->add_flag("--oracle", oracle,
                  "Cross-check against the brute-force oracle");
  segre->add_flag("--trace", trace, "Print each witness cut and the count after it");

  CLI::App* poset = app.add_subcommand(
      "poset", "Removal game on a finite poset with a pick set");
  poset
      ->add_option("source", source,
                   "Instance file (JSON) or builtin:counterexample, "
                   "builtin:veronese-<n>-<d>")
      ->required();
  poset->add_flag("--exact", exact,
                  "Exhaustive total-order maximum and termwise profile");

  CLI::App* pointset = app.add_subcommand(
      "pointset", "Secant and chain sequences of a finite point configuration");
  pointset
      ->add_option("source", source,
                   "Configuration file (JSON) or builtin:q2-example, "
                   "builtin:grid-3x3, builtin:simplex-<n>")
      ->required();

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "Recompute every golden corpus entry and compare bytes");
  reproduce->add_option("corpus", corpus, "Golden corpus root directory")
      ->capture_default_str();

  // Let the global flags (--json, --max-nodes, ...) appear after the
  // subcommand name as well as before it.
  for (CLI::App* sub : {veronese, segre, poset, pointset, reproduce}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(veronese)) {
      return cmd_veronese(n, d, oracle, closed_form_check, g);
    }
    if (app.got_subcommand(segre)) return cmd_segre(n, m, oracle, trace, g);
    if (app.got_subcommand(poset)) return cmd_poset(source, exact, g);
    if (app.got_subcommand(pointset)) return cmd_pointset(source, g);
    if (app.got_subcommand(reproduce)) return cmd_reproduce(corpus, g);
  } catch (const secseq::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const secseq::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
