#pragma once

#include <optional>
#include <string>
#include <vector>

#include "secseq/pointset.hpp"
#include "secseq/poset.hpp"
#include "secseq/sequence.hpp"

namespace secseq {

// {"terms":[...], "bars":"1, 2 | 4"} — the sequence record consumed by the
// CLI and the golden corpus.  parse validates that the bars text round-trips
// to the same terms.
std::string sequence_record_to_string(const IndexSequence& s);
IndexSequence sequence_record_from_string(const std::string& text);

// Poset instance file:
// {"elements":[...], "A":[...], "relation":[["x","y"],...],
//  "relation_kind":"covers"|"all"|"divisibility-of-monomials"}.
// The divisibility kind ignores "relation" and parses element labels as
// monomials (variable count inferred from the labels).
PosetInstance poset_from_json(const std::string& text);

// Point configuration file:
// {"ambient_dim": n, "points":[["1","0","1/2"],...], "labels":[...]?}.
PointConfig point_config_from_json(const std::string& text);

// One golden corpus entry: the identifying parameters plus the recorded
// sequences.  `kind` is the subdirectory name (veronese/segre/poset/pointset).
// Poset cardinality sequences are stored in play order (descending), so terms
// are raw integer lists here, not IndexSequence.
struct GoldenEntry {
  std::string kind;
  std::string name;  // file stem, e.g. "n2_d3"
  // veronese: {"n","d"}; segre: {"n","m"}; poset/pointset: builtin name and,
  // for poset, the alternative play's picks.
  std::vector<std::pair<std::string, std::string>> params;
  // Sequences recorded for the entry, keyed by role:
  // veronese/segre: "sequence"; poset: "greedy" and "alternative";
  // pointset: "secant" and "chain".
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> sequences;
  // Rendered text stored alongside, keyed identically: render_with_bars for
  // ascending sequences, plain comma join for poset plays; compared
  // bit-exactly by the reproduce command.
  std::vector<std::pair<std::string, std::string>> renderings;
};

std::string golden_entry_to_string(const GoldenEntry& e);
GoldenEntry golden_entry_from_string(const std::string& text);

// Reads/writes a golden file on disk.  read throws ValidationError with the
// path on malformed content.
GoldenEntry read_golden_file(const std::string& path);
void write_golden_file(const std::string& path, const GoldenEntry& e);

// Lists the golden files under root in deterministic order (sorted by
// subdirectory then name).  Missing root → empty list.
std::vector<std::string> list_golden_files(const std::string& root);

}  // namespace secseq
