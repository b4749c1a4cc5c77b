#include "secseq/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace secseq {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw ValidationError("malformed JSON in " + what);
  }
  return j;
}

std::vector<std::int64_t> int_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) {
      throw ValidationError(what + " must contain only integers");
    }
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) {
      throw ValidationError(what + " must contain only strings");
    }
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace

std::string sequence_record_to_string(const IndexSequence& s) {
  json j;
  j["terms"] = s.terms();
  j["bars"] = render_with_bars(s);
  return j.dump();
}

IndexSequence sequence_record_from_string(const std::string& text) {
  const json j = parse_or_throw(text, "sequence record");
  if (!j.contains("terms")) {
    throw ValidationError("sequence record lacks \"terms\"");
  }
  IndexSequence seq{int_list(j["terms"], "\"terms\"")};
  if (j.contains("bars")) {
    const IndexSequence reparsed = parse_sequence(j["bars"].get<std::string>());
    if (!(reparsed == seq)) {
      throw ValidationError(
          "sequence record \"bars\" text does not round-trip to \"terms\"");
    }
  }
  return seq;
}

PosetInstance poset_from_json(const std::string& text) {
  const json j = parse_or_throw(text, "poset instance");
  for (const char* key : {"elements", "A", "relation_kind"}) {
    if (!j.contains(key)) {
      throw ValidationError(std::string("poset instance lacks \"") + key + "\"");
    }
  }
  auto elements = string_list(j["elements"], "\"elements\"");
  auto pick_set = string_list(j["A"], "\"A\"");
  const std::string kind = j["relation_kind"].get<std::string>();

  if (kind == "divisibility-of-monomials") {
    // Variable count inferred from the labels (x<i> with the largest i).
    int nvars = 1;
    for (const auto& l : elements) {
      for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        if (l[i] == 'x' && std::isdigit(static_cast<unsigned char>(l[i + 1]))) {
          std::size_t end = i + 1;
          while (end < l.size() && std::isdigit(static_cast<unsigned char>(l[end]))) {
            ++end;
          }
          nvars = std::max(nvars, std::stoi(l.substr(i + 1, end - i - 1)) + 1);
        }
      }
    }
    return PosetInstance::from_divisibility(std::move(elements),
                                            std::move(pick_set), nvars);
  }

  RelationKind rk;
  if (kind == "covers") {
    rk = RelationKind::covers;
  } else if (kind == "all") {
    rk = RelationKind::all;
  } else {
    throw ValidationError("unknown relation_kind \"" + kind + "\"");
  }
  if (!j.contains("relation")) {
    throw ValidationError("poset instance lacks \"relation\"");
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!j["relation"].is_array()) {
    throw ValidationError("\"relation\" must be an array of pairs");
  }
  for (const auto& pair : j["relation"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string()) {
      throw ValidationError("\"relation\" entries must be [\"x\",\"y\"] pairs");
    }
    pairs.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return PosetInstance::from_pairs(std::move(elements), std::move(pick_set),
                                   pairs, rk);
}

PointConfig point_config_from_json(const std::string& text) {
  const json j = parse_or_throw(text, "point configuration");
  if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer()) {
    throw ValidationError("point configuration needs an integer \"ambient_dim\"");
  }
  if (!j.contains("points") || !j["points"].is_array()) {
    throw ValidationError("point configuration needs a \"points\" array");
  }
  PointConfig cfg;
  cfg.ambient_dim = j["ambient_dim"].get<int>();
  for (const auto& row : j["points"]) {
    const auto strings = string_list(row, "a point");
    std::vector<Rational> point;
    point.reserve(strings.size());
    for (const auto& s : strings) point.push_back(parse_rational(s));
    cfg.points.push_back(std::move(point));
  }
  if (j.contains("labels")) {
    cfg.labels = string_list(j["labels"], "\"labels\"");
  } else {
    for (int i = 0; i < cfg.size(); ++i) {
      cfg.labels.push_back("p" + std::to_string(i));
    }
  }
  validate_config(cfg);
  return cfg;
}

std::string golden_entry_to_string(const GoldenEntry& e) {
  json j;
  j["kind"] = e.kind;
  j["name"] = e.name;
  json params = json::object();
  for (const auto& [k, v] : e.params) params[k] = v;
  j["params"] = params;
  json sequences = json::object();
  for (const auto& [k, v] : e.sequences) sequences[k] = v;
  j["sequences"] = sequences;
  json renderings = json::object();
  for (const auto& [k, v] : e.renderings) renderings[k] = v;
  j["renderings"] = renderings;
  return j.dump(2) + "\n";
}

GoldenEntry golden_entry_from_string(const std::string& text) {
  const json j = parse_or_throw(text, "golden entry");
  for (const char* key : {"kind", "name", "sequences", "renderings"}) {
    if (!j.contains(key)) {
      throw ValidationError(std::string("golden entry lacks \"") + key + "\"");
    }
  }
  GoldenEntry e;
  e.kind = j["kind"].get<std::string>();
  e.name = j["name"].get<std::string>();
  if (j.contains("params")) {
    for (const auto& [k, v] : j["params"].items()) {
      if (!v.is_string()) {
        throw ValidationError("golden entry params must be strings");
      }
      e.params.emplace_back(k, v.get<std::string>());
    }
  }
  for (const auto& [k, v] : j["sequences"].items()) {
    e.sequences.emplace_back(k, int_list(v, "golden sequence \"" + k + "\""));
  }
  for (const auto& [k, v] : j["renderings"].items()) {
    if (!v.is_string()) {
      throw ValidationError("golden entry renderings must be strings");
    }
    e.renderings.emplace_back(k, v.get<std::string>());
  }
  std::sort(e.params.begin(), e.params.end());
  std::sort(e.sequences.begin(), e.sequences.end());
  std::sort(e.renderings.begin(), e.renderings.end());
  return e;
}

GoldenEntry read_golden_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open golden file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return golden_entry_from_string(buf.str());
  } catch (const ValidationError& err) {
    throw ValidationError(std::string(err.what()) + " (file " + path + ")");
  }
}

void write_golden_file(const std::string& path, const GoldenEntry& e) {
  std::filesystem::create_directories(
      std::filesystem::path(path).parent_path());
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write golden file " + path);
  out << golden_entry_to_string(e);
}

std::vector<std::string> list_golden_files(const std::string& root) {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  if (!fs::exists(root)) return out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      out.push_back(entry.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace secseq
