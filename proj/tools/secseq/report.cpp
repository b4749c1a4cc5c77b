#include "report.hpp"

#include <sstream>

#include <json.hpp>

void Report::add_int(const std::string& key, std::int64_t value) {
  Field f;
  f.kind = Kind::integer;
  f.key = key;
  f.int_value = value;
  fields_.push_back(std::move(f));
}

void Report::add_str(const std::string& key, const std::string& value) {
  Field f;
  f.kind = Kind::text;
  f.key = key;
  f.text_value = value;
  fields_.push_back(std::move(f));
}

void Report::add_bool(const std::string& key, bool value) {
  Field f;
  f.kind = Kind::boolean;
  f.key = key;
  f.bool_value = value;
  fields_.push_back(std::move(f));
}

void Report::add_terms(const std::string& key, const std::vector<std::int64_t>& terms) {
  Field f;
  f.kind = Kind::terms;
  f.key = key;
  f.terms_value = terms;
  fields_.push_back(std::move(f));
}

void Report::add_gaps(const std::string& key, const secseq::GapProfile& profile) {
  Field f;
  f.kind = Kind::gaps;
  f.key = key;
  f.gaps_value = profile;
  fields_.push_back(std::move(f));
}

void Report::add_trace_line(const std::string& line) { trace_.push_back(line); }

std::string Report::text() const {
  std::ostringstream out;
  for (const Field& f : fields_) {
    out << f.key << ": ";
    switch (f.kind) {
      case Kind::integer:
        out << f.int_value;
        break;
      case Kind::text:
        out << f.text_value;
        break;
      case Kind::boolean:
        out << (f.bool_value ? "yes" : "no");
        break;
      case Kind::terms:
        for (std::size_t i = 0; i < f.terms_value.size(); ++i) {
          if (i > 0) out << ", ";
          out << f.terms_value[i];
        }
        break;
      case Kind::gaps:
        if (f.gaps_value.gaps.empty()) {
          out << "none";
        } else {
          for (std::size_t i = 0; i < f.gaps_value.gaps.size(); ++i) {
            if (i > 0) out << "; ";
            out << "position " << f.gaps_value.gaps[i].position << " size "
                << f.gaps_value.gaps[i].size;
          }
        }
        break;
    }
    out << '\n';
  }
  for (const std::string& line : trace_) out << line << '\n';
  return out.str();
}

std::string Report::json() const {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const Field& f : fields_) {
    switch (f.kind) {
      case Kind::integer:
        obj[f.key] = f.int_value;
        break;
      case Kind::text:
        obj[f.key] = f.text_value;
        break;
      case Kind::boolean:
        obj[f.key] = f.bool_value;
        break;
      case Kind::terms:
        obj[f.key] = f.terms_value;
        break;
      case Kind::gaps: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const secseq::Gap& g : f.gaps_value.gaps) {
          arr.push_back({{"position", g.position}, {"size", g.size}});
        }
        obj[f.key] = std::move(arr);
        break;
      }
    }
  }
  if (!trace_.empty()) obj["trace"] = trace_;
  return obj.dump(2) + "\n";
}
