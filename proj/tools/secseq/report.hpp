#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "secseq/sequence.hpp"

// Ordered key/value run report that renders either as "key: value" text lines
// or as a single JSON object with the same field names.
class Report {
 public:
  void add_int(const std::string& key, std::int64_t value);
  void add_str(const std::string& key, const std::string& value);
  void add_bool(const std::string& key, bool value);  // text: yes/no
  void add_terms(const std::string& key, const std::vector<std::int64_t>& terms);
  void add_gaps(const std::string& key, const secseq::GapProfile& profile);

  // An extra free-form text line appended after the fields (trace output);
  // in JSON mode collected under "trace".
  void add_trace_line(const std::string& line);

  std::string text() const;
  std::string json() const;

 private:
  enum class Kind { integer, text, boolean, terms, gaps };
  struct Field {
    Kind kind;
    std::string key;
    std::int64_t int_value = 0;
    bool bool_value = false;
    std::string text_value;
    std::vector<std::int64_t> terms_value;
    secseq::GapProfile gaps_value;
  };
  std::vector<Field> fields_;
  std::vector<std::string> trace_;
};
