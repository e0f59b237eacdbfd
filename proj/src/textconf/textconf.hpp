#pragma once

// Line-oriented "key: value" format with one level of sections.
//
//   # comment
//   mode: lineshape          <- top-level entry
//   grid:                    <- section header (no value, no indentation)
//     min: 0.05              <- section entry (indented)
//     max: 3
//
// Duplicate keys within one scope are rejected. Consumers use Reader to
// pull values and then call finish(), which rejects every key that was not
// consumed.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "common/error.hpp"

namespace gaugeline::textconf {

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
  int key_column = 0;
  int value_column = 0;
};

struct Section {
  std::string name;
  int line = 0;
  std::vector<Entry> entries;
};

struct Document {
  std::string source;
  std::vector<Entry> top;
  std::vector<Section> sections;

  const Section* section(std::string_view name) const;
};

Document parse(std::string_view text, const std::string& source_name);
Document parse_file(const std::string& path);

/// Strict accessor over one scope of a Document.
class Reader {
 public:
  Reader(const Document& doc, const std::vector<Entry>& entries, std::string scope);

  bool has(std::string_view key) const;
  const Entry* find(std::string_view key);

  std::string string(std::string_view key);
  std::optional<std::string> optional_string(std::string_view key);
  double number(std::string_view key);
  std::optional<double> optional_number(std::string_view key);
  std::optional<long> optional_integer(std::string_view key);
  std::optional<bool> optional_bool(std::string_view key);
  /// Comma-separated list; items trimmed, empty items rejected.
  std::optional<std::vector<std::string>> optional_list(std::string_view key);

  /// Every entry in this scope that has not been read.
  void finish() const;

  [[noreturn]] void fail(const Entry& at, const std::string& msg) const;

 private:
  const Document& doc_;
  const std::vector<Entry>& entries_;
  std::string scope_;
  std::vector<bool> used_;
};

double parse_number(std::string_view text, bool* ok);

}  // namespace gaugeline::textconf
