#include "textconf/textconf.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gaugeline::textconf {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Strips a trailing "# ..." comment. A '#' only starts a comment at the
// beginning of the line or after whitespace.
std::string_view strip_comment(std::string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' && (i == 0 || is_space(line[i - 1]))) return line.substr(0, i);
  }
  return line;
}

}  // namespace

const Section* Document::section(std::string_view name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

Document parse(std::string_view text, const std::string& source_name) {
  Document doc;
  doc.source = source_name;
  Section* current = nullptr;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view line = strip_comment(raw);
    if (trim(line).empty()) continue;

    const bool indented = is_space(line.front());
    const std::size_t indent = line.find_first_not_of(" \t");
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(source_name, line_no, static_cast<int>(indent) + 1,
                       "expected 'key: value'");

    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    if (key.empty())
      throw ParseError(source_name, line_no, static_cast<int>(indent) + 1, "empty key");

    const std::size_t value_offset = value.empty() ? colon + 1 : line.find(value, colon + 1);

    Entry entry{std::string(key), std::string(value), line_no, static_cast<int>(indent) + 1,
                static_cast<int>(value_offset) + 1};

    if (!indented) {
      if (value.empty()) {
        for (const auto& s : doc.sections)
          if (s.name == entry.key)
            throw ParseError(source_name, line_no, 1,
                             "duplicate section '" + entry.key + "' (first at line " +
                                 std::to_string(s.line) + ")");
        for (const auto& e : doc.top)
          if (e.key == entry.key)
            throw ParseError(source_name, line_no, 1,
                             "'" + entry.key + "' is already a top-level key");
        doc.sections.push_back(Section{entry.key, line_no, {}});
        current = &doc.sections.back();
      } else {
        for (const auto& e : doc.top)
          if (e.key == entry.key)
            throw ParseError(source_name, line_no, 1,
                             "duplicate key '" + entry.key + "' (first at line " +
                                 std::to_string(e.line) + ")");
        if (doc.section(entry.key))
          throw ParseError(source_name, line_no, 1,
                           "'" + entry.key + "' is already a section name");
        doc.top.push_back(std::move(entry));
        current = nullptr;
      }
      continue;
    }

    if (!current)
      throw ParseError(source_name, line_no, entry.key_column,
                       "indented entry outside of a section");
    if (value.empty())
      throw ParseError(source_name, line_no, entry.value_column,
                       "missing value for '" + entry.key + "'");
    for (const auto& e : current->entries)
      if (e.key == entry.key)
        throw ParseError(source_name, line_no, entry.key_column,
                         "duplicate key '" + entry.key + "' in section '" + current->name +
                             "' (first at line " + std::to_string(e.line) + ")");
    current->entries.push_back(std::move(entry));
  }
  return doc;
}

Document parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

double parse_number(std::string_view text, bool* ok) {
  const std::string s(trim(text));
  *ok = false;
  if (s.empty()) return 0.0;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) return 0.0;
  *ok = true;
  return v;
}

Reader::Reader(const Document& doc, const std::vector<Entry>& entries, std::string scope)
    : doc_(doc), entries_(entries), scope_(std::move(scope)), used_(entries.size(), false) {}

bool Reader::has(std::string_view key) const {
  for (const auto& e : entries_)
    if (e.key == key) return true;
  return false;
}

const Entry* Reader::find(std::string_view key) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].key == key) {
      used_[i] = true;
      return &entries_[i];
    }
  }
  return nullptr;
}

void Reader::fail(const Entry& at, const std::string& msg) const {
  throw ParseError(doc_.source, at.line, at.value_column, msg);
}

std::string Reader::string(std::string_view key) {
  if (auto v = optional_string(key)) return *v;
  throw ParseError(doc_.source, 1, 1, "missing required key '" + std::string(key) + "' in " + scope_);
}

std::optional<std::string> Reader::optional_string(std::string_view key) {
  const Entry* e = find(key);
  if (!e) return std::nullopt;
  return e->value;
}

double Reader::number(std::string_view key) {
  if (auto v = optional_number(key)) return *v;
  throw ParseError(doc_.source, 1, 1, "missing required key '" + std::string(key) + "' in " + scope_);
}

std::optional<double> Reader::optional_number(std::string_view key) {
  const Entry* e = find(key);
  if (!e) return std::nullopt;
  bool ok = false;
  const double v = parse_number(e->value, &ok);
  if (!ok) fail(*e, "'" + e->key + "' expects a finite number, got '" + e->value + "'");
  return v;
}

std::optional<long> Reader::optional_integer(std::string_view key) {
  const Entry* e = find(key);
  if (!e) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(e->value.c_str(), &end, 10);
  if (end != e->value.c_str() + e->value.size() || errno == ERANGE)
    fail(*e, "'" + e->key + "' expects an integer, got '" + e->value + "'");
  return v;
}

std::optional<bool> Reader::optional_bool(std::string_view key) {
  const Entry* e = find(key);
  if (!e) return std::nullopt;
  if (e->value == "true" || e->value == "yes" || e->value == "on") return true;
  if (e->value == "false" || e->value == "no" || e->value == "off") return false;
  fail(*e, "'" + e->key + "' expects true/false, got '" + e->value + "'");
}

std::optional<std::vector<std::string>> Reader::optional_list(std::string_view key) {
  const Entry* e = find(key);
  if (!e) return std::nullopt;
  std::vector<std::string> items;
  std::string_view rest = e->value;
  while (true) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    if (item.empty()) fail(*e, "empty item in list '" + e->key + "'");
    items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return items;
}

void Reader::finish() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!used_[i]) {
      const Entry& e = entries_[i];
      throw ParseError(doc_.source, e.line, e.key_column,
                       "unknown key '" + e.key + "' in " + scope_);
    }
  }
}

}  // namespace gaugeline::textconf
