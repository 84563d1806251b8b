#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "arrange/errors.hpp"

namespace arrange {

struct LineDiagnostic {
  std::size_t line = 0;  // 1-based, header is line 1
  std::string message;
};

namespace csv {

// Splits one CSV line. Fields may be double-quoted; embedded quotes are
// doubled. Returns false on unbalanced quoting.
inline bool split(const std::string& line, std::vector<std::string>& out) {
  out.clear();
  std::string field;
  bool quoted = false;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
        ++i;
      } else {
        field += c;
        ++i;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
      ++i;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
      ++i;
    } else {
      field += c;
      ++i;
    }
  }
  if (quoted) return false;
  out.push_back(std::move(field));
  return true;
}

inline std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void write_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << quote(fields[i]);
  }
  os << '\n';
}

struct Row {
  std::size_t line = 0;  // source line number
  std::vector<std::string> fields;
};

// Reads a whole CSV stream. The header must match `expected_header`
// exactly (FormatError otherwise). Rows with the wrong field count are
// reported as diagnostics, not returned.
inline std::vector<Row> read(std::istream& is, const std::string& expected_header,
                             std::vector<LineDiagnostic>& diagnostics) {
  std::vector<Row> rows;
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty input, expected header " + expected_header);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected_header)
    throw FormatError("bad header: got \"" + line + "\", expected \"" + expected_header + "\"");

  std::vector<std::string> expected_fields;
  split(expected_header, expected_fields);
  const std::size_t n_cols = expected_fields.size();

  std::size_t line_no = 1;
  std::vector<std::string> fields;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!split(line, fields)) {
      diagnostics.push_back({line_no, "unbalanced quotes"});
      continue;
    }
    if (fields.size() != n_cols) {
      diagnostics.push_back({line_no, "expected " + std::to_string(n_cols) + " fields, got " +
                                          std::to_string(fields.size())});
      continue;
    }
    rows.push_back(Row{line_no, fields});
  }
  return rows;
}

}  // namespace csv
}  // namespace arrange
