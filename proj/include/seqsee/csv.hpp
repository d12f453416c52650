#pragma once

// Minimal RFC 4180 reader: comma separated, double-quoted fields with ""
// escapes, LF or CRLF record ends, optional UTF-8 BOM.

#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqsee::csv {

using Record = std::vector<std::string>;

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Splits `text` into records. Blank lines are skipped. A trailing newline
/// does not produce an extra record.
inline std::vector<Record> read_records(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Record> records;
  Record current;
  std::string field;
  bool inQuotes = false;
  bool fieldWasQuoted = false;
  bool recordHasContent = false;
  std::size_t line = 1;

  auto endField = [&] {
    current.push_back(std::move(field));
    field.clear();
    fieldWasQuoted = false;
  };
  auto endRecord = [&] {
    endField();
    bool blank = !recordHasContent && current.size() == 1 && current[0].empty();
    if (!blank) records.push_back(std::move(current));
    current.clear();
    recordHasContent = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (inQuotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          inQuotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || fieldWasQuoted) {
          throw CsvError("line " + std::to_string(line) + ": unexpected quote inside a field");
        }
        inQuotes = true;
        fieldWasQuoted = true;
        recordHasContent = true;
        break;
      case ',':
        endField();
        recordHasContent = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        endRecord();
        ++line;
        break;
      default:
        if (fieldWasQuoted) {
          throw CsvError("line " + std::to_string(line) + ": text after closing quote");
        }
        field += c;
        recordHasContent = true;
        break;
    }
  }
  if (inQuotes) throw CsvError("unterminated quoted field");
  if (recordHasContent || !field.empty()) endRecord();
  return records;
}

/// A CSV table whose first record names the columns.
struct Table {
  Record header;
  std::vector<Record> rows;

  /// Index of `name` in the header, or -1.
  int column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
  }
};

inline Table read_table(std::string_view text) {
  auto records = read_records(text);
  Table t;
  if (records.empty()) return t;
  t.header = std::move(records.front());
  t.rows.assign(std::make_move_iterator(records.begin() + 1),
                std::make_move_iterator(records.end()));
  return t;
}

}  // namespace seqsee::csv
