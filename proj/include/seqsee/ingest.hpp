#pragma once

// CSV -> SeqSee JSON converter.
//
// The column layout below is this project's own; other data sources need
// their own mapping, which is confined to read_node_rows/read_edge_rows.
//
//   nodes: id,x,y[,label]          x and y are integers
//   edges: source,target[,kind]    kind "dN" = differential, anything else = plain
//
// Row numbers in messages count data rows from 1 (the header is row 0).

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "csv.hpp"
#include "document.hpp"
#include "serialize.hpp"

namespace seqsee {

class ConversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CsvNodeRow {
  std::string id;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::string label;
};

struct CsvEdgeRow {
  std::string source;
  std::string target;
  std::string kind;
};

struct ConversionResult {
  ChartDocument document;
  std::vector<std::string> warnings;
};

/// Colors for differentials d2, d3, d4, ...; cycles after the last entry.
inline constexpr std::string_view kDifferentialPalette[] = {
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

/// Page number r for kinds of the form "d<r>", otherwise nullopt.
inline std::optional<long> differential_page(std::string_view kind) {
  if (kind.size() < 2 || kind.front() != 'd') return std::nullopt;
  long r = 0;
  auto digits = kind.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return r;
}

inline std::optional<std::string> color_for_kind(std::string_view kind) {
  auto r = differential_page(kind);
  if (!r) return std::nullopt;
  constexpr long n = std::size(kDifferentialPalette);
  long slot = ((*r - 2) % n + n) % n;
  return std::string(kDifferentialPalette[slot]);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::string field(const csv::Record& row, int column) {
  if (column < 0 || static_cast<std::size_t>(column) >= row.size()) return {};
  return row[static_cast<std::size_t>(column)];
}

inline std::int64_t parse_integer(const csv::Record& row, int column, std::string_view what,
                                  std::size_t rowNumber) {
  std::string raw = field(row, column);
  std::string_view text = trim(raw);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConversionError("nodes CSV row " + std::to_string(rowNumber) + ": malformed " +
                          std::string(what) + " value \"" + raw + "\" (expected an integer)");
  }
  return value;
}

// Locates required/optional columns, warning about columns it does not use.
inline std::vector<int> resolve_columns(const csv::Table& table, std::string_view tableName,
                                        std::initializer_list<std::string_view> required,
                                        std::initializer_list<std::string_view> optional,
                                        std::vector<std::string>& warnings) {
  std::vector<int> columns;
  for (auto name : required) {
    int c = table.column(name);
    if (c < 0) {
      throw ConversionError(std::string(tableName) + " CSV is missing required column \"" +
                            std::string(name) + "\"");
    }
    columns.push_back(c);
  }
  for (auto name : optional) columns.push_back(table.column(name));

  for (const std::string& h : table.header) {
    bool used = std::ranges::find(required, h) != required.end() ||
                std::ranges::find(optional, h) != optional.end();
    if (!used) {
      warnings.push_back(std::string(tableName) + " CSV: ignoring unknown column \"" + h + "\"");
    }
  }
  return columns;
}

inline bool blank_table(std::string_view text) {
  return std::ranges::all_of(text, [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

inline csv::Table read_table(std::string_view text, std::string_view tableName) {
  try {
    return csv::read_table(text);
  } catch (const csv::CsvError& e) {
    throw ConversionError(std::string(tableName) + " CSV: " + e.what());
  }
}

inline std::vector<CsvNodeRow> read_node_rows(std::string_view text,
                                              std::vector<std::string>& warnings) {
  std::vector<CsvNodeRow> rows;
  if (blank_table(text)) return rows;
  csv::Table table = read_table(text, "nodes");
  auto cols = resolve_columns(table, "nodes", {"id", "x", "y"}, {"label"}, warnings);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const csv::Record& r = table.rows[i];
    const std::size_t rowNumber = i + 1;
    CsvNodeRow row;
    row.id = field(r, cols[0]);
    if (row.id.empty()) {
      throw ConversionError("nodes CSV row " + std::to_string(rowNumber) + ": empty id");
    }
    row.x = parse_integer(r, cols[1], "x", rowNumber);
    row.y = parse_integer(r, cols[2], "y", rowNumber);
    row.label = field(r, cols[3]);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<CsvEdgeRow> read_edge_rows(std::string_view text,
                                              std::vector<std::string>& warnings) {
  std::vector<CsvEdgeRow> rows;
  if (blank_table(text)) return rows;
  csv::Table table = read_table(text, "edges");
  auto cols = resolve_columns(table, "edges", {"source", "target"}, {"kind"}, warnings);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const csv::Record& r = table.rows[i];
    CsvEdgeRow row{field(r, cols[0]), field(r, cols[1]), std::string(trim(field(r, cols[2])))};
    if (row.source.empty() || row.target.empty()) {
      throw ConversionError("edges CSV row " + std::to_string(i + 1) +
                            ": source and target must be non-empty");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// Builds a chart from a node table and an edge table. The chart bounds are
/// the tight bounding box of the node coordinates ([0,0]x[0,0] with no nodes).
inline ConversionResult convert_csv(std::string_view nodesCsv, std::string_view edgesCsv,
                                    std::string title) {
  ConversionResult result;
  auto nodeRows = detail::read_node_rows(nodesCsv, result.warnings);
  auto edgeRows = detail::read_edge_rows(edgesCsv, result.warnings);

  ChartDocument& doc = result.document;
  doc.header.metadata.title = std::move(title);

  Range width{0, 0};
  Range height{0, 0};
  if (!nodeRows.empty()) {
    width = {std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::min()};
    height = width;
  }
  for (std::size_t i = 0; i < nodeRows.size(); ++i) {
    CsvNodeRow& row = nodeRows[i];
    width = {std::min(width.min, row.x), std::max(width.max, row.x)};
    height = {std::min(height.min, row.y), std::max(height.max, row.y)};
    NodeSpec spec;
    spec.x = static_cast<double>(row.x);
    spec.y = static_cast<double>(row.y);
    spec.label = std::move(row.label);
    if (!doc.nodes.insert(NodeId(row.id), std::move(spec))) {
      throw ConversionError("nodes CSV row " + std::to_string(i + 1) + ": duplicate id \"" +
                            row.id + "\"");
    }
  }
  doc.header.chart.width = width;
  doc.header.chart.height = height;

  std::string dangling;
  for (std::size_t i = 0; i < edgeRows.size(); ++i) {
    const CsvEdgeRow& row = edgeRows[i];
    const std::string rowName = "row " + std::to_string(i + 1);
    for (const std::string* end : {&row.source, &row.target}) {
      if (!doc.nodes.contains(NodeId(*end))) {
        if (!dangling.empty()) dangling += "; ";
        dangling += rowName + " (" + (end == &row.source ? "source" : "target") + " \"" + *end +
                    "\")";
      }
    }
    if (row.source == row.target) {
      throw ConversionError("edges CSV " + rowName + ": self-loop on \"" + row.source + "\"");
    }
    EdgeSpec edge;
    edge.source = NodeId(row.source);
    edge.target = NodeId(row.target);
    edge.color = color_for_kind(row.kind);
    doc.edges.push_back(std::move(edge));
  }
  if (!dangling.empty()) {
    throw ConversionError("edges CSV references unknown nodes: " + dangling);
  }
  return result;
}

/// Replaces `path` with `text` via a sibling temp file and rename, so readers
/// never see a partial file.
inline void write_text_atomic(const std::filesystem::path& path, std::string_view text) {
  namespace fs = std::filesystem;
  fs::path temp = path;
  temp += ".tmp";

  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string() + ": cannot create temporary file");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw IoError("cannot write " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(temp, ignored);
    throw IoError("cannot write " + path.string() + ": " + ec.message());
  }
}

inline void write_json(const ChartDocument& doc, const std::filesystem::path& path) {
  write_text_atomic(path, serialize_document(doc));
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading " + path.string());
  return text;
}

}  // namespace seqsee
