#pragma once

// In-memory form of one SeqSee chart file: a header, an ordered table of
// nodes keyed by id, and an ordered list of edges between them.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace seqsee {

using Json = nlohmann::ordered_json;

struct NodeId {
  std::string value;

  NodeId() = default;
  explicit NodeId(std::string v) : value(std::move(v)) {}

  friend bool operator==(const NodeId&, const NodeId&) = default;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

/// Inclusive integer window along one chart axis.
struct Range {
  std::int64_t min = 0;
  std::int64_t max = 0;

  bool valid() const { return min <= max; }
  friend bool operator==(const Range&, const Range&) = default;
};

struct ChartConfig {
  Range width;
  Range height;
  Json extras = Json::object();
  Json widthExtras = Json::object();
  Json heightExtras = Json::object();

  friend bool operator==(const ChartConfig&, const ChartConfig&) = default;
};

struct Metadata {
  // May contain $...$ math notation.
  std::string title;
  Json extras = Json::object();

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

struct Header {
  Metadata metadata;
  ChartConfig chart;
  Json extras = Json::object();

  friend bool operator==(const Header&, const Header&) = default;
};

/// One plotted element. x/y are chart units; integral unless `absolute`.
struct NodeSpec {
  double x = 0;
  double y = 0;
  std::string label;
  std::optional<std::string> color;
  bool absolute = false;
  Json extras = Json::object();

  friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

enum class LineStyle { solid, dashed, dotted };

inline std::string_view to_string(LineStyle s) {
  switch (s) {
    case LineStyle::solid: return "solid";
    case LineStyle::dashed: return "dashed";
    case LineStyle::dotted: return "dotted";
  }
  return "solid";
}

inline std::optional<LineStyle> line_style_from_string(std::string_view s) {
  if (s == "solid") return LineStyle::solid;
  if (s == "dashed") return LineStyle::dashed;
  if (s == "dotted") return LineStyle::dotted;
  return std::nullopt;
}

struct EdgeSpec {
  NodeId source;
  NodeId target;
  std::optional<std::string> color;
  LineStyle lineStyle = LineStyle::solid;
  Json extras = Json::object();

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Insertion-ordered node table with id lookup.
class NodeTable {
 public:
  struct Entry {
    NodeId id;
    NodeSpec spec;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  /// Returns false (and leaves the table unchanged) if `id` is already present.
  bool insert(NodeId id, NodeSpec spec) {
    auto [it, inserted] = index_.try_emplace(id.value, entries_.size());
    if (!inserted) return false;
    entries_.push_back({std::move(id), std::move(spec)});
    return true;
  }

  const NodeSpec* find(const NodeId& id) const {
    auto it = index_.find(id.value);
    return it == index_.end() ? nullptr : &entries_[it->second].spec;
  }

  bool contains(const NodeId& id) const { return index_.contains(id.value); }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const NodeTable& a, const NodeTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct ChartDocument {
  Header header;
  NodeTable nodes;
  std::vector<EdgeSpec> edges;
  // Unknown top-level keys, kept in source order.
  Json extras = Json::object();

  friend bool operator==(const ChartDocument&, const ChartDocument&) = default;
};

/// Raised when text cannot be turned into a ChartDocument at all.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string jsonPath,
             std::optional<std::size_t> line = std::nullopt,
             std::optional<std::size_t> column = std::nullopt)
      : std::runtime_error(describe(message, jsonPath, line, column)),
        jsonPath_(std::move(jsonPath)),
        line_(line),
        column_(column) {}

  const std::string& jsonPath() const { return jsonPath_; }
  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> column() const { return column_; }

 private:
  static std::string describe(const std::string& message, const std::string& path,
                              std::optional<std::size_t> line,
                              std::optional<std::size_t> column) {
    std::string out;
    if (line && column) {
      out += "line " + std::to_string(*line) + ", column " + std::to_string(*column) + ": ";
    }
    if (!path.empty()) out += path + ": ";
    return out + message;
  }

  std::string jsonPath_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
};

namespace path {

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(s.front())) return false;
  for (char c : s.substr(1)) {
    if (!tail(c)) return false;
  }
  return true;
}

/// Appends an object member: `a.b` for identifier keys, `a["1"]` otherwise.
inline std::string member(std::string_view base, std::string_view key) {
  std::string out(base);
  if (is_identifier(key)) {
    if (!out.empty()) out += '.';
    out += key;
    return out;
  }
  out += "[\"";
  for (char c : key) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"]";
  return out;
}

inline std::string index(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

}  // namespace path

}  // namespace seqsee
