#pragma once

// Text -> ChartDocument. Parsing is strict about shape (types of known
// fields, duplicate keys) and lenient about content: unknown keys are kept
// in `extras`, and referential problems are left for validate().

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "document.hpp"

namespace seqsee {

namespace detail {

// Builds an ordered_json tree like nlohmann's DOM parser, but refuses
// duplicate object keys and remembers where the failure happened.
class StrictDomBuilder : public nlohmann::json_sax<Json> {
 public:
  bool null() override { return emit(Json(nullptr)); }
  bool boolean(bool v) override { return emit(Json(v)); }
  bool number_integer(number_integer_t v) override { return emit(Json(v)); }
  bool number_unsigned(number_unsigned_t v) override { return emit(Json(v)); }
  bool number_float(number_float_t v, const string_t&) override { return emit(Json(v)); }
  bool string(string_t& v) override { return emit(Json(v)); }
  bool binary(binary_t& v) override { return emit(Json(v)); }

  bool start_object(std::size_t) override { return open(Json::object()); }
  bool start_array(std::size_t) override { return open(Json::array()); }

  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }

  bool key(string_t& k) override {
    Frame& top = stack_.back();
    if (!top.keys.insert(k).second) {
      duplicatePath_ = path::member(top.path, k);
      return false;
    }
    pendingKey_ = k;
    return true;
  }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    errorPosition_ = position;
    errorMessage_ = ex.what();
    failed_ = true;
    return false;
  }

  Json take() { return std::move(root_); }
  bool failed() const { return failed_; }
  std::size_t errorPosition() const { return errorPosition_; }
  const std::string& errorMessage() const { return errorMessage_; }
  const std::string& duplicatePath() const { return duplicatePath_; }

 private:
  struct Frame {
    Json* value;
    std::unordered_set<std::string> keys;
    std::string path;
  };

  // Places `v` at the current position; returns the stored value and its path.
  std::pair<Json*, std::string> place(Json v) {
    if (stack_.empty()) {
      root_ = std::move(v);
      return {&root_, ""};
    }
    Frame& top = stack_.back();
    if (top.value->is_array()) {
      std::string p = path::index(top.path, top.value->size());
      top.value->push_back(std::move(v));
      return {&top.value->back(), std::move(p)};
    }
    std::string p = path::member(top.path, pendingKey_);
    Json& slot = (*top.value)[pendingKey_];
    slot = std::move(v);
    return {&slot, std::move(p)};
  }

  bool emit(Json v) {
    place(std::move(v));
    return true;
  }

  bool open(Json container) {
    auto [ptr, p] = place(std::move(container));
    stack_.push_back({ptr, {}, std::move(p)});
    return true;
  }

  Json root_;
  std::vector<Frame> stack_;
  std::string pendingKey_;
  bool failed_ = false;
  std::size_t errorPosition_ = 0;
  std::string errorMessage_;
  std::string duplicatePath_;
};

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                       std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t lineStart = 0;
  for (std::size_t i = 0; i + 1 < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      lineStart = i + 1;
    }
  }
  std::size_t column = offset > lineStart ? offset - lineStart : 1;
  return {line, column};
}

// nlohmann messages look like "[json.exception.parse_error.101] parse error
// at line 1, column 2: syntax error ..."; keep only the part after the location.
inline std::string short_parse_message(const std::string& what) {
  auto col = what.find("column ");
  if (col != std::string::npos) {
    auto colon = what.find(": ", col);
    if (colon != std::string::npos) return what.substr(colon + 2);
  }
  auto bracket = what.find("] ");
  return bracket == std::string::npos ? what : what.substr(bracket + 2);
}

inline Json split_extras(const Json& obj, std::initializer_list<std::string_view> known) {
  Json extras = Json::object();
  for (const auto& [k, v] : obj.items()) {
    bool isKnown = false;
    for (auto name : known) {
      if (k == name) {
        isKnown = true;
        break;
      }
    }
    if (!isKnown) extras[k] = v;
  }
  return extras;
}

inline const Json* member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

inline const Json& require_object(const Json& obj, const char* key, const std::string& base) {
  const Json* v = member(obj, key);
  std::string p = path::member(base, key);
  if (!v) throw ParseError("missing required object", p);
  if (!v->is_object()) throw ParseError("expected an object", p);
  return *v;
}

inline std::int64_t read_bound(const Json& range, const char* key, const std::string& base) {
  std::string p = path::member(base, key);
  const Json* v = member(range, key);
  if (!v) throw ParseError("missing required integer", p);
  if (v->is_number_integer() && !v->is_number_unsigned()) return v->get<std::int64_t>();
  if (v->is_number_unsigned()) {
    auto u = v->get<std::uint64_t>();
    if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      return static_cast<std::int64_t>(u);
    }
    throw ParseError("integer out of range", p);
  }
  if (v->is_number_float()) {
    double d = v->get<double>();
    if (std::isfinite(d) && std::trunc(d) == d && std::fabs(d) < 9.2e18) {
      return static_cast<std::int64_t>(d);
    }
  }
  throw ParseError("expected an integer", p);
}

inline Range read_range(const Json& chart, const char* key, const std::string& base,
                        Json& extras) {
  std::string p = path::member(base, key);
  const Json& obj = require_object(chart, key, base);
  extras = split_extras(obj, {"min", "max"});
  return Range{read_bound(obj, "min", p), read_bound(obj, "max", p)};
}

inline std::string read_string(const Json& obj, const char* key, const std::string& base,
                               std::string fallback = {}) {
  const Json* v = member(obj, key);
  if (!v) return fallback;
  if (!v->is_string()) throw ParseError("expected a string", path::member(base, key));
  return v->get<std::string>();
}

inline std::optional<std::string> read_optional_string(const Json& obj, const char* key,
                                                       const std::string& base) {
  if (!member(obj, key)) return std::nullopt;
  return read_string(obj, key, base);
}

inline double read_coordinate(const Json& obj, const char* key, const std::string& base) {
  std::string p = path::member(base, key);
  const Json* v = member(obj, key);
  if (!v) throw ParseError("missing required number", p);
  if (!v->is_number()) throw ParseError("expected a number", p);
  return v->get<double>();
}

inline Header read_header(const Json& root) {
  Header h;
  const Json& header = require_object(root, "header", "");
  h.extras = split_extras(header, {"metadata", "chart"});

  if (const Json* meta = member(header, "metadata")) {
    if (!meta->is_object()) throw ParseError("expected an object", "header.metadata");
    h.metadata.title = read_string(*meta, "title", "header.metadata");
    h.metadata.extras = split_extras(*meta, {"title"});
  }

  const Json& chart = require_object(header, "chart", "header");
  h.chart.extras = split_extras(chart, {"width", "height"});
  h.chart.width = read_range(chart, "width", "header.chart", h.chart.widthExtras);
  h.chart.height = read_range(chart, "height", "header.chart", h.chart.heightExtras);
  return h;
}

inline NodeSpec read_node(const Json& obj, const std::string& p) {
  if (!obj.is_object()) throw ParseError("expected a node object", p);
  NodeSpec n;
  n.x = read_coordinate(obj, "x", p);
  n.y = read_coordinate(obj, "y", p);
  n.label = read_string(obj, "label", p);
  n.color = read_optional_string(obj, "color", p);
  if (const Json* a = member(obj, "absolute")) {
    if (!a->is_boolean()) throw ParseError("expected a boolean", path::member(p, "absolute"));
    n.absolute = a->get<bool>();
  }
  n.extras = split_extras(obj, {"x", "y", "label", "color", "absolute"});
  return n;
}

inline EdgeSpec read_edge(const Json& obj, const std::string& p) {
  if (!obj.is_object()) throw ParseError("expected an edge object", p);
  EdgeSpec e;
  for (const char* key : {"source", "target"}) {
    if (!member(obj, key)) throw ParseError("missing required string", path::member(p, key));
  }
  e.source = NodeId(read_string(obj, "source", p));
  e.target = NodeId(read_string(obj, "target", p));
  e.color = read_optional_string(obj, "color", p);
  if (auto style = read_optional_string(obj, "lineStyle", p)) {
    auto parsed = line_style_from_string(*style);
    if (!parsed) {
      throw ParseError("unknown lineStyle \"" + *style + "\" (expected solid, dashed or dotted)",
                       path::member(p, "lineStyle"));
    }
    e.lineStyle = *parsed;
  }
  e.extras = split_extras(obj, {"source", "target", "color", "lineStyle"});
  return e;
}

}  // namespace detail

/// Parses one SeqSee JSON file. Throws ParseError on malformed JSON, wrong
/// shapes for known fields, or duplicate keys.
inline ChartDocument parse_document(std::string_view text) {
  detail::StrictDomBuilder builder;
  bool ok = Json::sax_parse(text.begin(), text.end(), &builder,
                            nlohmann::detail::input_format_t::json, true, false);
  if (!ok) {
    if (!builder.duplicatePath().empty()) {
      throw ParseError("duplicate key", builder.duplicatePath());
    }
    auto [line, column] = detail::line_column(text, builder.errorPosition());
    throw ParseError(detail::short_parse_message(builder.errorMessage()), "", line, column);
  }
  Json root = builder.take();
  if (!root.is_object()) throw ParseError("top-level value must be an object", "$");

  ChartDocument doc;
  doc.header = detail::read_header(root);
  doc.extras = detail::split_extras(root, {"header", "nodes", "edges"});

  if (const Json* nodes = detail::member(root, "nodes")) {
    if (!nodes->is_object()) throw ParseError("expected an object", "nodes");
    for (const auto& [id, value] : nodes->items()) {
      std::string p = path::member("nodes", id);
      // Duplicates were already rejected by the builder.
      doc.nodes.insert(NodeId(id), detail::read_node(value, p));
    }
  }

  if (const Json* edges = detail::member(root, "edges")) {
    if (!edges->is_array()) throw ParseError("expected an array", "edges");
    std::size_t i = 0;
    for (const Json& value : *edges) {
      doc.edges.push_back(detail::read_edge(value, path::index("edges", i++)));
    }
  }
  return doc;
}

}  // namespace seqsee
