#pragma once

#include <cmath>
#include <string>

#include "document.hpp"

namespace seqsee {

namespace detail {

// Integral coordinates stay integers in the output ("x": 0, not 0.0).
inline Json coordinate_json(double v) {
  constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53
  if (std::isfinite(v) && std::trunc(v) == v && std::fabs(v) <= kExactIntegerLimit) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v);
}

inline void append_extras(Json& obj, const Json& extras) {
  for (const auto& [k, v] : extras.items()) obj[k] = v;
}

inline Json range_json(const Range& r, const Json& extras) {
  Json out = Json::object();
  out["min"] = r.min;
  out["max"] = r.max;
  append_extras(out, extras);
  return out;
}

}  // namespace detail

/// Canonical JSON form of `doc`: fields in schema order, defaults omitted,
/// unknown keys re-emitted after the known ones.
inline Json to_json(const ChartDocument& doc) {
  Json metadata = Json::object();
  if (!doc.header.metadata.title.empty()) metadata["title"] = doc.header.metadata.title;
  detail::append_extras(metadata, doc.header.metadata.extras);

  Json chart = Json::object();
  chart["width"] = detail::range_json(doc.header.chart.width, doc.header.chart.widthExtras);
  chart["height"] = detail::range_json(doc.header.chart.height, doc.header.chart.heightExtras);
  detail::append_extras(chart, doc.header.chart.extras);

  Json header = Json::object();
  header["metadata"] = std::move(metadata);
  header["chart"] = std::move(chart);
  detail::append_extras(header, doc.header.extras);

  Json nodes = Json::object();
  for (const auto& [id, n] : doc.nodes) {
    Json node = Json::object();
    node["x"] = detail::coordinate_json(n.x);
    node["y"] = detail::coordinate_json(n.y);
    if (!n.label.empty()) node["label"] = n.label;
    if (n.color) node["color"] = *n.color;
    if (n.absolute) node["absolute"] = true;
    detail::append_extras(node, n.extras);
    nodes[id.value] = std::move(node);
  }

  Json edges = Json::array();
  for (const EdgeSpec& e : doc.edges) {
    Json edge = Json::object();
    edge["source"] = e.source.value;
    edge["target"] = e.target.value;
    if (e.color) edge["color"] = *e.color;
    if (e.lineStyle != LineStyle::solid) edge["lineStyle"] = std::string(to_string(e.lineStyle));
    detail::append_extras(edge, e.extras);
    edges.push_back(std::move(edge));
  }

  Json root = Json::object();
  root["header"] = std::move(header);
  root["nodes"] = std::move(nodes);
  root["edges"] = std::move(edges);
  detail::append_extras(root, doc.extras);
  return root;
}

/// Two-space indented UTF-8 text with a trailing newline.
inline std::string serialize_document(const ChartDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

}  // namespace seqsee
