#pragma once

// Chart units -> canvas pixels. Chart y grows upward, canvas y grows
// downward. Nodes sharing a bidegree are spread into a centered row.

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "document.hpp"

namespace seqsee {

struct LayoutConfig {
  double unitSize = 60;
  double margin = 40;
  double nodeRadius = 4;
  double collisionSpacing = 12;

  /// Throws std::invalid_argument describing the first violated constraint.
  void check() const {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(unitSize) || unitSize <= 0) {
      throw std::invalid_argument("unitSize must be positive");
    }
    if (!finite(margin) || margin < 0) throw std::invalid_argument("margin must be non-negative");
    if (!finite(nodeRadius) || nodeRadius <= 0) {
      throw std::invalid_argument("nodeRadius must be positive");
    }
    if (!finite(collisionSpacing) || collisionSpacing < 2 * nodeRadius) {
      throw std::invalid_argument("collisionSpacing must be at least 2 * nodeRadius");
    }
  }

  friend bool operator==(const LayoutConfig&, const LayoutConfig&) = default;
};

struct CanvasPoint {
  double cx = 0;
  double cy = 0;
  friend bool operator==(const CanvasPoint&, const CanvasPoint&) = default;
};

struct PlacedNode {
  NodeId id;
  double cx = 0;
  double cy = 0;
  const NodeSpec* spec = nullptr;  // points into the laid-out document
};

struct PlacedEdge {
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  const EdgeSpec* spec = nullptr;
};

struct ViewBox {
  double x = 0, y = 0, width = 0, height = 0;
  friend bool operator==(const ViewBox&, const ViewBox&) = default;
};

/// Which chart coordinate a grid line or tick belongs to.
enum class Axis { x, y };

/// Grid line at an integer coordinate: vertical for Axis::x, horizontal for Axis::y.
struct GridLine {
  Axis axis;
  std::int64_t value;
  double x1, y1, x2, y2;
};

struct AxisTick {
  Axis axis;
  std::int64_t value;
  double x, y;
};

struct Frame {
  ViewBox viewBox;
  std::vector<GridLine> gridLines;
  std::vector<AxisTick> axisTicks;
};

struct LayoutResult {
  std::vector<PlacedNode> placedNodes;
  std::vector<PlacedEdge> placedEdges;
  ViewBox viewBox;
  std::vector<GridLine> gridLines;
  std::vector<AxisTick> axisTicks;
};

inline CanvasPoint chart_to_canvas(double x, double y, const ChartConfig& bounds,
                                   const LayoutConfig& cfg) {
  return {cfg.margin + (x - static_cast<double>(bounds.width.min)) * cfg.unitSize,
          cfg.margin + (static_cast<double>(bounds.height.max) - y) * cfg.unitSize};
}

inline std::vector<PlacedNode> place_nodes(const ChartDocument& doc, const LayoutConfig& cfg) {
  const ChartConfig& bounds = doc.header.chart;

  // Collision groups keyed by exact coordinates; values are document indices.
  std::map<std::pair<double, double>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
    const NodeSpec& n = doc.nodes[i].spec;
    if (!n.absolute) groups[{n.x, n.y}].push_back(i);
  }

  std::vector<PlacedNode> placed(doc.nodes.size());
  for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
    const auto& entry = doc.nodes[i];
    CanvasPoint p = chart_to_canvas(entry.spec.x, entry.spec.y, bounds, cfg);
    placed[i] = {entry.id, p.cx, p.cy, &entry.spec};
  }
  for (const auto& [coord, members] : groups) {
    const double k = static_cast<double>(members.size());
    for (std::size_t slot = 0; slot < members.size(); ++slot) {
      placed[members[slot]].cx += (static_cast<double>(slot) - (k - 1) / 2) * cfg.collisionSpacing;
    }
  }
  return placed;
}

/// Straight center-to-center segments. Throws std::logic_error if an endpoint
/// was not placed, which cannot happen for a document with a clean report.
inline std::vector<PlacedEdge> route_edges(const ChartDocument& doc,
                                           const std::vector<PlacedNode>& placed) {
  std::map<std::string, const PlacedNode*, std::less<>> byId;
  for (const PlacedNode& p : placed) byId.emplace(p.id.value, &p);

  auto lookup = [&](const NodeId& id) {
    auto it = byId.find(id.value);
    if (it == byId.end()) {
      throw std::logic_error("route_edges: edge endpoint \"" + id.value + "\" was not placed");
    }
    return it->second;
  };

  std::vector<PlacedEdge> out;
  out.reserve(doc.edges.size());
  for (const EdgeSpec& e : doc.edges) {
    const PlacedNode* s = lookup(e.source);
    const PlacedNode* t = lookup(e.target);
    out.push_back({s->cx, s->cy, t->cx, t->cy, &e});
  }
  return out;
}

inline Frame compute_frame(const ChartConfig& bounds, const LayoutConfig& cfg) {
  if (!bounds.width.valid() || !bounds.height.valid()) {
    throw std::invalid_argument("compute_frame: chart range has min > max");
  }
  const double spanX = static_cast<double>(bounds.width.max - bounds.width.min);
  const double spanY = static_cast<double>(bounds.height.max - bounds.height.min);

  Frame f;
  f.viewBox = {0, 0, 2 * cfg.margin + spanX * cfg.unitSize, 2 * cfg.margin + spanY * cfg.unitSize};

  const double left = cfg.margin;
  const double right = cfg.margin + spanX * cfg.unitSize;
  const double top = cfg.margin;
  const double bottom = cfg.margin + spanY * cfg.unitSize;

  for (std::int64_t x = bounds.width.min; x <= bounds.width.max; ++x) {
    double cx = chart_to_canvas(static_cast<double>(x), 0, bounds, cfg).cx;
    f.gridLines.push_back({Axis::x, x, cx, top, cx, bottom});
    f.axisTicks.push_back({Axis::x, x, cx, bottom + cfg.margin / 2});
  }
  for (std::int64_t y = bounds.height.min; y <= bounds.height.max; ++y) {
    double cy = chart_to_canvas(0, static_cast<double>(y), bounds, cfg).cy;
    f.gridLines.push_back({Axis::y, y, left, cy, right, cy});
    f.axisTicks.push_back({Axis::y, y, cfg.margin / 2, cy});
  }
  return f;
}

/// Full layout of a document with a clean validation report.
inline LayoutResult layout_document(const ChartDocument& doc, const LayoutConfig& cfg) {
  cfg.check();
  LayoutResult r;
  r.placedNodes = place_nodes(doc, cfg);
  r.placedEdges = route_edges(doc, r.placedNodes);
  Frame frame = compute_frame(doc.header.chart, cfg);
  r.viewBox = frame.viewBox;
  r.gridLines = std::move(frame.gridLines);
  r.axisTicks = std::move(frame.axisTicks);
  return r;
}

}  // namespace seqsee
