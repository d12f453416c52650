#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "seqsee/layout.hpp"
#include "seqsee/parse.hpp"
#include "test_support.hpp"

using namespace seqsee;
using seqsee::testing::DocumentGenerator;
using seqsee::testing::kExampleJson;

namespace {

ChartConfig bounds(std::int64_t x0, std::int64_t x1, std::int64_t y0, std::int64_t y1) {
  ChartConfig c;
  c.width = {x0, x1};
  c.height = {y0, y1};
  return c;
}

ChartDocument doc_with(ChartConfig chart,
                       std::initializer_list<std::pair<const char*, NodeSpec>> nodes) {
  ChartDocument doc;
  doc.header.chart = chart;
  for (const auto& [id, spec] : nodes) doc.nodes.insert(NodeId(id), spec);
  return doc;
}

}  // namespace

TEST(ChartToCanvas, HandEvaluatedCorners) {
  LayoutConfig cfg;
  auto b = bounds(0, 5, 0, 5);
  EXPECT_EQ(chart_to_canvas(0, 0, b, cfg), (CanvasPoint{40, 340}));
  EXPECT_EQ(chart_to_canvas(5, 5, b, cfg), (CanvasPoint{340, 40}));

  auto neg = bounds(-3, 4, -2, 6);
  EXPECT_EQ(chart_to_canvas(-3, 6, neg, cfg), (CanvasPoint{cfg.margin, cfg.margin}));
}

TEST(ChartToCanvas, Monotone) {
  LayoutConfig cfg{.unitSize = 37.5, .margin = 12.25};
  auto b = bounds(-4, 4, -4, 4);
  for (double v = -4; v < 4; v += 0.25) {
    EXPECT_LT(chart_to_canvas(v, 0, b, cfg).cx, chart_to_canvas(v + 0.25, 0, b, cfg).cx);
    EXPECT_GT(chart_to_canvas(0, v, b, cfg).cy, chart_to_canvas(0, v + 0.25, b, cfg).cy);
  }
}

TEST(PlaceNodes, SingleNodeIsAtCellCenter) {
  auto doc = doc_with(bounds(0, 5, 0, 5), {{"a", {.x = 0, .y = 0}}});
  auto placed = place_nodes(doc, {});
  ASSERT_EQ(placed.size(), 1u);
  EXPECT_EQ(placed[0].cx, 40);
  EXPECT_EQ(placed[0].cy, 340);
}

TEST(PlaceNodes, PairAtSameBidegreeSplitsBySpacing) {
  auto doc = doc_with(bounds(0, 5, 0, 5), {{"a", {.x = 1, .y = 1}}, {"b", {.x = 1, .y = 1}}});
  auto placed = place_nodes(doc, {});
  CanvasPoint cell = chart_to_canvas(1, 1, doc.header.chart, {});
  EXPECT_EQ(placed[0].cx - cell.cx, -6);
  EXPECT_EQ(placed[1].cx - cell.cx, 6);
  EXPECT_EQ(placed[0].cy, cell.cy);
  EXPECT_EQ(placed[1].cy, cell.cy);
}

TEST(PlaceNodes, TripleAtSameBidegree) {
  auto doc = doc_with(bounds(0, 5, 0, 5),
                      {{"a", {.x = 2, .y = 3}}, {"b", {.x = 2, .y = 3}}, {"c", {.x = 2, .y = 3}}});
  auto placed = place_nodes(doc, {});
  CanvasPoint cell = chart_to_canvas(2, 3, doc.header.chart, {});
  EXPECT_EQ(placed[0].cx - cell.cx, -12);
  EXPECT_EQ(placed[1].cx - cell.cx, 0);
  EXPECT_EQ(placed[2].cx - cell.cx, 12);
}

// Worked by hand: bounds [-1,3]x[0,2], unit 50, margin 20, spacing 10.
TEST(PlaceNodes, HandComputedTable) {
  auto doc = doc_with(bounds(-1, 3, 0, 2), {{"a", {.x = 0, .y = 0}},
                                            {"b", {.x = 0, .y = 0}},
                                            {"c", {.x = 2, .y = 1}},
                                            {"d", {.x = 0, .y = 0}},
                                            {"e", {.x = 1.5, .y = 0.5, .absolute = true}}});
  LayoutConfig cfg{.unitSize = 50, .margin = 20, .nodeRadius = 4, .collisionSpacing = 10};
  auto placed = place_nodes(doc, cfg);
  const double expected[][2] = {{60, 120}, {70, 120}, {170, 70}, {80, 120}, {145, 95}};
  ASSERT_EQ(placed.size(), 5u);
  for (std::size_t i = 0; i < placed.size(); ++i) {
    EXPECT_EQ(placed[i].cx, expected[i][0]) << placed[i].id.value;
    EXPECT_EQ(placed[i].cy, expected[i][1]) << placed[i].id.value;
  }
}

TEST(PlaceNodes, AbsoluteNodesAreNotOffset) {
  auto doc = doc_with(bounds(0, 2, 0, 2),
                      {{"a", {.x = 1, .y = 1, .absolute = true}}, {"b", {.x = 1, .y = 1}}});
  auto placed = place_nodes(doc, {});
  CanvasPoint cell = chart_to_canvas(1, 1, doc.header.chart, {});
  EXPECT_EQ(placed[0].cx, cell.cx);
  EXPECT_EQ(placed[1].cx, cell.cx);
}

TEST(RouteEdges, SchemaExampleIsVertical) {
  ChartDocument doc = parse_document(kExampleJson);
  auto placed = place_nodes(doc, {});
  auto edges = route_edges(doc, placed);
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0].x1, edges[0].x2);
  EXPECT_EQ(edges[0].y1, 340);
  EXPECT_EQ(edges[0].y2, 280);
}

TEST(RouteEdges, AttachToOffsetCenters) {
  auto doc = doc_with(bounds(0, 5, 0, 5), {{"a", {.x = 1, .y = 1}}, {"b", {.x = 1, .y = 1}},
                                           {"c", {.x = 2, .y = 2}}});
  doc.edges.push_back({.source = NodeId("a"), .target = NodeId("c")});
  doc.edges.push_back({.source = NodeId("c"), .target = NodeId("b")});
  auto edges = route_edges(doc, place_nodes(doc, {}));
  // Cell (1,1) is at (100, 280); the pair sits at 94 and 106. Cell (2,2) is (160, 220).
  EXPECT_EQ(edges[0].x1, 94);
  EXPECT_EQ(edges[0].y1, 280);
  EXPECT_EQ(edges[0].x2, 160);
  EXPECT_EQ(edges[0].y2, 220);
  EXPECT_EQ(edges[1].x2, 106);
}

TEST(RouteEdges, NoEdges) {
  auto doc = doc_with(bounds(0, 1, 0, 1), {{"a", {.x = 0, .y = 0}}});
  EXPECT_TRUE(route_edges(doc, place_nodes(doc, {})).empty());
}

TEST(RouteEdges, UnplacedEndpointIsALogicError) {
  auto doc = doc_with(bounds(0, 1, 0, 1), {{"a", {.x = 0, .y = 0}}});
  doc.edges.push_back({.source = NodeId("a"), .target = NodeId("zz")});
  EXPECT_THROW(route_edges(doc, place_nodes(doc, {})), std::logic_error);
}

TEST(ComputeFrame, FiveByFive) {
  Frame f = compute_frame(bounds(0, 5, 0, 5), {});
  EXPECT_EQ(f.viewBox, (ViewBox{0, 0, 380, 380}));
  int vertical = 0, horizontal = 0;
  for (const GridLine& g : f.gridLines) (g.axis == Axis::x ? vertical : horizontal)++;
  EXPECT_EQ(vertical, 6);
  EXPECT_EQ(horizontal, 6);
  EXPECT_EQ(f.axisTicks.size(), 12u);
}

TEST(ComputeFrame, DegenerateSingleCell) {
  Frame f = compute_frame(bounds(0, 0, 0, 0), {});
  EXPECT_EQ(f.viewBox, (ViewBox{0, 0, 80, 80}));
  EXPECT_EQ(f.gridLines.size(), 2u);
}

TEST(ComputeFrame, NegativeRangeLabels) {
  Frame f = compute_frame(bounds(-2, 2, 0, 3), {});
  std::vector<std::int64_t> xs;
  for (const AxisTick& t : f.axisTicks) {
    if (t.axis == Axis::x) xs.push_back(t.value);
  }
  EXPECT_EQ(xs, (std::vector<std::int64_t>{-2, -1, 0, 1, 2}));
  // Tick labels sit in the margin band, outside the framed region.
  for (const AxisTick& t : f.axisTicks) {
    if (t.axis == Axis::x) {
      EXPECT_GT(t.y, 40 + 3 * 60);
    } else {
      EXPECT_LT(t.x, 40);
    }
  }
}

TEST(LayoutConfig, RejectsOverlappingSpacing) {
  EXPECT_THROW((LayoutConfig{.nodeRadius = 7, .collisionSpacing = 12}.check()),
               std::invalid_argument);
  EXPECT_THROW((LayoutConfig{.unitSize = 0}.check()), std::invalid_argument);
  EXPECT_NO_THROW(LayoutConfig{}.check());
}

// --- properties over generated documents ---

TEST(LayoutProperty, CollisionGroupsAreCenteredAndEvenlySpaced) {
  DocumentGenerator gen(99);
  const LayoutConfig cfg;
  for (int round = 0; round < 100; ++round) {
    ChartDocument doc = gen.next();
    auto placed = place_nodes(doc, cfg);
    std::map<std::pair<double, double>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
      const NodeSpec& n = doc.nodes[i].spec;
      if (!n.absolute) groups[{n.x, n.y}].push_back(i);
    }
    for (const auto& [coord, members] : groups) {
      CanvasPoint cell = chart_to_canvas(coord.first, coord.second, doc.header.chart, cfg);
      double sum = 0;
      for (std::size_t slot = 0; slot < members.size(); ++slot) {
        const PlacedNode& p = placed[members[slot]];
        sum += p.cx;
        EXPECT_EQ(p.cy, cell.cy);
        if (slot > 0) {
          EXPECT_EQ(p.cx - placed[members[slot - 1]].cx, cfg.collisionSpacing);
        }
      }
      EXPECT_EQ(sum / static_cast<double>(members.size()), cell.cx);
    }
  }
}

TEST(LayoutProperty, EdgeEndpointsCoincideWithNodeCenters) {
  DocumentGenerator gen(5);
  for (int round = 0; round < 100; ++round) {
    ChartDocument doc = gen.next();
    LayoutResult r = layout_document(doc, {});
    for (const PlacedEdge& e : r.placedEdges) {
      bool start = false, end = false;
      for (const PlacedNode& n : r.placedNodes) {
        start = start || (n.cx == e.x1 && n.cy == e.y1);
        end = end || (n.cx == e.x2 && n.cy == e.y2);
      }
      EXPECT_TRUE(start && end);
    }
  }
}

TEST(LayoutProperty, DeterministicAndFinite) {
  DocumentGenerator gen(11);
  for (int round = 0; round < 50; ++round) {
    ChartDocument doc = gen.next();
    LayoutResult a = layout_document(doc, {});
    LayoutResult b = layout_document(doc, {});
    ASSERT_EQ(a.placedNodes.size(), b.placedNodes.size());
    for (std::size_t i = 0; i < a.placedNodes.size(); ++i) {
      EXPECT_EQ(a.placedNodes[i].cx, b.placedNodes[i].cx);
      EXPECT_EQ(a.placedNodes[i].cy, b.placedNodes[i].cy);
      EXPECT_TRUE(std::isfinite(a.placedNodes[i].cx) && std::isfinite(a.placedNodes[i].cy));
    }
    EXPECT_EQ(a.viewBox, b.viewBox);
    // The view box encloses the framed region plus margins.
    const auto& c = doc.header.chart;
    EXPECT_GE(a.viewBox.width, 2 * 40 + static_cast<double>(c.width.max - c.width.min) * 60);
    EXPECT_GE(a.viewBox.height, 2 * 40 + static_cast<double>(c.height.max - c.height.min) * 60);
  }
}
