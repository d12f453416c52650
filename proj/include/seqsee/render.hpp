#pragma once

// LayoutResult -> SVG -> self-contained HTML page.
//
// Element contract consumed by the browser viewer:
//   <svg class="seqsee-chart theme-*"> carries data-x-min, data-x-max,
//     data-y-min, data-y-max, data-unit and data-margin (the chart->canvas transform).
//   <g id="chart-layer"> is the single group the viewer transforms for pan/zoom.
//   <circle class="node"> carries id="node-<encoded NodeId>", data-id (raw NodeId),
//     data-label (label source, $...$ intact), data-x and data-y (chart coordinates).
//   <line class="edge"> carries data-source and data-target.
//   <div id="seqsee-readout"> is the overlay the viewer writes hover text into.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "document.hpp"
#include "format.hpp"
#include "layout.hpp"

namespace seqsee {

enum class ThemeName { light, dark };

inline std::string_view to_string(ThemeName t) { return t == ThemeName::dark ? "dark" : "light"; }

struct Theme {
  std::string_view background;
  std::string_view foreground;
  std::string_view gridline;
  std::string_view axisText;
};

inline Theme theme_colors(ThemeName name) {
  if (name == ThemeName::dark) return {"#1e1e1e", "#e8e8e8", "#3a3a3a", "#a0a0a0"};
  return {"#ffffff", "#000000", "#dddddd", "#555555"};
}

struct RenderOptions {
  ThemeName theme = ThemeName::light;
  std::optional<std::string> titleOverride;
  LayoutConfig layout;
  // Viewer runtime embedded verbatim; required unless embedViewer is false.
  std::optional<std::string> viewerBundle;
  bool embedViewer = true;
};

/// Typesetting library loaded by every page; the page's only network references.
inline constexpr std::string_view kMathCdnHost = "https://cdn.jsdelivr.net";
inline constexpr std::string_view kMathStylesheet =
    "https://cdn.jsdelivr.net/npm/katex@0.16.11/dist/katex.min.css";
inline constexpr std::string_view kMathScript =
    "https://cdn.jsdelivr.net/npm/katex@0.16.11/dist/katex.min.js";

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Removes `$` math delimiters. Text with an odd number of `$` is returned
/// unchanged and, if `warnings` is given, a message is appended to it.
inline std::string strip_math_delimiters(std::string_view label,
                                         std::vector<std::string>* warnings = nullptr) {
  std::size_t dollars = 0;
  for (char c : label) dollars += c == '$';
  if (dollars % 2 != 0) {
    if (warnings) {
      warnings->push_back("unbalanced $ in \"" + std::string(label) + "\"; left unchanged");
    }
    return std::string(label);
  }
  std::string out;
  out.reserve(label.size());
  for (char c : label) {
    if (c != '$') out += c;
  }
  return out;
}

/// HTML id for a node. Bytes outside [A-Za-z0-9-] become _XX, so distinct
/// NodeIds always map to distinct element ids.
inline std::string node_element_id(const NodeId& id) {
  static constexpr char hex[] = "0123456789ABCDEF";
  std::string out = "node-";
  for (unsigned char c : id.value) {
    bool plain = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                 c == '-';
    if (plain) {
      out += static_cast<char>(c);
    } else {
      out += '_';
      out += hex[c >> 4];
      out += hex[c & 0xF];
    }
  }
  return out;
}

namespace detail {

inline std::string_view dash_pattern(LineStyle s) {
  switch (s) {
    case LineStyle::dashed: return "6 4";
    case LineStyle::dotted: return "1.5 3";
    case LineStyle::solid: break;
  }
  return {};
}

inline std::string attr(std::string_view name, std::string_view value) {
  std::string out = " ";
  out += name;
  out += "=\"";
  out += xml_escape(value);
  out += '"';
  return out;
}

inline std::string attr(std::string_view name, double value) {
  return attr(name, format_number(value));
}

}  // namespace detail

inline std::string render_svg(const LayoutResult& layout, const ChartDocument& doc,
                              const RenderOptions& opts) {
  const Theme theme = theme_colors(opts.theme);
  const ChartConfig& bounds = doc.header.chart;
  const ViewBox& vb = layout.viewBox;
  using detail::attr;

  std::string s;
  s += "<svg";
  s += attr("class", "seqsee-chart theme-" + std::string(to_string(opts.theme)));
  s += attr("viewBox", format_number(vb.x) + " " + format_number(vb.y) + " " +
                           format_number(vb.width) + " " + format_number(vb.height));
  s += attr("width", vb.width);
  s += attr("height", vb.height);
  s += attr("data-x-min", std::to_string(bounds.width.min));
  s += attr("data-x-max", std::to_string(bounds.width.max));
  s += attr("data-y-min", std::to_string(bounds.height.min));
  s += attr("data-y-max", std::to_string(bounds.height.max));
  s += attr("data-unit", opts.layout.unitSize);
  s += attr("data-margin", opts.layout.margin);
  s += ">\n";

  s += "<rect class=\"background\"";
  s += attr("x", vb.x) + attr("y", vb.y) + attr("width", vb.width) + attr("height", vb.height);
  s += attr("fill", theme.background);
  s += "/>\n";

  s += "<g id=\"chart-layer\" class=\"chart-layer\">\n";

  s += "<g class=\"grid\"" + attr("stroke", theme.gridline) + " stroke-width=\"1\">\n";
  for (const GridLine& g : layout.gridLines) {
    s += "<path class=\"gridline\"";
    s += attr("d", "M" + format_number(g.x1) + " " + format_number(g.y1) + " L" +
                       format_number(g.x2) + " " + format_number(g.y2));
    s += "/>\n";
  }
  s += "</g>\n";

  s += "<g class=\"axis-labels\"" + attr("fill", theme.axisText) +
       " font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
  for (const AxisTick& t : layout.axisTicks) {
    s += "<text";
    s += attr("class", t.axis == Axis::x ? "tick tick-x" : "tick tick-y");
    s += attr("x", t.x) + attr("y", t.y);
    s += ">" + std::to_string(t.value) + "</text>\n";
  }
  s += "</g>\n";

  s += "<g class=\"edges\" stroke-width=\"1.5\" stroke-linecap=\"round\">\n";
  for (const PlacedEdge& e : layout.placedEdges) {
    s += "<line class=\"edge\"";
    s += attr("data-source", e.spec->source.value);
    s += attr("data-target", e.spec->target.value);
    s += attr("x1", e.x1) + attr("y1", e.y1) + attr("x2", e.x2) + attr("y2", e.y2);
    s += attr("stroke", e.spec->color ? std::string_view(*e.spec->color) : theme.foreground);
    if (auto dash = detail::dash_pattern(e.spec->lineStyle); !dash.empty()) {
      s += attr("stroke-dasharray", dash);
    }
    s += "/>\n";
  }
  s += "</g>\n";

  s += "<g class=\"nodes\">\n";
  for (const PlacedNode& n : layout.placedNodes) {
    s += "<circle class=\"node\"";
    s += attr("id", node_element_id(n.id));
    s += attr("data-id", n.id.value);
    s += attr("data-label", n.spec->label);
    s += attr("data-x", n.spec->x) + attr("data-y", n.spec->y);
    s += attr("cx", n.cx) + attr("cy", n.cy) + attr("r", opts.layout.nodeRadius);
    s += attr("fill", n.spec->color ? std::string_view(*n.spec->color) : theme.foreground);
    s += "/>\n";
  }
  s += "</g>\n";

  s += "</g>\n</svg>\n";
  return s;
}

namespace detail {

inline std::string theme_css(const Theme& t) {
  std::ostringstream css;
  css << "body{margin:0;padding:16px;font-family:system-ui,sans-serif;"
      << "background:" << t.background << ";color:" << t.foreground << ";}\n"
      << "h1.chart-title{font-size:1.25rem;font-weight:600;margin:0 0 12px 0;}\n"
      << ".chart-container{position:relative;overflow:hidden;"
      << "border:1px solid " << t.gridline << ";display:inline-block;}\n"
      << "svg.seqsee-chart{display:block;max-width:100%;height:auto;"
      << "background:" << t.background << ";}\n"
      << ".readout{position:absolute;top:8px;right:8px;padding:4px 8px;"
      << "background:" << t.background << ";color:" << t.foreground << ";"
      << "border:1px solid " << t.gridline << ";font-size:0.9rem;pointer-events:none;}\n";
  return css.str();
}

inline bool contains_script_close(std::string_view text) {
  static constexpr std::string_view needle = "</script";
  if (text.size() < needle.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= text.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      char c = text[i + j];
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      if (c != needle[j]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

}  // namespace detail

/// Wraps `svgText` in a complete HTML page. Throws RenderError if the viewer
/// is requested but no usable bundle is supplied.
inline std::string emit_html(std::string_view svgText, const ChartDocument& doc,
                             const RenderOptions& opts,
                             std::vector<std::string>* warnings = nullptr) {
  if (opts.embedViewer) {
    if (!opts.viewerBundle || opts.viewerBundle->empty()) {
      throw RenderError(
          "viewer bundle is missing: build the viewer script and point SEQSEE_VIEWER_BUNDLE at "
          "it, or render with --no-viewer for a static page");
    }
    if (detail::contains_script_close(*opts.viewerBundle)) {
      throw RenderError("viewer bundle contains \"</script\" and cannot be embedded inline");
    }
  }

  const std::string& rawTitle = opts.titleOverride ? *opts.titleOverride : doc.header.metadata.title;
  const std::string pageTitle =
      opts.titleOverride ? *opts.titleOverride : strip_math_delimiters(rawTitle, warnings);
  const std::string themeName(to_string(opts.theme));

  std::string h;
  h += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  h += "<meta name=\"viewport\" content=\"width=device-width, initial-scale=1\">\n";
  h += "<title>" + xml_escape(pageTitle) + "</title>\n";
  h += "<link rel=\"stylesheet\" href=\"" + std::string(kMathStylesheet) + "\">\n";
  h += "<script defer src=\"" + std::string(kMathScript) + "\"></script>\n";
  h += "<style>\n" + detail::theme_css(theme_colors(opts.theme)) + "</style>\n";
  h += "</head>\n";
  h += "<body class=\"seqsee theme-" + themeName + "\">\n";
  h += "<h1 class=\"chart-title\"" + detail::attr("data-label", rawTitle) + ">" +
       xml_escape(rawTitle) + "</h1>\n";
  h += "<div class=\"chart-container\">\n";
  h += svgText;
  h += "<div id=\"seqsee-readout\" class=\"readout\" hidden></div>\n";
  h += "</div>\n";
  if (opts.embedViewer) {
    h += "<script id=\"seqsee-viewer\">\n" + *opts.viewerBundle;
    if (opts.viewerBundle->back() != '\n') h += '\n';
    h += "</script>\n";
  }
  h += "</body>\n</html>\n";
  return h;
}

/// layout + render_svg + emit_html for a document with a clean report.
inline std::string render_document(const ChartDocument& doc, const RenderOptions& opts,
                                   std::vector<std::string>* warnings = nullptr) {
  LayoutResult layout = layout_document(doc, opts.layout);
  return emit_html(render_svg(layout, doc, opts), doc, opts, warnings);
}

}  // namespace seqsee
