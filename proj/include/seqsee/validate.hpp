#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "document.hpp"
#include "format.hpp"

namespace seqsee {

enum class Severity { error, warning };

inline std::string_view to_string(Severity s) {
  return s == Severity::error ? "ERROR" : "WARNING";
}

struct Finding {
  Severity severity;
  std::string jsonPath;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> entries;

  std::size_t error_count() const {
    return static_cast<std::size_t>(std::ranges::count_if(
        entries, [](const Finding& f) { return f.severity == Severity::error; }));
  }
  std::size_t warning_count() const { return entries.size() - error_count(); }
  bool renderable() const { return error_count() == 0; }

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// `SEVERITY jsonPath: message`, the line format printed by the CLI.
inline std::string format_finding(const Finding& f) {
  return std::string(to_string(f.severity)) + " " + f.jsonPath + ": " + f.message;
}

namespace detail {

inline void report_extras(const Json& extras, const std::string& base,
                          std::vector<Finding>& out) {
  for (const auto& [key, value] : extras.items()) {
    out.push_back({Severity::warning, path::member(base, key), "unknown key (ignored)"});
  }
}

inline void check_range(const Range& r, const std::string& p, std::vector<Finding>& out) {
  if (!r.valid()) {
    out.push_back({Severity::error, p,
                   "min (" + std::to_string(r.min) + ") is greater than max (" +
                       std::to_string(r.max) + ")"});
  }
}

inline bool is_integral(double v) { return std::isfinite(v) && std::trunc(v) == v; }

}  // namespace detail

/// Collects every problem in `doc`. Order: top-level and header findings,
/// then nodes in document order, then edges in document order.
inline ValidationReport validate(const ChartDocument& doc) {
  ValidationReport report;
  auto& out = report.entries;

  detail::report_extras(doc.extras, "", out);
  detail::report_extras(doc.header.extras, "header", out);
  detail::report_extras(doc.header.metadata.extras, "header.metadata", out);
  detail::report_extras(doc.header.chart.extras, "header.chart", out);

  const ChartConfig& chart = doc.header.chart;
  detail::check_range(chart.width, "header.chart.width", out);
  detail::report_extras(chart.widthExtras, "header.chart.width", out);
  detail::check_range(chart.height, "header.chart.height", out);
  detail::report_extras(chart.heightExtras, "header.chart.height", out);

  for (const auto& [id, node] : doc.nodes) {
    std::string p = path::member("nodes", id.value);
    if (!std::isfinite(node.x) || !std::isfinite(node.y)) {
      out.push_back({Severity::error, p, "coordinates must be finite"});
      continue;
    }
    if (!node.absolute && (!detail::is_integral(node.x) || !detail::is_integral(node.y))) {
      out.push_back({Severity::warning, p,
                     "non-integer coordinates (" + format_number(node.x) + ", " +
                         format_number(node.y) + ") without \"absolute\": true"});
    }
    bool inside = node.x >= static_cast<double>(chart.width.min) &&
                  node.x <= static_cast<double>(chart.width.max) &&
                  node.y >= static_cast<double>(chart.height.min) &&
                  node.y <= static_cast<double>(chart.height.max);
    if (!inside) {
      out.push_back({Severity::warning, p,
                     "node at (" + format_number(node.x) + ", " + format_number(node.y) +
                         ") lies outside the chart bounds"});
    }
    detail::report_extras(node.extras, p, out);
  }

  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const EdgeSpec& edge = doc.edges[i];
    std::string p = path::index("edges", i);
    if (!doc.nodes.contains(edge.source)) {
      out.push_back({Severity::error, p + ".source",
                     "unknown node \"" + edge.source.value + "\""});
    }
    if (!doc.nodes.contains(edge.target)) {
      out.push_back({Severity::error, p + ".target",
                     "unknown node \"" + edge.target.value + "\""});
    }
    if (edge.source == edge.target) {
      out.push_back({Severity::error, p, "self-loop edge on \"" + edge.source.value + "\""});
    }
    detail::report_extras(edge.extras, p, out);
  }
  return report;
}

}  // namespace seqsee
