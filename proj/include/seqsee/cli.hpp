#pragma once

// Subcommand bodies for the `seqsee` tool, kept free of argument parsing so
// they can be driven directly from tests.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ingest.hpp"
#include "parse.hpp"
#include "render.hpp"
#include "validate.hpp"

namespace seqsee::cli {

enum class ExitCode : int {
  success = 0,
  validationErrors = 1,
  failure = 2,  // usage, parse or I/O problems
};

constexpr int to_int(ExitCode c) { return static_cast<int>(c); }

struct RenderArgs {
  std::filesystem::path input;
  std::optional<std::filesystem::path> output;
  bool dark = false;
  double scale = 1.0;
  bool noViewer = false;
  std::optional<std::string> title;
  std::optional<std::filesystem::path> viewerBundle;
};

struct ConvertArgs {
  std::filesystem::path nodesCsv;
  std::filesystem::path edgesCsv;
  std::filesystem::path output = "chart.json";
  std::string title;
};

/// Environment variable naming the viewer script to embed.
inline constexpr const char* kViewerBundleEnv = "SEQSEE_VIEWER_BUNDLE";

/// First existing candidate among $SEQSEE_VIEWER_BUNDLE, <exeDir>/viewer.js
/// and <exeDir>/../share/seqsee/viewer.js.
inline std::optional<std::filesystem::path> find_viewer_bundle(
    const std::filesystem::path& exeDir) {
  namespace fs = std::filesystem;
  if (const char* env = std::getenv(kViewerBundleEnv); env && *env) return fs::path(env);
  for (fs::path candidate : {exeDir / "viewer.js", exeDir / ".." / "share" / "seqsee" / "viewer.js"}) {
    std::error_code ec;
    if (fs::is_regular_file(candidate, ec)) return candidate;
  }
  return std::nullopt;
}

namespace detail {

inline std::optional<ChartDocument> load(const std::filesystem::path& path, std::ostream& err) {
  try {
    return parse_document(read_file(path));
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: " << path.string() << ": " << e.what() << "\n";
  }
  return std::nullopt;
}

}  // namespace detail

/// Prints one `SEVERITY jsonPath: message` line per finding to `out`.
inline ExitCode run_validate(const std::filesystem::path& input, std::ostream& out,
                             std::ostream& err) {
  auto doc = detail::load(input, err);
  if (!doc) return ExitCode::failure;
  ValidationReport report = validate(*doc);
  for (const Finding& f : report.entries) out << format_finding(f) << "\n";
  return report.renderable() ? ExitCode::success : ExitCode::validationErrors;
}

inline ExitCode run_render(const RenderArgs& args, std::ostream& out, std::ostream& err) {
  if (!std::isfinite(args.scale) || args.scale <= 0) {
    err << "error: --scale must be a positive number\n";
    return ExitCode::failure;
  }
  auto doc = detail::load(args.input, err);
  if (!doc) return ExitCode::failure;

  ValidationReport report = validate(*doc);
  for (const Finding& f : report.entries) err << format_finding(f) << "\n";
  if (!report.renderable()) {
    err << "error: " << args.input.string() << " has validation errors; nothing written\n";
    return ExitCode::validationErrors;
  }

  RenderOptions opts;
  opts.theme = args.dark ? ThemeName::dark : ThemeName::light;
  opts.titleOverride = args.title;
  opts.layout.unitSize *= args.scale;
  opts.embedViewer = !args.noViewer;

  std::filesystem::path output = args.output.value_or(
      std::filesystem::path(args.input).replace_extension(".html"));
  try {
    if (opts.embedViewer && args.viewerBundle) opts.viewerBundle = read_file(*args.viewerBundle);
    std::vector<std::string> warnings;
    std::string html = render_document(*doc, opts, &warnings);
    for (const auto& w : warnings) err << "WARNING " << w << "\n";
    write_text_atomic(output, html);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::failure;
  }
  out << "wrote " << output.string() << "\n";
  return ExitCode::success;
}

inline ExitCode run_convert(const ConvertArgs& args, std::ostream& out, std::ostream& err) {
  try {
    ConversionResult result =
        convert_csv(read_file(args.nodesCsv), read_file(args.edgesCsv), args.title);
    for (const auto& w : result.warnings) err << "WARNING " << w << "\n";
    ValidationReport report = validate(result.document);
    if (!report.renderable()) {
      for (const Finding& f : report.entries) err << format_finding(f) << "\n";
      return ExitCode::validationErrors;
    }
    write_json(result.document, args.output);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::failure;
  }
  out << "wrote " << args.output.string() << "\n";
  return ExitCode::success;
}

}  // namespace seqsee::cli
