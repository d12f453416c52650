#include <filesystem>
#include <iostream>
#include <system_error>

#include "CLI11.hpp"
#include "seqsee/cli.hpp"

namespace fs = std::filesystem;
using seqsee::cli::ExitCode;

namespace {

fs::path executable_dir(const char* argv0) {
  std::error_code ec;
  fs::path self = fs::read_symlink("/proc/self/exe", ec);
  if (ec) self = fs::absolute(argv0, ec);
  return self.parent_path();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validate, render and convert spectral sequence chart files"};
  app.require_subcommand(1);

  fs::path validateInput;
  auto* validate = app.add_subcommand("validate", "Check a chart file and list findings");
  validate->add_option("input", validateInput, "Chart JSON file")->required();

  seqsee::cli::RenderArgs render;
  std::string renderOutput;
  auto* renderCmd = app.add_subcommand("render", "Compile a chart file into a self-contained HTML page");
  renderCmd->add_option("input", render.input, "Chart JSON file")->required();
  renderCmd->add_option("-o,--output", renderOutput, "Output HTML path (default: input with .html)");
  renderCmd->add_flag("--dark", render.dark, "Use the dark theme");
  renderCmd->add_option("--scale", render.scale, "Multiply the grid unit size");
  renderCmd->add_flag("--no-viewer", render.noViewer, "Static page without the interactive viewer");
  renderCmd->add_option("--title", render.title, "Override the page title");

  seqsee::cli::ConvertArgs convert;
  auto* convertCmd = app.add_subcommand("convert", "Build a chart file from node and edge CSV tables");
  convertCmd->add_option("nodes", convert.nodesCsv, "Nodes CSV (id,x,y[,label])")->required();
  convertCmd->add_option("edges", convert.edgesCsv, "Edges CSV (source,target[,kind])")->required();
  convertCmd->add_option("-o,--output", convert.output, "Output JSON path");
  convertCmd->add_option("--title", convert.title, "Chart title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : seqsee::cli::to_int(ExitCode::failure);
  }

  ExitCode result = ExitCode::failure;
  if (*validate) {
    result = seqsee::cli::run_validate(validateInput, std::cout, std::cerr);
  } else if (*renderCmd) {
    if (!renderOutput.empty()) render.output = renderOutput;
    if (!render.noViewer) render.viewerBundle = seqsee::cli::find_viewer_bundle(executable_dir(argv[0]));
    result = seqsee::cli::run_render(render, std::cout, std::cerr);
  } else if (*convertCmd) {
    result = seqsee::cli::run_convert(convert, std::cout, std::cerr);
  }
  return seqsee::cli::to_int(result);
}
