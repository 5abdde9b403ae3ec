#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "treebar/pipeline.hpp"

namespace {

struct CommonArgs {
  std::string path;
  std::string comment_prefix = "%#";
  bool strict_undirected = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("file", args.path, "edge-list file")->required();
  cmd->add_option("--comment-prefix", args.comment_prefix,
                  "characters that start comment lines");
  cmd->add_flag("--strict-undirected", args.strict_undirected,
                "fail unless every (u,v) line has a matching (v,u) line");
}

treebar::PipelineOptions make_options(const CommonArgs& args) {
  treebar::PipelineOptions opt;
  opt.parse.comment_prefixes = args.comment_prefix;
  opt.strict_undirected = args.strict_undirected;
  return opt;
}

void write_artifact(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw treebar::IOError("cannot write file: " + output_path);
  out << text;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"core-connectivity trees and treebar-map SVGs for large graphs"};
  app.require_subcommand(1);

  CommonArgs analyze_args;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand(
      "analyze", "graph statistics, degeneracy, and tree size");
  add_common(analyze, analyze_args);
  analyze->add_flag("--json", analyze_json, "report as JSON");

  CommonArgs coreness_args;
  std::string coreness_output;
  auto* coreness =
      app.add_subcommand("coreness", "per-vertex coreness values");
  add_common(coreness, coreness_args);
  coreness->add_option("--output", coreness_output, "write to file");

  CommonArgs tree_args;
  std::string tree_output;
  std::uint32_t tree_scale = 0;
  auto* tree = app.add_subcommand("tree", "core-connectivity tree as JSON");
  add_common(tree, tree_args);
  tree->add_option("--scale", tree_scale, "collapse layers of this width")
      ->check(CLI::PositiveNumber);
  tree->add_option("--output", tree_output, "write to file");

  CommonArgs render_args;
  std::string render_output;
  std::string dump_layout_path;
  std::uint32_t render_scale = 0;
  std::uint32_t target_bars = 30;
  bool render_json = false;
  auto* render = app.add_subcommand("render", "treebar-map SVG");
  add_common(render, render_args);
  auto* scale_opt =
      render->add_option("--scale", render_scale, "coreness units per contour")
          ->check(CLI::PositiveNumber);
  auto* target_opt = render->add_option(
      "--target-bars", target_bars, "auto-pick the smallest scale fitting this");
  scale_opt->excludes(target_opt);
  target_opt->excludes(scale_opt);
  render->add_option("--output", render_output, "write SVG to file");
  render->add_option("--dump-layout", dump_layout_path,
                     "also write layout geometry JSON to file");
  render->add_flag("--json", render_json, "report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, usage errors with 2
  }

  if (analyze->parsed()) {
    auto res = treebar::run_core_pipeline(analyze_args.path,
                                          make_options(analyze_args));
    if (analyze_json)
      std::cout << res.report.to_json().dump(2) << "\n";
    else
      std::cout << res.report.to_text();
    return 0;
  }

  if (coreness->parsed()) {
    auto opt = make_options(coreness_args);
    opt.want_coreness_pairs = true;
    auto res = treebar::run_core_pipeline(coreness_args.path, opt);
    std::string out;
    out.reserve(res.coreness_pairs.size() * 12);
    for (const auto& [orig, c] : res.coreness_pairs)
      out += std::to_string(orig) + "\t" + std::to_string(c) + "\n";
    out += "# degeneracy = " + std::to_string(res.report.degeneracy) + "\n";
    write_artifact(out, coreness_output);
    std::cerr << res.report.to_text();
    return 0;
  }

  if (tree->parsed()) {
    auto res =
        treebar::run_core_pipeline(tree_args.path, make_options(tree_args));
    treebar::CoreTree t = tree_scale > 1
                              ? treebar::collapse(res.tree, tree_scale)
                              : std::move(res.tree);
    write_artifact(treebar::tree_to_json(t) + "\n", tree_output);
    std::cerr << res.report.to_text();
    return 0;
  }

  auto res = treebar::render_treebar(render_args.path, make_options(render_args),
                                     render_scale, target_bars);
  write_artifact(res.svg.markup, render_output);
  if (!dump_layout_path.empty()) {
    std::ofstream lout(dump_layout_path, std::ios::binary);
    if (!lout)
      throw treebar::IOError("cannot write file: " + dump_layout_path);
    lout << treebar::layout_to_json(res.layout).dump(2) << "\n";
  }
  if (render_json)
    std::cerr << res.report.to_json().dump(2) << "\n";
  else
    std::cerr << res.report.to_text();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const treebar::IOError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const treebar::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const treebar::PreprocessError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const treebar::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
