#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "treebar/core_tree.hpp"
#include "treebar/edge_list.hpp"
#include "treebar/graph.hpp"
#include "treebar/kcore.hpp"
#include "treebar/layout.hpp"
#include "treebar/scale.hpp"
#include "treebar/svg.hpp"
#include "treebar/tree_json.hpp"

namespace treebar {

struct RunReport {
  GraphStats stats;
  std::uint32_t degeneracy = 0;
  std::uint64_t non_leaf_nodes = 0;
  std::uint32_t chosen_t = 0;  // 0 when no scaling phase ran
  std::vector<std::pair<std::string, double>> timings;  // seconds per phase
  double total_seconds = 0;

  std::string to_text() const {
    auto line = [](const std::string& k, const std::string& v) {
      std::string s = k;
      s.append(k.size() < 16 ? 16 - k.size() : 1, ' ');
      return s + v + "\n";
    };
    std::string out;
    out += line("n", std::to_string(stats.n));
    out += line("m_raw", std::to_string(stats.m_raw));
    out += line("m_prime", std::to_string(stats.m_prime));
    out += line("max_degree", std::to_string(stats.max_degree));
    out += line("degeneracy", std::to_string(degeneracy));
    out += line("non_leaf_nodes", std::to_string(non_leaf_nodes));
    if (chosen_t > 0) out += line("chosen_t", std::to_string(chosen_t));
    char buf[32];
    for (const auto& [name, sec] : timings) {
      std::snprintf(buf, sizeof buf, "%.6f", sec);
      out += line("time_" + name + "_s", buf);
    }
    std::snprintf(buf, sizeof buf, "%.6f", total_seconds);
    out += line("time_total_s", buf);
    return out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["n"] = stats.n;
    j["m_raw"] = stats.m_raw;
    j["m_prime"] = stats.m_prime;
    j["max_degree"] = stats.max_degree;
    j["degeneracy"] = degeneracy;
    j["non_leaf_nodes"] = non_leaf_nodes;
    if (chosen_t > 0) j["chosen_t"] = chosen_t;
    nlohmann::ordered_json tm;
    for (const auto& [name, sec] : timings) tm[name] = sec;
    j["timings"] = std::move(tm);
    j["total_seconds"] = total_seconds;
    return j;
  }
};

struct PipelineResult {
  RunReport report;
  CoreTree tree;
  // (original id, coreness) per vertex, filled when requested
  std::vector<std::pair<std::uint64_t, std::uint32_t>> coreness_pairs;
};

struct PipelineOptions {
  ParseOptions parse;
  bool strict_undirected = false;
  bool strip_leaves = true;
  bool want_coreness_pairs = false;
  std::uint64_t mmap_threshold = kDefaultMmapThreshold;
};

namespace detail {

class PhaseTimer {
 public:
  PhaseTimer() : start_(clock::now()), mark_(start_) {}
  double lap() {
    auto now = clock::now();
    double s = std::chrono::duration<double>(now - mark_).count();
    mark_ = now;
    return s;
  }
  double total() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_, mark_;
};

template <class V>
void core_phases(const Graph<V>& g, const RawEdgeList& raw, PipelineResult& res,
                 PhaseTimer& timer, bool strip, bool want_pairs) {
  res.report.stats = stats(g, raw);

  auto lab = compute_coreness(g);
  auto stream = sort_edges_desc(g, lab);
  res.report.degeneracy = lab.degeneracy;
  res.report.timings.emplace_back("coreness", timer.lap());

  auto forest = build_forest(g, stream);
  stream.edges.clear();
  stream.edges.shrink_to_fit();
  res.tree = finalize_tree(forest, lab, strip);
  res.report.non_leaf_nodes = res.tree.core_node_count();
  res.report.timings.emplace_back("tree", timer.lap());

  if (want_pairs) {
    res.coreness_pairs.reserve(g.n);
    for (V v = 0; v < g.n; ++v)
      res.coreness_pairs.emplace_back(g.orig_ids[v], lab.coreness[v]);
  }
}

}  // namespace detail

inline PipelineResult run_core_pipeline(const std::string& path,
                                        const PipelineOptions& opt = {}) {
  detail::PhaseTimer timer;
  PipelineResult res;

  auto raw = parse_edge_list_file(path, opt.parse, opt.mmap_threshold);
  if (opt.strict_undirected) check_strict_undirected(raw);
  auto gv = preprocess_auto(raw);
  res.report.timings.emplace_back("ingest", timer.lap());

  std::visit(
      [&](const auto& g) {
        detail::core_phases(g, raw, res, timer, opt.strip_leaves,
                            opt.want_coreness_pairs);
      },
      gv);
  res.report.total_seconds = timer.total();
  return res;
}

inline nlohmann::ordered_json layout_to_json(const TreebarLayout& lay) {
  nlohmann::ordered_json j;
  j["total_width"] = lay.total_width;
  j["bar_axis_max"] = lay.bar_axis_max;
  j["max_depth"] = lay.max_depth;
  auto rects = nlohmann::ordered_json::array();
  for (const auto& r : lay.rects) {
    nlohmann::ordered_json rj;
    rj["node"] = r.node;
    rj["x"] = r.x;
    rj["y"] = r.y;
    rj["width"] = r.width;
    rj["height"] = r.height;
    rj["depth"] = r.depth;
    rj["fill"] = r.fill;
    rects.push_back(std::move(rj));
  }
  j["rects"] = std::move(rects);
  auto squares = nlohmann::ordered_json::array();
  for (const auto& sq : lay.squares) {
    nlohmann::ordered_json sj;
    sj["node"] = sq.node;
    sj["rect_index"] = sq.rect_index;
    sj["x"] = sq.x;
    sj["width"] = sq.width;
    sj["label"] = sq.label;
    sj["bar_height"] = sq.bar_height;
    sj["bar_set_size"] = sq.bar_set_size;
    sj["fill"] = sq.fill;
    sj["depth"] = sq.depth;
    squares.push_back(std::move(sj));
  }
  j["squares"] = std::move(squares);
  return j;
}

struct RenderResult {
  RunReport report;
  SvgDocument svg;
  CoreTree collapsed;
  TreebarLayout layout;
};

// Full pipeline: ingest through SVG. `scale` of 0 means auto-select the
// smallest t whose bar count fits target_bars.
inline RenderResult render_treebar(const std::string& path,
                                   const PipelineOptions& opt = {},
                                   std::uint32_t scale = 0,
                                   std::uint32_t target_bars = 30,
                                   const RenderConfig& cfg = {}) {
  detail::PhaseTimer timer;
  PipelineOptions core_opt = opt;
  core_opt.strip_leaves = true;
  auto res = run_core_pipeline(path, core_opt);

  RenderResult out;
  out.report = std::move(res.report);

  detail::PhaseTimer rest;
  std::uint32_t t = scale > 0 ? scale : auto_scale(res.tree, target_bars).t;
  out.collapsed = collapse(res.tree, t);
  out.report.chosen_t = t;
  out.report.timings.emplace_back("collapse", rest.lap());

  out.layout = compute_layout(out.collapsed, cfg);
  out.report.timings.emplace_back("layout", rest.lap());

  out.svg = emit_svg(out.layout, cfg);
  out.report.timings.emplace_back("render", rest.lap());
  out.report.total_seconds += rest.total();
  return out;
}

}  // namespace treebar
