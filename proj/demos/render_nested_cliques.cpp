// Builds a small graph with telescoping cores in memory, then runs the whole
// pipeline down to an SVG treebar map. Shows the library API without any
// input file.

#include <fstream>
#include <iostream>

#include "treebar/core_tree.hpp"
#include "treebar/graph.hpp"
#include "treebar/kcore.hpp"
#include "treebar/layout.hpp"
#include "treebar/scale.hpp"
#include "treebar/svg.hpp"
#include "treebar/tree_json.hpp"

int main(int argc, char** argv) {
  treebar::RawEdgeList raw;
  raw.origin = "<demo>";

  // K8 bridged to K5 bridged to a 12-cycle with pendant hairs
  std::uint64_t next = 0;
  auto clique = [&](std::uint64_t k) {
    std::uint64_t base = next;
    for (std::uint64_t i = 0; i < k; ++i)
      for (std::uint64_t j = i + 1; j < k; ++j)
        raw.edges.emplace_back(base + i, base + j);
    next += k;
    return base;
  };
  std::uint64_t a = clique(8);
  std::uint64_t b = clique(5);
  raw.edges.emplace_back(a, b);
  std::uint64_t ring = next;
  for (std::uint64_t i = 0; i < 12; ++i) {
    raw.edges.emplace_back(ring + i, ring + (i + 1) % 12);
    raw.edges.emplace_back(ring + i, next + 12 + i);  // pendant
  }
  next += 24;
  raw.edges.emplace_back(b, ring);

  auto g = treebar::preprocess<std::uint32_t>(raw);
  auto lab = treebar::compute_coreness(g);
  auto stream = treebar::sort_edges_desc(g, lab);
  auto forest = treebar::build_forest(g, stream);
  auto tree = treebar::finalize_tree(forest, lab);

  std::cout << "n = " << g.n << ", m = " << g.m
            << ", degeneracy = " << lab.degeneracy
            << ", tree nodes = " << tree.nodes.size() << "\n";
  std::cout << treebar::tree_to_json(tree) << "\n";

  auto t = treebar::auto_scale(tree, 30);
  auto collapsed = treebar::collapse(tree, t.t);
  auto layout = treebar::compute_layout(collapsed);
  auto svg = treebar::emit_svg(layout);

  const char* out = argc > 1 ? argv[1] : "nested_cliques.svg";
  std::ofstream f(out, std::ios::binary);
  f << svg.markup;
  std::cout << "wrote " << out << " (" << svg.width_px << "x" << svg.height_px
            << ", scale 1:" << t.t << ")\n";
  return 0;
}
