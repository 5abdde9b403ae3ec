#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "treebar/graph.hpp"

namespace treebar {

struct CorenessLabeling {
  std::vector<std::uint32_t> coreness;  // per dense vertex id
  std::uint32_t degeneracy = 0;
};

// Peeling with degree buckets (bin/pos/vert arrays): repeatedly remove a
// minimum-degree vertex and decrement its remaining neighbors. O(n + m).
template <class V>
CorenessLabeling compute_coreness(const Graph<V>& g) {
  const std::size_t n = g.n;
  std::vector<std::uint64_t> deg(n);
  std::uint64_t md = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    md = std::max(md, deg[v]);
  }

  std::vector<std::uint64_t> bin(md + 1, 0);
  for (std::size_t v = 0; v < n; ++v) ++bin[deg[v]];
  std::uint64_t start = 0;
  for (std::uint64_t d = 0; d <= md; ++d) {
    std::uint64_t cnt = bin[d];
    bin[d] = start;
    start += cnt;
  }
  std::vector<V> vert(n);
  std::vector<std::uint64_t> pos(n);
  for (std::size_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = static_cast<V>(v);
  }
  for (std::uint64_t d = md; d >= 1; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    V v = vert[i];
    for (V w : g.neighbors(v)) {
      if (deg[w] > deg[v]) {
        std::uint64_t dw = deg[w], pw = pos[w];
        std::uint64_t ph = bin[dw];
        V h = vert[ph];
        if (h != w) {
          vert[ph] = w;
          vert[pw] = h;
          pos[w] = ph;
          pos[h] = pw;
        }
        ++bin[dw];
        --deg[w];
      }
    }
  }

  CorenessLabeling lab;
  lab.coreness.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    lab.coreness[v] = static_cast<std::uint32_t>(deg[v]);
    lab.degeneracy = std::max(lab.degeneracy, lab.coreness[v]);
  }
  return lab;
}

template <class V>
std::uint32_t edge_coreness(const Graph<V>& g, const CorenessLabeling& lab, V u, V v) {
  if (u >= g.n || v >= g.n || !g.has_edge(u, v))
    throw std::invalid_argument("edge_coreness: not an edge of the graph");
  return std::min(lab.coreness[u], lab.coreness[v]);
}

template <class V>
struct OrderedEdgeStream {
  struct Entry {
    V u, v;
    std::uint32_t c;  // min(coreness(u), coreness(v))
  };
  std::vector<Entry> edges;  // non-increasing in c
};

// Stable counting sort into descending-coreness order. Canonical enumeration
// (u ascending, neighbors v > u ascending) is preserved within each bucket.
template <class V>
OrderedEdgeStream<V> sort_edges_desc(const Graph<V>& g, const CorenessLabeling& lab) {
  const std::uint32_t cg = lab.degeneracy;
  std::vector<std::uint64_t> count(cg + 1, 0);
  for (V u = 0; u < g.n; ++u)
    for (V v : g.neighbors(u)) {
      if (v <= u) continue;
      ++count[std::min(lab.coreness[u], lab.coreness[v])];
    }
  // offsets for descending c: bucket cg first
  std::vector<std::uint64_t> off(cg + 1, 0);
  std::uint64_t acc = 0;
  for (std::uint32_t c = cg; c > 0; --c) {
    off[c] = acc;
    acc += count[c];
  }
  OrderedEdgeStream<V> out;
  out.edges.resize(g.m);
  for (V u = 0; u < g.n; ++u)
    for (V v : g.neighbors(u)) {
      if (v <= u) continue;
      std::uint32_t c = std::min(lab.coreness[u], lab.coreness[v]);
      out.edges[off[c]++] = {u, v, c};
    }
  return out;
}

}  // namespace treebar
