#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "treebar/edge_list.hpp"

namespace treebar {

class PreprocessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph in CSR form. V is the dense vertex id type:
// uint32_t unless the vertex count requires more.
template <class V = std::uint32_t>
struct Graph {
  V n = 0;
  std::uint64_t m = 0;                  // undirected edge count
  std::vector<std::uint64_t> offsets;   // n + 1 entries
  std::vector<V> adj;                   // 2m entries, sorted per vertex
  std::vector<std::uint64_t> orig_ids;  // dense id -> original id, ascending

  std::uint64_t degree(V u) const { return offsets[u + 1] - offsets[u]; }
  std::span<const V> neighbors(V u) const {
    return {adj.data() + offsets[u], adj.data() + offsets[u + 1]};
  }
  bool has_edge(V u, V v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }
};

struct GraphStats {
  std::uint64_t n = 0;
  std::uint64_t m_raw = 0;
  std::uint64_t m_prime = 0;
  std::uint64_t max_degree = 0;
};

namespace detail {

using EdgePairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

// Normalized (min,max) pairs: self-loops dropped, duplicates removed.
inline EdgePairs normalize_edges(const RawEdgeList& raw) {
  EdgePairs pairs;
  pairs.reserve(raw.edges.size());
  for (const auto& [u, v] : raw.edges) {
    if (u == v) continue;
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

inline std::vector<std::uint64_t> collect_ids(const EdgePairs& pairs) {
  std::vector<std::uint64_t> ids;
  ids.reserve(pairs.size() * 2);
  for (const auto& [u, v] : pairs) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

template <class V>
Graph<V> assemble(const EdgePairs& pairs, std::vector<std::uint64_t> ids) {
  if (ids.size() > static_cast<std::uint64_t>(std::numeric_limits<V>::max()))
    throw std::invalid_argument("vertex count exceeds dense id type");

  Graph<V> g;
  g.n = static_cast<V>(ids.size());
  g.m = pairs.size();
  g.orig_ids = std::move(ids);

  auto dense = [&](std::uint64_t orig) -> V {
    auto it = std::lower_bound(g.orig_ids.begin(), g.orig_ids.end(), orig);
    return static_cast<V>(it - g.orig_ids.begin());
  };

  std::vector<std::uint64_t> deg(g.n, 0);
  std::vector<std::pair<V, V>> dense_pairs;
  dense_pairs.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    V du = dense(u), dv = dense(v);
    dense_pairs.emplace_back(du, dv);
    ++deg[du];
    ++deg[dv];
  }
  g.offsets.assign(static_cast<std::size_t>(g.n) + 1, 0);
  for (std::size_t u = 0; u < g.n; ++u) g.offsets[u + 1] = g.offsets[u] + deg[u];
  g.adj.resize(2 * g.m);
  std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  // dense_pairs is sorted with u < v, so each adjacency list fills in
  // ascending order: all (y,w) with y < w precede all (w,x) with x > w.
  for (const auto& [u, v] : dense_pairs) {
    g.adj[cursor[u]++] = v;
    g.adj[cursor[v]++] = u;
  }
  return g;
}

}  // namespace detail

template <class V = std::uint32_t>
Graph<V> preprocess(const RawEdgeList& raw) {
  auto pairs = detail::normalize_edges(raw);
  if (pairs.empty())
    throw PreprocessError("empty graph after preprocessing");
  return detail::assemble<V>(pairs, detail::collect_ids(pairs));
}

using GraphVariant = std::variant<Graph<std::uint32_t>, Graph<std::uint64_t>>;

// Dispatch on vertex count: 32-bit dense ids unless n >= 2^31.
inline GraphVariant preprocess_auto(const RawEdgeList& raw) {
  auto pairs = detail::normalize_edges(raw);
  if (pairs.empty())
    throw PreprocessError("empty graph after preprocessing");
  auto ids = detail::collect_ids(pairs);
  if (ids.size() < (1ull << 31))
    return detail::assemble<std::uint32_t>(pairs, std::move(ids));
  return detail::assemble<std::uint64_t>(pairs, std::move(ids));
}

template <class V>
GraphStats stats(const Graph<V>& g, const RawEdgeList& raw) {
  GraphStats s;
  s.n = g.n;
  s.m_raw = raw.edges.size();
  s.m_prime = g.m;
  for (V u = 0; u < g.n; ++u) s.max_degree = std::max(s.max_degree, g.degree(u));
  return s;
}

}  // namespace treebar
