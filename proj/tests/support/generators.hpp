#pragma once

// Deterministic input builders shared by the unit and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

#include "treebar/core_tree.hpp"
#include "treebar/edge_list.hpp"
#include "treebar/graph.hpp"

namespace gen {

using Pairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

inline treebar::Graph<std::uint32_t> build(const Pairs& pairs) {
  treebar::RawEdgeList raw;
  raw.edges = pairs;
  return treebar::preprocess<std::uint32_t>(raw);
}

inline Pairs clique_pairs(std::uint64_t k, std::uint64_t base = 0) {
  Pairs p;
  for (std::uint64_t i = 0; i < k; ++i)
    for (std::uint64_t j = i + 1; j < k; ++j) p.emplace_back(base + i, base + j);
  return p;
}

inline Pairs path_pairs(std::uint64_t k, std::uint64_t base = 0) {
  Pairs p;
  for (std::uint64_t i = 0; i + 1 < k; ++i) p.emplace_back(base + i, base + i + 1);
  return p;
}

inline Pairs cycle_pairs(std::uint64_t k, std::uint64_t base = 0) {
  Pairs p = path_pairs(k, base);
  if (k >= 3) p.emplace_back(base + k - 1, base);
  return p;
}

inline Pairs star_pairs(std::uint64_t leaves, std::uint64_t base = 0) {
  Pairs p;
  for (std::uint64_t i = 1; i <= leaves; ++i) p.emplace_back(base, base + i);
  return p;
}

inline void append(Pairs& dst, const Pairs& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// Each edge independently with probability p (vertex ids 0..n-1, may leave
// some ids unused).
inline Pairs gilbert_pairs(std::uint32_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Pairs pairs;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (coin(rng) < p) pairs.emplace_back(i, j);
  return pairs;
}

// Cliques of the given sizes, consecutive cliques joined by one bridge edge.
// Produces a connected graph with one dense core per clique size.
inline Pairs bridged_cliques_pairs(const std::vector<std::uint64_t>& sizes) {
  Pairs pairs;
  std::uint64_t base = 0, prev_last = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    append(pairs, clique_pairs(sizes[i], base));
    if (i > 0) pairs.emplace_back(prev_last, base);
    prev_last = base + sizes[i] - 1;
    base += sizes[i];
  }
  return pairs;
}

// Cliques joined consecutively by fresh 2-vertex paths: the cliques stay
// separate deep cores inside a common 2-core shell.
inline Pairs path_bridged_cliques_pairs(const std::vector<std::uint64_t>& sizes) {
  Pairs pairs;
  std::uint64_t base = 0, prev_last = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    append(pairs, clique_pairs(sizes[i], base));
    std::uint64_t clique_last = base + sizes[i] - 1;
    base += sizes[i];
    if (i > 0) {
      pairs.emplace_back(prev_last, base);
      pairs.emplace_back(base, base + 1);
      pairs.emplace_back(base + 1, clique_last - sizes[i] + 1);
      base += 2;
    }
    prev_last = clique_last;
  }
  return pairs;
}

inline Pairs shifted(Pairs pairs, std::uint64_t delta) {
  for (auto& [u, v] : pairs) {
    u += delta;
    v += delta;
  }
  return pairs;
}

// A clique with a path hanging off each clique vertex: nested shells with
// plenty of degree-1 fringe.
inline Pairs clique_with_hairs_pairs(std::uint64_t k, std::uint64_t hair_len) {
  Pairs pairs = clique_pairs(k);
  std::uint64_t next = k;
  for (std::uint64_t v = 0; v < k; ++v) {
    std::uint64_t prev = v;
    for (std::uint64_t s = 0; s < hair_len; ++s) {
      pairs.emplace_back(prev, next);
      prev = next++;
    }
  }
  return pairs;
}

// Exactly m distinct edges on vertex ids 0..n-1 via rejection sampling.
inline Pairs random_distinct_pairs(std::uint64_t n, std::uint64_t m,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  Pairs pairs;
  pairs.reserve(m);
  // connect first so no vertex is isolated, then add random extras
  for (std::uint64_t v = 1; v < n && pairs.size() < m; ++v) {
    std::uint64_t u = pick(rng) % v;
    pairs.emplace_back(u, v);
    seen.insert(u * n + v);
  }
  while (pairs.size() < m) {
    std::uint64_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (seen.insert(a * n + b).second) pairs.emplace_back(a, b);
  }
  return pairs;
}

// ---- synthetic trees ------------------------------------------------------

namespace detail {

inline void finish_tree(treebar::CoreTree& t) {
  for (std::size_t i = t.nodes.size(); i-- > 0;) {
    auto& nd = t.nodes[i];
    std::uint32_t h = 0;
    std::uint64_t sum = 0;
    for (auto ch : nd.children) {
      h = std::max(h, t.nodes[ch].height);
      sum += t.nodes[ch].n;
    }
    nd.height = nd.children.empty() ? 1 : h + 1;
    nd.n = sum + nd.n_minus;
    t.degeneracy = std::max(t.degeneracy, static_cast<std::uint32_t>(nd.max_c));
  }
  treebar::sort_children(t);
}

inline std::uint32_t grow(treebar::CoreTree& t, std::mt19937_64& rng,
                          std::int32_t min_c, std::uint32_t depth_left) {
  auto id = static_cast<std::uint32_t>(t.nodes.size());
  t.nodes.emplace_back();
  std::uniform_int_distribution<std::int32_t> span(0, 3);
  std::uniform_int_distribution<std::uint64_t> excl(1, 900);
  t.nodes[id].min_c = min_c;
  t.nodes[id].max_c = min_c + span(rng);
  t.nodes[id].n_minus = excl(rng);
  std::uniform_int_distribution<std::uint32_t> kid_count(0, depth_left == 0 ? 0 : 3);
  std::uint32_t kids = kid_count(rng);
  std::int32_t child_min = t.nodes[id].max_c + 1;
  for (std::uint32_t i = 0; i < kids; ++i) {
    auto ch = grow(t, rng, child_min, depth_left - 1);
    t.nodes[id].children.push_back(ch);
  }
  auto& nd = t.nodes[id];
  if (nd.n_minus > 0) {
    // exclusive vertices of an uncollapsed node always sit at its top level
    nd.actual_min = nd.max_c;
    nd.actual_max = nd.max_c;
  }
  return id;
}

}  // namespace detail

// A structurally valid stripped tree: ranges chain downward, every node keeps
// at least one exclusive vertex, roughly one in five gets the bare {0,0}
// root that a disconnected graph produces.
inline treebar::CoreTree random_tree(std::uint64_t seed, std::uint32_t max_depth = 5) {
  std::mt19937_64 rng(seed);
  treebar::CoreTree t;
  t.leaf_stripped = true;
  if (seed % 5 == 1) {
    t.nodes.emplace_back();
    t.nodes[0].min_c = 0;
    t.nodes[0].max_c = 0;
    t.nodes[0].n_minus = 0;
    std::uniform_int_distribution<std::uint32_t> kid_count(2, 4);
    std::uint32_t kids = kid_count(rng);
    for (std::uint32_t i = 0; i < kids; ++i) {
      auto ch = detail::grow(t, rng, 1, max_depth - 1);  // may reallocate nodes
      t.nodes[0].children.push_back(ch);
    }
  } else {
    detail::grow(t, rng, 0, max_depth);
  }
  t.root = 0;
  detail::finish_tree(t);
  return t;
}

// Long spine with one childless tooth per spine step; ~2*teeth+1 nodes and
// degeneracy ~= teeth, which makes scale selection genuinely coarse-grained.
inline treebar::CoreTree comb_tree(std::uint32_t teeth) {
  constexpr std::uint32_t none = 0xffffffff;
  treebar::CoreTree t;
  t.leaf_stripped = true;
  std::uint32_t spine = none;
  for (std::uint32_t i = 0; i <= teeth; ++i) {
    auto id = static_cast<std::uint32_t>(t.nodes.size());
    t.nodes.emplace_back();
    auto& nd = t.nodes[id];
    nd.min_c = static_cast<std::int32_t>(i);
    nd.max_c = nd.min_c;
    nd.n_minus = 1 + i % 7;
    nd.actual_min = nd.min_c;
    nd.actual_max = nd.max_c;
    if (spine != none) t.nodes[spine].children.push_back(id);
    if (i > 0) {
      auto tooth = static_cast<std::uint32_t>(t.nodes.size());
      t.nodes.emplace_back();
      auto& td = t.nodes[tooth];
      td.min_c = static_cast<std::int32_t>(i);
      td.max_c = td.min_c;
      td.n_minus = 1 + (i * 3) % 5;
      td.actual_min = td.min_c;
      td.actual_max = td.max_c;
      if (spine != none) t.nodes[spine].children.push_back(tooth);
    }
    spine = id;
  }
  t.root = 0;
  detail::finish_tree(t);
  return t;
}

}  // namespace gen
