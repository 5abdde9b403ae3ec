#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "treebar/core_tree.hpp"

namespace treebar {

struct CorenessScale {
  std::uint32_t t = 1;  // coreness units per contour interval
};

// Collapse coreness layers of width t: conceptually every node splits into
// its unit-coreness chain, levels are grouped into layers [i*t, i*t + t - 1],
// each connected same-layer region becomes one node, and parent/child pairs
// covering an identical vertex set are re-contracted. Implemented by
// splitting nodes at layer boundaries directly.
inline CoreTree collapse(const CoreTree& tree, std::uint32_t t) {
  if (t < 1) throw std::invalid_argument("collapse: scale must be >= 1");
  if (!tree.leaf_stripped)
    throw std::invalid_argument("collapse: tree must be leaf-stripped");
  if (tree.nodes.empty()) throw std::invalid_argument("collapse: empty tree");

  const std::int32_t ti = static_cast<std::int32_t>(t);
  auto layer_end = [&](std::int32_t level) { return (level / ti) * ti + ti - 1; };

  struct Piece {
    std::int32_t min_c, max_c;
    std::uint64_t n = 0;
    std::uint64_t n_minus = 0;
    std::int32_t actual_min = -1, actual_max = -1;
    std::vector<std::uint32_t> children;
    bool dead = false;
  };
  std::vector<Piece> pieces;
  constexpr std::uint32_t kNone = 0xFFFFFFFFu;

  auto new_piece = [&](std::int32_t lo, std::int32_t hi, std::uint64_t n,
                       std::uint32_t parent) -> std::uint32_t {
    pieces.push_back({lo, hi, n, 0, -1, -1, {}, false});
    auto id = static_cast<std::uint32_t>(pieces.size() - 1);
    if (parent != kNone) pieces[parent].children.push_back(id);
    return id;
  };

  // preorder walk of the original tree; `parent_piece` holds the piece that
  // contains the level right above the node's range
  struct Item {
    std::uint32_t node;
    std::uint32_t parent_piece;
  };
  std::vector<Item> stack{{tree.root, kNone}};
  while (!stack.empty()) {
    auto [nid, pp] = stack.back();
    stack.pop_back();
    const auto& nd = tree.nodes[nid];
    std::int32_t lo = nd.min_c, hi = nd.max_c;
    std::uint32_t cur = pp;
    std::int32_t s = lo;
    if (pp != kNone && lo % ti != 0) {
      // first segment shares its layer with the parent's bottom level
      std::int32_t seg_end = std::min(hi, layer_end(lo));
      pieces[pp].max_c = std::max(pieces[pp].max_c, seg_end);
      s = seg_end + 1;
    }
    while (s <= hi) {
      std::int32_t seg_end = std::min(hi, layer_end(s));
      cur = new_piece(s, seg_end, nd.n, cur);
      s = seg_end + 1;
    }
    // the node's exclusive vertices live at its bottom level
    auto& bottom = pieces[cur];
    bottom.n_minus += nd.n_minus;
    if (nd.n_minus > 0) {
      if (bottom.actual_min < 0 || nd.actual_min < bottom.actual_min)
        bottom.actual_min = nd.actual_min;
      bottom.actual_max = std::max(bottom.actual_max, nd.actual_max);
    }
    for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it)
      stack.push_back({*it, cur});
  }

  // re-contract parent/child pairs with identical vertex sets
  for (std::size_t i = pieces.size(); i-- > 0;) {
    auto& p = pieces[i];
    if (p.dead || p.children.size() != 1) continue;
    std::uint64_t child_sum = 0;
    for (std::uint32_t ch : p.children) child_sum += pieces[ch].n;
    if (p.n != child_sum) continue;  // keeps some exclusive vertices
    auto& c = pieces[p.children[0]];
    p.max_c = c.max_c;
    p.n_minus = c.n_minus;
    p.actual_min = c.actual_min;
    p.actual_max = c.actual_max;
    p.children = std::move(c.children);
    c.dead = true;
  }

  // compact into a CoreTree, preserving preorder
  std::vector<std::uint32_t> remap(pieces.size(), kNone);
  CoreTree out;
  out.leaf_stripped = true;
  out.degeneracy = tree.degeneracy;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].dead) continue;
    remap[i] = static_cast<std::uint32_t>(out.nodes.size());
    out.nodes.emplace_back();
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].dead) continue;
    auto& src = pieces[i];
    auto& nd = out.nodes[remap[i]];
    nd.min_c = src.min_c;
    nd.max_c = src.max_c;
    nd.n = src.n;
    nd.n_minus = src.n_minus;
    nd.actual_min = src.actual_min;
    nd.actual_max = src.actual_max;
    nd.children.reserve(src.children.size());
    for (std::uint32_t ch : src.children) nd.children.push_back(remap[ch]);
  }
  out.root = 0;

  // heights and accounting, bottom-up
  for (std::size_t i = out.nodes.size(); i-- > 0;) {
    auto& nd = out.nodes[i];
    std::uint64_t child_sum = 0;
    std::uint32_t h = 0;
    for (std::uint32_t ch : nd.children) {
      child_sum += out.nodes[ch].n;
      h = std::max(h, out.nodes[ch].height);
    }
    nd.height = nd.children.empty() ? 1 : h + 1;
    if (child_sum + nd.n_minus != nd.n)
      throw std::logic_error("collapse: internal consistency (vertex accounting)");
  }
  sort_children(out);
  return out;
}

inline std::size_t bar_count(const CoreTree& tree, std::uint32_t t) {
  return collapse(tree, t).nodes.size();
}

// Smallest t in [1, degeneracy + 1] whose collapsed tree has at most
// target_bars nodes. A binary search (counts are usually non-increasing in
// t) finds a qualifying upper bound cheaply; a bounded scan below it then
// pins the true minimum, so the result is exact even when counts dip.
inline CorenessScale auto_scale(const CoreTree& tree, std::uint32_t target_bars) {
  if (target_bars < 1)
    throw std::invalid_argument("auto_scale: target must be >= 1");
  const std::uint32_t t_max = tree.degeneracy + 1;
  std::map<std::uint32_t, std::size_t> probes;
  auto count = [&](std::uint32_t t) {
    auto it = probes.find(t);
    if (it != probes.end()) return it->second;
    std::size_t c = bar_count(tree, t);
    probes.emplace(t, c);
    return c;
  };

  if (count(1) <= target_bars) return {1};

  std::uint32_t lo = 2, hi = t_max;
  while (lo < hi) {
    std::uint32_t mid = lo + (hi - lo) / 2;
    if (count(mid) <= target_bars)
      hi = mid;
    else
      lo = mid + 1;
  }
  std::uint32_t candidate = lo;

  // Layer re-bucketing does not guarantee a monotone count sequence: a
  // boundary that stops a child from fusing into its parent's bottom layer
  // can bump the count back up, and such a dip may sit between two probes
  // that look perfectly consistent. The candidate is therefore only an
  // upper bound; verify minimality by scanning everything below it. Each
  // count is one collapse, linear in the (small) node count, and the probe
  // cache already holds the values the search touched.
  for (std::uint32_t t = 2; t < candidate; ++t)
    if (count(t) <= target_bars) return {t};
  return {candidate};
}

}  // namespace treebar
