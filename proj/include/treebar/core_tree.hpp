#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "treebar/kcore.hpp"

namespace treebar {

template <class V>
class UnionFind {
 public:
  explicit UnionFind(V n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), V(0));
  }

  V find(V x) {
    V r = x;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[x] != r) {
      V nx = parent_[x];
      parent_[x] = r;
      x = nx;
    }
    return r;
  }

  // a and b must be distinct representatives; returns the surviving one.
  V unite(V a, V b) {
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
  }

 private:
  std::vector<V> parent_;
  std::vector<V> size_;
};

// Forest grown by inserting edges in non-increasing coreness order. Nodes
// 0..n-1 are the per-vertex leaves; internal nodes are appended on demand.
// Each union-find representative tracks the root of its component's tree.
template <class V>
class Forest {
 public:
  static constexpr V kNone = std::numeric_limits<V>::max();

  explicit Forest(V n)
      : n_(n),
        uf_(n),
        root_of_(n),
        maxc_(n, 0),
        first_child_(n, kNone),
        next_sibling_(n, kNone) {
    std::iota(root_of_.begin(), root_of_.end(), V(0));
  }

  V leaf_count() const { return n_; }
  std::size_t node_count() const { return maxc_.size(); }
  bool is_leaf(V node) const { return node < n_; }
  std::uint32_t max_coreness(V node) const { return maxc_[node]; }
  V first_child(V node) const { return first_child_[node]; }
  V next_sibling(V node) const { return next_sibling_[node]; }

  V component_root(V vertex) { return root_of_[uf_.find(vertex)]; }

  void insert_edge(V u, V v, std::uint32_t c) {
    if (seen_edge_ && c > last_c_)
      throw std::logic_error("insert_edge: edge coreness out of order");
    seen_edge_ = true;
    last_c_ = c;
    V ru = uf_.find(u), rv = uf_.find(v);
    if (ru == rv) return;
    V nu = root_of_[ru], nv = root_of_[rv];
    V root;
    bool lu = is_leaf(nu), lv = is_leaf(nv);
    if (lu && lv) {
      root = new_node(c);
      add_child(root, nu);
      add_child(root, nv);
    } else if (lu || lv) {
      V tree = lu ? nv : nu;
      V leaf = lu ? nu : nv;
      if (maxc_[tree] == c) {
        add_child(tree, leaf);
        root = tree;
      } else {
        root = new_node(c);
        add_child(root, tree);
        add_child(root, leaf);
      }
    } else {
      // Two internal roots. min(maxc(nu), maxc(nv)) == c here, and the root
      // that already spans coreness c stays on top; the deeper tree nests
      // inside it. Ties keep v's tree under u's root.
      if (maxc_[nu] <= maxc_[nv]) {
        add_child(nu, nv);
        root = nu;
      } else {
        add_child(nv, nu);
        root = nv;
      }
    }
    root_of_[uf_.unite(ru, rv)] = root;
  }

 private:
  V new_node(std::uint32_t c) {
    maxc_.push_back(c);
    first_child_.push_back(kNone);
    next_sibling_.push_back(kNone);
    return static_cast<V>(maxc_.size() - 1);
  }

  void add_child(V parent, V child) {
    next_sibling_[child] = first_child_[parent];
    first_child_[parent] = child;
  }

  V n_;
  UnionFind<V> uf_;
  std::vector<V> root_of_;  // valid at union-find representatives
  std::vector<std::uint32_t> maxc_;
  std::vector<V> first_child_;
  std::vector<V> next_sibling_;
  bool seen_edge_ = false;
  std::uint32_t last_c_ = 0;
};

template <class V>
Forest<V> build_forest(const Graph<V>& g, const OrderedEdgeStream<V>& stream) {
  Forest<V> f(g.n);
  for (const auto& e : stream.edges) f.insert_edge(e.u, e.v, e.c);
  return f;
}

// Contracted core-connectivity tree. Nodes are stored in preorder (every
// parent index is smaller than its children's); `children` vectors hold the
// display order (ascending subtree height, ties by n then index).
struct CoreTree {
  struct Node {
    std::int32_t min_c = 0;
    std::int32_t max_c = 0;
    std::uint64_t n = 0;        // vertices in this core
    std::uint64_t n_minus = 0;  // vertices in no child core
    std::int32_t actual_min = -1;  // coreness range over the exclusive set,
    std::int32_t actual_max = -1;  // -1 when the exclusive set is empty
    std::uint32_t height = 1;
    bool leaf = false;      // per-vertex leaf (present only when unstripped)
    std::uint64_t vertex = 0;  // dense vertex id for leaf nodes
    std::vector<std::uint32_t> children;
  };

  std::vector<Node> nodes;
  std::uint32_t root = 0;
  bool leaf_stripped = true;
  std::uint32_t degeneracy = 0;

  std::uint64_t total_vertices() const {
    return nodes.empty() ? 0 : nodes[root].n;
  }
  std::size_t core_node_count() const {
    std::size_t k = 0;
    for (const auto& nd : nodes) k += nd.leaf ? 0 : 1;
    return k;
  }
};

inline void sort_children(CoreTree& t) {
  for (auto& nd : t.nodes) {
    std::stable_sort(nd.children.begin(), nd.children.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       const auto& na = t.nodes[a];
                       const auto& nb = t.nodes[b];
                       return std::tie(na.height, na.n, a) <
                              std::tie(nb.height, nb.n, b);
                     });
  }
}

template <class V>
CoreTree finalize_tree(Forest<V>& f, const CorenessLabeling& lab,
                       bool strip_leaves = true) {
  const V n = f.leaf_count();
  if (n == 0) throw std::invalid_argument("finalize_tree: empty forest");

  std::vector<V> roots;
  {
    std::vector<bool> seen(f.node_count(), false);
    for (V v = 0; v < n; ++v) {
      V r = f.component_root(v);
      if (!seen[r]) {
        seen[r] = true;
        roots.push_back(r);
      }
    }
  }

  CoreTree t;
  t.leaf_stripped = strip_leaves;
  t.degeneracy = lab.degeneracy;

  constexpr std::uint32_t kNoCt = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> ct_parent;

  auto new_ct = [&](std::uint32_t parent) -> std::uint32_t {
    t.nodes.emplace_back();
    ct_parent.push_back(parent);
    auto id = static_cast<std::uint32_t>(t.nodes.size() - 1);
    if (parent != kNoCt) t.nodes[parent].children.push_back(id);
    return id;
  };

  std::uint32_t top = kNoCt;
  if (roots.size() > 1) {
    top = new_ct(kNoCt);  // artificial 0-root for a disconnected graph
    t.nodes[top].min_c = 0;
    t.nodes[top].max_c = 0;
  }

  struct Item {
    V fnode;
    std::uint32_t ct_of_parent;
  };
  std::vector<Item> stack;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it)
    stack.push_back({*it, top});

  std::vector<V> chain;
  while (!stack.empty()) {
    auto [x, pct] = stack.back();
    stack.pop_back();
    if (f.is_leaf(x)) {
      std::uint32_t c = lab.coreness[x];
      auto& p = t.nodes[pct];
      ++p.n_minus;
      std::int32_t ci = static_cast<std::int32_t>(c);
      if (p.actual_min < 0 || ci < p.actual_min) p.actual_min = ci;
      if (ci > p.actual_max) p.actual_max = ci;
      if (!strip_leaves) {
        std::uint32_t id = new_ct(pct);
        auto& nd = t.nodes[id];
        nd.min_c = nd.max_c = nd.actual_min = nd.actual_max = ci;
        nd.n = nd.n_minus = 1;
        nd.height = 0;
        nd.leaf = true;
        nd.vertex = x;
      }
      continue;
    }
    std::uint32_t ct;
    std::uint32_t mc = f.max_coreness(x);
    if (pct != kNoCt && t.nodes[pct].max_c == static_cast<std::int32_t>(mc)) {
      ct = pct;  // contract equal-max-coreness link
    } else {
      ct = new_ct(pct);
      t.nodes[ct].max_c = static_cast<std::int32_t>(mc);
    }
    chain.clear();
    for (V c = f.first_child(x); c != Forest<V>::kNone; c = f.next_sibling(c))
      chain.push_back(c);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      stack.push_back({*it, ct});
  }

  // bottom-up counts and heights (children always have larger indices)
  for (std::size_t i = t.nodes.size(); i-- > 0;) {
    auto& nd = t.nodes[i];
    if (nd.leaf) continue;
    nd.n = nd.n_minus;
    std::uint32_t h = 0;
    for (std::uint32_t ch : nd.children) {
      const auto& cn = t.nodes[ch];
      if (!cn.leaf) nd.n += cn.n;
      h = std::max(h, cn.height);
    }
    nd.height = nd.children.empty() ? 1 : h + 1;
  }
  if (t.nodes[t.root].n != n)
    throw std::logic_error("finalize_tree: internal consistency (vertex accounting)");

  // top-down coreness ranges
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    auto& nd = t.nodes[i];
    if (nd.leaf) continue;
    if (static_cast<std::uint32_t>(i) == t.root)
      nd.min_c = 0;
    else
      nd.min_c = t.nodes[ct_parent[i]].max_c + 1;
    if (nd.min_c > nd.max_c)
      throw std::logic_error("finalize_tree: internal consistency (range order)");
  }

  sort_children(t);
  return t;
}

}  // namespace treebar
