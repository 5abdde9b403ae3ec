#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "support/generators.hpp"
#include "treebar/layout.hpp"

using treebar::bar_height;
using treebar::color_for;
using treebar::compute_layout;
using treebar::inset_factor;
using treebar::luminance;

TEST_CASE("bar heights: one plus the decimal log, zero for empty sets") {
  REQUIRE(bar_height(0) == 0.0);
  REQUIRE(bar_height(1) == 1.0);
  REQUIRE(bar_height(10) == Catch::Approx(2.0).epsilon(1e-12));
  REQUIRE(bar_height(100) == Catch::Approx(3.0).epsilon(1e-12));
  REQUIRE(bar_height(19) ==
          Catch::Approx(2.2787536009528289).epsilon(1e-12));
  std::uint64_t sizes[] = {1, 2, 3, 9, 10, 11, 999, 1000, 123456789};
  for (std::size_t i = 1; i < std::size(sizes); ++i)
    REQUIRE(bar_height(sizes[i - 1]) < bar_height(sizes[i]));
}

TEST_CASE("color ramp endpoints and monotone darkness") {
  auto palette = treebar::default_palette();
  REQUIRE(color_for(0, 8) == palette.front());
  REQUIRE(color_for(8, 8) == palette.back());

  for (std::uint32_t degeneracy : {1u, 5u, 8u, 20u, 111u}) {
    double prev = 2.0;
    for (std::uint32_t c = 0; c <= degeneracy; ++c) {
      double lum = luminance(color_for(static_cast<std::int32_t>(c), degeneracy));
      REQUIRE(lum < prev);
      prev = lum;
    }
  }
}

TEST_CASE("palette stops themselves darken strictly") {
  auto palette = treebar::default_palette();
  for (std::size_t i = 1; i < palette.size(); ++i)
    REQUIRE(luminance(palette[i]) < luminance(palette[i - 1]));
}

TEST_CASE("nesting inset grows with depth but stays bounded") {
  REQUIRE(inset_factor(0) == 1.0);
  REQUIRE(inset_factor(1) == 1.5);
  REQUIRE(inset_factor(2) == 1.75);
  // 2 - 2^-d saturates to 2.0 in double arithmetic beyond d = 52, far past
  // any real nesting depth; check strictness over the plausible range
  for (std::uint32_t d = 1; d <= 40; ++d) {
    REQUIRE(inset_factor(d) > inset_factor(d - 1));
    REQUIRE(inset_factor(d) < 2.0);
  }
}

TEST_CASE("single node: one unit square") {
  treebar::CoreTree t;
  t.leaf_stripped = true;
  t.degeneracy = 2;
  t.nodes.resize(1);
  t.nodes[0] = {0, 2, 3, 3, 2, 2, 1, false, 0, {}};
  auto lay = compute_layout(t);
  REQUIRE(lay.total_width == 1.0);
  REQUIRE(lay.rects.size() == 1);
  REQUIRE(lay.squares.size() == 1);
  REQUIRE(lay.squares[0].bar_set_size == 3);
  REQUIRE(lay.squares[0].label == "2–2");
  REQUIRE(lay.squares[0].bar_height ==
          Catch::Approx(1.0 + std::log10(3.0)).epsilon(1e-12));
}

TEST_CASE("two-node chain: widths follow subtree square counts") {
  treebar::CoreTree t;
  t.leaf_stripped = true;
  t.degeneracy = 3;
  t.nodes.resize(2);
  t.nodes[0] = {0, 1, 5, 1, 1, 1, 2, false, 0, {1}};
  t.nodes[1] = {2, 3, 4, 4, 3, 3, 1, false, 0, {}};
  auto lay = compute_layout(t);
  REQUIRE(lay.total_width == 2.0);
  REQUIRE(lay.rects[0].width == 2.0);
  REQUIRE(lay.rects[1].width == 1.0);
  REQUIRE(lay.squares[0].bar_set_size == 1);
  REQUIRE(lay.squares[1].bar_set_size == 4);
  // V- square first, then the child rectangle
  REQUIRE(lay.squares[0].x == 0.0);
  REQUIRE(lay.rects[1].x == 1.0);
}

TEST_CASE("root with two childless children spans three units") {
  treebar::CoreTree t;
  t.leaf_stripped = true;
  t.degeneracy = 2;
  t.nodes.resize(3);
  t.nodes[0] = {0, 0, 7, 1, 0, 0, 2, false, 0, {1, 2}};
  t.nodes[1] = {1, 2, 3, 3, 2, 2, 1, false, 0, {}};
  t.nodes[2] = {1, 2, 3, 3, 2, 2, 1, false, 0, {}};
  auto lay = compute_layout(t);
  REQUIRE(lay.total_width == 3.0);
}

TEST_CASE("layout geometry invariants on generated trees") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = gen::random_tree(seed);
    auto lay = compute_layout(t);

    REQUIRE(lay.squares.size() == t.nodes.size());
    REQUIRE(lay.rects.size() == t.nodes.size());
    REQUIRE(lay.total_width == static_cast<double>(t.nodes.size()));

    std::map<std::uint32_t, const treebar::TreebarLayout::Rect*> by_node;
    for (const auto& r : lay.rects) by_node[r.node] = &r;

    for (const auto& r : lay.rects) {
      const auto& nd = t.nodes[r.node];
      // width = number of squares in the subtree
      std::uint64_t subtree = 1;
      std::vector<std::uint32_t> work(nd.children.begin(), nd.children.end());
      while (!work.empty()) {
        auto x = work.back();
        work.pop_back();
        ++subtree;
        const auto& c = t.nodes[x].children;
        work.insert(work.end(), c.begin(), c.end());
      }
      REQUIRE(r.width == static_cast<double>(subtree));

      double child_widths = 0;
      for (auto ch : nd.children) {
        const auto* cr = by_node.at(ch);
        child_widths += cr->width;
        // strict horizontal containment, deeper vertical inset
        REQUIRE(cr->x >= r.x + 1.0);
        REQUIRE(cr->x + cr->width <= r.x + r.width);
        REQUIRE(cr->depth == r.depth + 1);
        REQUIRE(cr->y > r.y);
        REQUIRE(cr->height < r.height);
      }
      REQUIRE(child_widths + 1.0 == r.width);
    }

    // squares tile the full width, one per node, in rect order
    std::vector<bool> slot_taken(t.nodes.size(), false);
    for (const auto& sq : lay.squares) {
      REQUIRE(sq.width == 1.0);
      auto slot = static_cast<std::size_t>(sq.x);
      REQUIRE_FALSE(slot_taken[slot]);
      slot_taken[slot] = true;
      const auto& nd = t.nodes[sq.node];
      if (nd.n_minus == 0) {
        REQUIRE(sq.label.empty());
        REQUIRE(sq.bar_height == 0.0);
      } else {
        REQUIRE(sq.bar_height > 0.0);
        REQUIRE(nd.actual_min >= nd.min_c);
        REQUIRE(nd.actual_max <= nd.max_c);
        REQUIRE(sq.label == std::to_string(nd.actual_min) + "–" +
                                std::to_string(nd.actual_max));
      }
    }
    for (bool taken : slot_taken) REQUIRE(taken);

    // children appear in tree (ascending height) order left to right
    for (const auto& r : lay.rects) {
      const auto& nd = t.nodes[r.node];
      double prev_x = r.x;
      for (auto ch : nd.children) {
        REQUIRE(by_node.at(ch)->x > prev_x);
        prev_x = by_node.at(ch)->x;
      }
    }

    double hmax = 0;
    for (const auto& sq : lay.squares) hmax = std::max(hmax, sq.bar_height);
    REQUIRE(lay.bar_axis_max == std::max(1.0, std::ceil(hmax)));
  }
}

TEST_CASE("layout rejects empty and unstripped trees") {
  REQUIRE_THROWS_AS(compute_layout(treebar::CoreTree{}), std::invalid_argument);
  treebar::CoreTree t;
  t.nodes.resize(1);
  t.nodes[0] = {0, 1, 1, 1, 1, 1, 1, false, 0, {}};
  t.leaf_stripped = false;
  REQUIRE_THROWS_AS(compute_layout(t), std::invalid_argument);
}
