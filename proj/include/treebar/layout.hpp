#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "treebar/core_tree.hpp"

namespace treebar {

inline std::vector<std::string> default_palette() {
  return {"#f7fbff", "#deebf7", "#c6dbef", "#9ecae1",
          "#6baed6", "#4292c6", "#2171b5", "#084594"};
}

struct RenderConfig {
  double unit_px = 24.0;        // horizontal pixels per unit square
  double inset_frac = 0.04;     // nesting inset, per level (bounded, see below)
  std::vector<std::string> palette = default_palette();
  double font_size = 11.0;
  bool show_labels = true;
  static constexpr int log_base = 10;
  double page_height_px = 420.0;
  double margin_px = 24.0;
};

inline double bar_height(std::uint64_t set_size) {
  if (set_size == 0) return 0.0;
  return 1.0 + std::log10(static_cast<double>(set_size));
}

namespace detail {

struct Rgb {
  double r, g, b;
};

inline Rgb parse_hex(const std::string& hex) {
  if (hex.size() != 7 || hex[0] != '#')
    throw std::invalid_argument("bad palette color: " + hex);
  auto byte = [&](std::size_t i) {
    return static_cast<double>(std::stoul(hex.substr(i, 2), nullptr, 16));
  };
  return {byte(1), byte(3), byte(5)};
}

inline std::string to_hex(const Rgb& c) {
  char buf[8];
  auto q = [](double x) {
    long v = std::lround(x);
    return static_cast<unsigned>(std::clamp(v, 0l, 255l));
  };
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", q(c.r), q(c.g), q(c.b));
  return buf;
}

}  // namespace detail

// Relative luminance of an sRGB color (linearized channels).
inline double luminance(const std::string& hex) {
  auto c = detail::parse_hex(hex);
  auto lin = [](double v) {
    v /= 255.0;
    return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
  };
  return 0.2126 * lin(c.r) + 0.7152 * lin(c.g) + 0.0722 * lin(c.b);
}

// Position max_c/degeneracy on the palette ramp, interpolating linearly
// between adjacent stops. Deeper cores map to darker colors.
inline std::string color_for(std::int32_t max_c, std::uint32_t degeneracy,
                             const std::vector<std::string>& palette = default_palette()) {
  if (palette.empty()) throw std::invalid_argument("empty palette");
  if (palette.size() == 1) return palette[0];
  double p = static_cast<double>(max_c) /
             static_cast<double>(std::max<std::uint32_t>(degeneracy, 1));
  p = std::clamp(p, 0.0, 1.0);
  double x = p * static_cast<double>(palette.size() - 1);
  auto i = static_cast<std::size_t>(x);
  if (i >= palette.size() - 1) i = palette.size() - 2;
  double f = x - static_cast<double>(i);
  auto a = detail::parse_hex(palette[i]);
  auto b = detail::parse_hex(palette[i + 1]);
  return detail::to_hex({a.r + (b.r - a.r) * f, a.g + (b.g - a.g) * f,
                         a.b + (b.b - a.b) * f});
}

// Per-level inset factor: each nesting level adds half the previous
// increment, so insets grow strictly with depth yet stay below 2x the base
// inset. Keeps children strictly inside parents at any depth.
inline double inset_factor(std::uint32_t depth) {
  return 2.0 - std::pow(2.0, -static_cast<double>(depth));
}

// Treebar-map geometry in logical coordinates. Rect x/width are unit-grid
// slot spans (whole units); y/height are fractions of the treemap strip with
// the vertical nesting inset already applied. The renderer applies the
// horizontal insets so squares and bars stay aligned to the unit grid.
struct TreebarLayout {
  struct Rect {
    std::uint32_t node = 0;
    double x = 0;
    double y = 0;
    double width = 0;
    double height = 0;
    std::uint32_t depth = 0;
    std::string fill;
  };
  struct Square {
    std::uint32_t node = 0;
    std::uint32_t rect_index = 0;
    double x = 0;
    double width = 1.0;
    std::string label;           // "a–b" over the exclusive set, or empty
    double bar_height = 0;
    std::uint64_t bar_set_size = 0;
    std::string fill;
    std::uint32_t depth = 0;
  };

  std::vector<Rect> rects;      // preorder: parent before children
  std::vector<Square> squares;  // one per tree node
  double total_width = 0;
  double bar_axis_max = 1.0;
  std::uint32_t max_depth = 0;
};

inline TreebarLayout compute_layout(const CoreTree& tree,
                                    const RenderConfig& cfg = {}) {
  if (tree.nodes.empty())
    throw std::invalid_argument("compute_layout: empty tree");
  if (!tree.leaf_stripped)
    throw std::invalid_argument("compute_layout: tree must be leaf-stripped");

  const std::size_t nn = tree.nodes.size();
  std::vector<std::uint64_t> units(nn, 1);
  for (std::size_t i = nn; i-- > 0;)
    for (std::uint32_t ch : tree.nodes[i].children) units[i] += units[ch];

  TreebarLayout lay;
  lay.rects.reserve(nn);
  lay.squares.reserve(nn);
  lay.total_width = static_cast<double>(units[tree.root]);

  struct Item {
    std::uint32_t node;
    std::uint64_t slot;
    std::uint32_t depth;
  };
  std::vector<Item> stack{{tree.root, 0, 0}};
  while (!stack.empty()) {
    auto [nid, slot, depth] = stack.back();
    stack.pop_back();
    const auto& nd = tree.nodes[nid];
    lay.max_depth = std::max(lay.max_depth, depth);
    double vpad = cfg.inset_frac * inset_factor(depth);

    TreebarLayout::Rect r;
    r.node = nid;
    r.x = static_cast<double>(slot);
    r.y = vpad;
    r.width = static_cast<double>(units[nid]);
    r.height = 1.0 - vpad;
    r.depth = depth;
    r.fill = color_for(nd.max_c, tree.degeneracy, cfg.palette);
    auto rect_index = static_cast<std::uint32_t>(lay.rects.size());
    lay.rects.push_back(std::move(r));

    TreebarLayout::Square sq;
    sq.node = nid;
    sq.rect_index = rect_index;
    sq.x = static_cast<double>(slot);
    sq.bar_set_size = nd.n_minus;
    sq.bar_height = bar_height(nd.n_minus);
    sq.fill = lay.rects[rect_index].fill;
    sq.depth = depth;
    if (nd.n_minus > 0)
      sq.label = std::to_string(nd.actual_min) + "–" +
                 std::to_string(nd.actual_max);
    lay.squares.push_back(std::move(sq));

    std::uint64_t cur = slot + 1;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> placed;
    placed.reserve(nd.children.size());
    for (std::uint32_t ch : nd.children) {
      placed.emplace_back(ch, cur);
      cur += units[ch];
    }
    for (auto it = placed.rbegin(); it != placed.rend(); ++it)
      stack.push_back({it->first, it->second, depth + 1});
  }

  double hmax = 0;
  for (const auto& sq : lay.squares) hmax = std::max(hmax, sq.bar_height);
  lay.bar_axis_max = std::max(1.0, std::ceil(hmax));
  return lay;
}

}  // namespace treebar
