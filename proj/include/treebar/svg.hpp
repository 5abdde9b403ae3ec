#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "treebar/layout.hpp"

namespace treebar {

struct SvgDocument {
  double width_px = 0;
  double height_px = 0;
  std::string markup;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct PxRect {
  double x, y, w, h;
};

// Pixel geometry of a node rectangle: horizontal insets applied here so the
// layout keeps whole-unit spans.
inline PxRect px_node_rect(const TreebarLayout::Rect& r, const RenderConfig& cfg) {
  double strip_y = 0.4 * cfg.page_height_px;
  double strip_h = 0.5 * cfg.page_height_px;
  double hpad = cfg.inset_frac * inset_factor(r.depth);
  return {cfg.margin_px + (r.x + hpad) * cfg.unit_px,
          strip_y + r.y * strip_h,
          (r.width - 2.0 * hpad) * cfg.unit_px,
          r.height * strip_h};
}

// A square shares its node rect's vertical extent and sits on the unit slot,
// inset like its rect so the bar above lines up exactly.
inline PxRect px_square(const TreebarLayout::Square& sq, const TreebarLayout::Rect& r,
                        const RenderConfig& cfg) {
  PxRect rr = px_node_rect(r, cfg);
  double hpad = cfg.inset_frac * inset_factor(sq.depth);
  return {cfg.margin_px + (sq.x + hpad) * cfg.unit_px, rr.y,
          (sq.width - 2.0 * hpad) * cfg.unit_px, rr.h};
}

inline void rect_el(std::string& out, const char* cls, const PxRect& r,
                    const std::string& fill, const char* stroke) {
  out += "<rect class=\"";
  out += cls;
  out += "\" x=\"" + fmt(r.x) + "\" y=\"" + fmt(r.y) + "\" width=\"" +
         fmt(r.w) + "\" height=\"" + fmt(r.h) + "\" fill=\"" + fill + "\"";
  if (stroke) {
    out += " stroke=\"";
    out += stroke;
    out += "\" stroke-width=\"1\"";
  }
  out += "/>\n";
}

}  // namespace detail

inline SvgDocument emit_svg(const TreebarLayout& lay, const RenderConfig& cfg = {}) {
  if (lay.squares.empty())
    throw std::invalid_argument("emit_svg: empty layout");

  using detail::fmt;
  const double W = 2.0 * cfg.margin_px + lay.total_width * cfg.unit_px;
  const double H = cfg.page_height_px;
  const double bar_base = 0.4 * H;
  const double bar_top = 6.0;
  const double bar_scale = (bar_base - bar_top) / lay.bar_axis_max;
  const double label_y = 0.9 * H + 0.62 * (0.1 * H);

  std::string s;
  s.reserve(4096 + 200 * (lay.rects.size() + lay.squares.size()));
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
       fmt(W) + "\" height=\"" + fmt(H) + "\" viewBox=\"0 0 " + fmt(W) + " " +
       fmt(H) + "\">\n";
  detail::rect_el(s, "bg", {0, 0, W, H}, "#ffffff", nullptr);

  s += "<g class=\"grid\">\n";
  auto ticks = static_cast<int>(lay.bar_axis_max);
  for (int k = 0; k <= ticks; ++k) {
    double y = bar_base - k * bar_scale;
    s += "<line x1=\"" + fmt(cfg.margin_px) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
         fmt(W - cfg.margin_px) + "\" y2=\"" + fmt(y) +
         "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    if (k >= 1) {
      s += "<text x=\"" + fmt(cfg.margin_px - 4.0) + "\" y=\"" + fmt(y + 3.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"" +
           fmt(cfg.font_size * 0.85) + "\">10<tspan dy=\"-4\" font-size=\"" +
           fmt(cfg.font_size * 0.6) + "\">" + std::to_string(k - 1) +
           "</tspan></text>\n";
    }
  }
  s += "</g>\n";

  s += "<g class=\"bars\">\n";
  for (const auto& sq : lay.squares) {
    if (sq.bar_set_size == 0) continue;
    double hpad = cfg.inset_frac * inset_factor(sq.depth);
    double x = cfg.margin_px + (sq.x + hpad) * cfg.unit_px;
    double w = (sq.width - 2.0 * hpad) * cfg.unit_px;
    double h = sq.bar_height * bar_scale;
    detail::rect_el(s, "bar", {x, bar_base - h, w, h}, sq.fill, "#556677");
  }
  s += "</g>\n";

  s += "<g class=\"treemap\">\n";
  for (const auto& r : lay.rects)
    detail::rect_el(s, "node", detail::px_node_rect(r, cfg), r.fill, "#556677");
  for (const auto& sq : lay.squares)
    detail::rect_el(s, "sq", detail::px_square(sq, lay.rects[sq.rect_index], cfg),
                    sq.fill, nullptr);
  s += "</g>\n";

  if (cfg.show_labels) {
    s += "<g class=\"labels\">\n";
    for (const auto& sq : lay.squares) {
      if (sq.label.empty()) continue;
      s += "<text x=\"" + fmt(cfg.margin_px + (sq.x + 0.5) * cfg.unit_px) +
           "\" y=\"" + fmt(label_y) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"" +
           fmt(cfg.font_size) + "\">" + detail::xml_escape(sq.label) +
           "</text>\n";
    }
    s += "</g>\n";
  }

  s += "</svg>\n";
  return {W, H, std::move(s)};
}

}  // namespace treebar
