#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "treebar/core_tree.hpp"

namespace treebar {

namespace detail {

inline nlohmann::ordered_json node_to_json(const CoreTree& t, std::uint32_t id) {
  const auto& nd = t.nodes[id];
  nlohmann::ordered_json j;
  j["min_c"] = nd.min_c;
  j["max_c"] = nd.max_c;
  j["n"] = nd.n;
  j["n_minus"] = nd.n_minus;
  if (nd.n_minus == 0) {
    j["actual_min"] = nullptr;
    j["actual_max"] = nullptr;
  } else {
    j["actual_min"] = nd.actual_min;
    j["actual_max"] = nd.actual_max;
  }
  if (nd.leaf) {
    j["leaf"] = true;
    j["vertex"] = nd.vertex;
  }
  auto arr = nlohmann::ordered_json::array();
  for (std::uint32_t ch : nd.children) arr.push_back(node_to_json(t, ch));
  j["children"] = std::move(arr);
  return j;
}

inline std::uint32_t node_from_json(const nlohmann::ordered_json& j, CoreTree& t) {
  t.nodes.emplace_back();
  auto id = static_cast<std::uint32_t>(t.nodes.size() - 1);
  {
    auto& nd = t.nodes[id];
    nd.min_c = j.at("min_c").get<std::int32_t>();
    nd.max_c = j.at("max_c").get<std::int32_t>();
    nd.n = j.at("n").get<std::uint64_t>();
    nd.n_minus = j.at("n_minus").get<std::uint64_t>();
    if (j.at("actual_min").is_null()) {
      nd.actual_min = -1;
      nd.actual_max = -1;
    } else {
      nd.actual_min = j.at("actual_min").get<std::int32_t>();
      nd.actual_max = j.at("actual_max").get<std::int32_t>();
    }
    if (j.contains("leaf") && j.at("leaf").get<bool>()) {
      nd.leaf = true;
      nd.vertex = j.at("vertex").get<std::uint64_t>();
      nd.height = 0;
    }
  }
  for (const auto& cj : j.at("children")) {
    std::uint32_t ch = node_from_json(cj, t);
    t.nodes[id].children.push_back(ch);
  }
  // heights are derived, not serialized
  auto& nd = t.nodes[id];
  if (!nd.leaf) {
    std::uint32_t h = 0;
    for (std::uint32_t ch : nd.children) h = std::max(h, t.nodes[ch].height);
    nd.height = nd.children.empty() ? 1 : h + 1;
  }
  return id;
}

}  // namespace detail

inline nlohmann::ordered_json tree_to_json_value(const CoreTree& t) {
  if (t.nodes.empty()) throw std::invalid_argument("tree_to_json: empty tree");
  return detail::node_to_json(t, t.root);
}

inline std::string tree_to_json(const CoreTree& t, int indent = 2) {
  return tree_to_json_value(t).dump(indent);
}

inline CoreTree tree_from_json_value(const nlohmann::ordered_json& j) {
  CoreTree t;
  t.root = detail::node_from_json(j, t);
  bool any_leaf = false;
  for (const auto& nd : t.nodes) {
    any_leaf = any_leaf || nd.leaf;
    if (!nd.leaf)
      t.degeneracy = std::max(t.degeneracy, static_cast<std::uint32_t>(nd.max_c));
  }
  t.leaf_stripped = !any_leaf;
  return t;
}

inline CoreTree tree_from_json(const std::string& text) {
  return tree_from_json_value(nlohmann::ordered_json::parse(text));
}

}  // namespace treebar
