#pragma once

#include <string>

#include "json.hpp"
#include "locatable/certificates.hpp"
#include "locatable/classifier.hpp"
#include "locatable/solver.hpp"
#include "locatable/strategy.hpp"

// Certificate formats:
//   {"type":"robber","family":[[0,1,2],...],"relabel":[...]}      relabel optional
//   {"type":"cop","root":{"belief":[...],"probe":p,"children":{"<d>": node | "LEAF"}}}
// A cop tree for a one-vertex graph has "root": null.

namespace locatable {

using json = nlohmann::json;

inline json to_json(VertexSet s) { return s.to_vector(); }

inline VertexSet vertex_set_from_json(const json& j) {
  if (!j.is_array()) throw ParseError(0, "expected an array of vertices");
  VertexSet s;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(0, "vertex must be an integer");
    int x = v.get<int>();
    if (x < 0 || x >= Graph::kMaxOrder) throw ParseError(0, "vertex " + std::to_string(x) + " out of range");
    s.insert(x);
  }
  return s;
}

inline json to_json(const RobberCertificate& c) {
  json j{{"type", "robber"}, {"family", json::array()}};
  for (VertexSet s : c.family) j["family"].push_back(to_json(s));
  if (!c.relabel.empty()) j["relabel"] = c.relabel;
  return j;
}

namespace detail {

inline json cop_node_to_json(const CopStrategyTree& t, int id) {
  const auto& node = t.nodes[id];
  json children = json::object();
  for (const auto& b : node.children)
    children[std::to_string(b.distance)] =
        b.child == CopStrategyTree::kLeaf ? json("LEAF") : cop_node_to_json(t, b.child);
  return {{"belief", to_json(node.belief)}, {"probe", node.probe}, {"children", children}};
}

inline int cop_node_from_json(const json& j, CopStrategyTree& t, int depth) {
  if (depth > 4096) throw MalformedTree("strategy tree nested too deeply");
  if (!j.is_object() || !j.contains("belief") || !j.contains("probe") || !j.contains("children"))
    throw MalformedTree("node needs belief, probe and children");
  if (!j["probe"].is_number_integer()) throw MalformedTree("probe must be an integer");
  const int id = static_cast<int>(t.nodes.size());
  t.nodes.push_back({vertex_set_from_json(j["belief"]), j["probe"].get<int>(), {}});
  if (!j["children"].is_object()) throw MalformedTree("children must be an object");
  std::vector<CopStrategyTree::Branch> branches;
  for (const auto& [key, value] : j["children"].items()) {
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(key, &used);
      if (used != key.size() || d < 0) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      throw MalformedTree("bad distance key '" + key + "'");
    }
    if (value.is_string()) {
      if (value.get<std::string>() != "LEAF") throw MalformedTree("unknown leaf marker");
      branches.push_back({d, CopStrategyTree::kLeaf});
    } else {
      branches.push_back({d, cop_node_from_json(value, t, depth + 1)});
    }
  }
  std::ranges::sort(branches, {}, &CopStrategyTree::Branch::distance);
  t.nodes[id].children = std::move(branches);
  return id;
}

}  // namespace detail

inline json to_json(const CopStrategyTree& t) {
  return {{"type", "cop"}, {"root", t.empty() ? json(nullptr) : detail::cop_node_to_json(t, 0)}};
}

inline RobberCertificate robber_certificate_from_json(const json& j) {
  if (j.value("type", "") != "robber") throw ParseError(0, "not a robber certificate");
  if (!j.contains("family") || !j["family"].is_array()) throw ParseError(0, "robber certificate needs a family array");
  RobberCertificate c;
  for (const auto& m : j["family"]) c.family.push_back(vertex_set_from_json(m));
  if (j.contains("relabel")) c.relabel = j["relabel"].get<std::vector<int>>();
  return c;
}

inline CopStrategyTree cop_strategy_from_json(const json& j) {
  if (j.value("type", "") != "cop") throw ParseError(0, "not a cop strategy");
  CopStrategyTree t;
  if (!j.contains("root")) throw MalformedTree("cop strategy needs a root");
  if (!j["root"].is_null()) detail::cop_node_from_json(j["root"], t, 0);
  return t;
}

inline json to_json(const ClassifierVerdict& v) {
  json j{{"outcome", to_string(v.outcome)}, {"rule", rule_code(v.rule)}, {"description", rule_description(v.rule)}};
  j["witness"] = v.witness ? json(v.witness->map) : json::array();
  if (v.rule == Rule::Hideout) j["hideout"] = to_string(v.hideout);
  return j;
}

inline json to_json(const SolveResult& r) {
  json j{{"verdict", to_string(r.verdict)}, {"explored", r.explored}};
  j["capture_time"] = r.capture_time ? json(*r.capture_time) : json(nullptr);
  if (r.budget_exhausted) j["budget_exhausted"] = true;
  return j;
}

}  // namespace locatable
