#pragma once

// JSON renderings of reports, catalog entries and group summaries.

#include <map>
#include <string>

#include "json.hpp"

#include "cgraph/catalog.hpp"
#include "cgraph/commuting.hpp"
#include "cgraph/heawood.hpp"

namespace cgraph {

using json = nlohmann::ordered_json;

inline json to_json(const GenusResult& r) {
  json j;
  j["kind"] = to_string(r.kind);
  if (r.is_exact()) {
    j["value"] = r.value;
    j["certificate"] = to_string(r.certificate);
  } else {
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["lower_source"] = to_string(r.lower_source);
    j["upper_source"] = to_string(r.upper_source);
  }
  return j;
}

inline json to_json(const HeawoodBounds& b) {
  json j;
  j["h"] = b.h;
  j["center_bound"] = b.center_bound ? json(*b.center_bound) : json(nullptr);
  j["order_bound"] = {{"base", b.order_base}, {"exponent", b.order_exponent}};
  return j;
}

/// Girth is null when the graph is acyclic.
inline json to_json(const std::string& name, const FiniteGroup& g, const CommutingGraphReport& r) {
  json j;
  j["group"] = {{"name", name}, {"order", r.group_order}, {"center_order", r.center_order}, {"is_ac", r.is_ac}};
  j["graph"] = {{"vertices", r.graph.vertex_count()},
                {"edges", r.graph.edge_count()},
                {"girth", r.girth ? json(*r.girth) : json(nullptr)}};
  json blocks = json::array();
  for (const auto& b : r.genus.blocks) {
    json jb;
    jb["size"] = b.vertices.size();
    jb["type"] = to_string(b.type);
    jb["genus"] = to_json(b.genus);
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  j["genus"] = to_json(r.total());
  if (r.total().is_exact()) {
    j["bounds"] = to_json(heawood_bounds(r.total().value, static_cast<std::int64_t>(quotient_exponent_t(g))));
  } else {
    j["bounds"] = nullptr;
  }
  return j;
}

template <class K, class V>
json histogram_json(const std::map<K, V>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

inline json group_info_json(const std::string& name, const FiniteGroup& g) {
  const InvariantSignature sig = invariant_signature(g);
  json j;
  j["name"] = name;
  j["order"] = g.order();
  j["center_order"] = sig.center_order;
  j["is_abelian"] = g.is_abelian();
  j["is_ac"] = is_ac_group(g);
  j["element_orders"] = histogram_json(sig.element_orders());
  j["centralizer_sizes"] = histogram_json(sig.centralizer_sizes());
  return j;
}

inline json to_json(const CatalogEntry& e) {
  json j;
  j["name"] = e.name;
  j["iso_class"] = e.iso_class;
  j["recipe"] = e.recipe;
  j["order"] = e.order;
  j["center_order"] = e.center_order;
  j["is_ac"] = e.ac;
  j["genus"] = e.genus ? json(*e.genus) : json(nullptr);
  if (e.genus_lower) j["genus_lower"] = *e.genus_lower;
  json tags = json::array();
  for (auto t : e.tags) tags.push_back(to_string(t));
  j["tags"] = std::move(tags);
  j["family"] = e.family ? json(e.family->describe()) : json(nullptr);
  return j;
}

inline json catalog_json() {
  json arr = json::array();
  for (const auto& e : catalog()) arr.push_back(to_json(e));
  return {{"entries", std::move(arr)}};
}

inline json to_json(const VerificationRecord& rec) {
  json checks = json::array();
  for (const auto& c : rec.checks)
    checks.push_back({{"field", c.field}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
  return {{"name", rec.name}, {"passed", rec.passed()}, {"checks", std::move(checks)}};
}

}  // namespace cgraph
