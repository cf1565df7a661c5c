#pragma once

// Commuting graphs of finite groups and their genus.

#include <optional>
#include <vector>

#include "cgraph/genus.hpp"
#include "cgraph/graph.hpp"
#include "cgraph/group.hpp"

namespace cgraph {

/// Graph on G \ Z(G) (vertices in increasing element order), x ~ y iff xy = yx.
/// `vertex_element` receives the element behind each vertex.
inline SimpleGraph build_commuting_graph(const FiniteGroup& g, std::vector<element>* vertex_element = nullptr) {
  const bitset z = center_bits(g);
  std::vector<element> verts;
  std::vector<std::int64_t> pos(g.order(), -1);
  for (element x = 0; x < g.order(); ++x)
    if (!z.test(x)) {
      pos[x] = static_cast<std::int64_t>(verts.size());
      verts.push_back(x);
    }
  SimpleGraph gr(verts.size());
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    labels.push_back(g.label(verts[i]));
    g.centralizer_bits(verts[i]).for_each([&](std::size_t y) {
      if (pos[y] > static_cast<std::int64_t>(i)) gr.add_edge(static_cast<vertex>(i), static_cast<vertex>(pos[y]));
    });
  }
  gr.set_labels(std::move(labels));
  if (vertex_element) *vertex_element = std::move(verts);
  return gr;
}

struct CommutingGraphReport {
  std::size_t group_order = 0;
  std::size_t center_order = 0;
  SimpleGraph graph;
  std::vector<element> vertex_element;
  std::optional<std::size_t> girth;  // nullopt: acyclic
  GraphGenus genus;                  // block decomposition, per-block and total genus
  bool is_ac = false;
  std::optional<CentralizerFamily> family;  // present for AC groups

  const GenusResult& total() const { return genus.total; }
};

/// Throws group_error for abelian input (the commuting graph would have no vertices).
inline CommutingGraphReport commuting_graph(const FiniteGroup& g, std::size_t oracle_cap = default_oracle_cap) {
  if (g.is_abelian()) throw group_error("commuting graph of an abelian group is empty");
  CommutingGraphReport r;
  r.group_order = g.order();
  r.center_order = center_bits(g).count();
  r.graph = build_commuting_graph(g, &r.vertex_element);
  r.girth = girth(r.graph);
  r.genus = analyze_genus(r.graph, oracle_cap);
  r.is_ac = is_ac_group(g);
  if (r.is_ac) r.family = centralizer_family(g);
  return r;
}

/// Sum over the centralizer family of gamma(K_|X|); valid for non-abelian AC-groups only.
inline GenusResult ac_genus(const FiniteGroup& g) {
  if (g.is_abelian()) throw group_error("ac_genus: group is abelian");
  if (!is_ac_group(g)) throw group_error("ac_genus: group is not an AC-group");
  std::int64_t total = 0;
  for (const auto& x : centralizer_family(g).members) total += genus_complete(static_cast<std::int64_t>(x.size()));
  return GenusResult::exact(total, Certificate::BlockSum);
}

}  // namespace cgraph
