#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "cgraph/catalog.hpp"
#include "cgraph/clique.hpp"
#include "cgraph/commuting.hpp"
#include "cgraph/genus.hpp"
#include "cgraph/graph.hpp"
#include "cgraph/planarity.hpp"

using namespace cgraph;

namespace {

SimpleGraph path(std::size_t n) {
  SimpleGraph g(n);
  for (vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle(std::size_t n) {
  SimpleGraph g = path(n);
  g.add_edge(static_cast<vertex>(n - 1), 0);
  return g;
}

SimpleGraph petersen() {
  SimpleGraph g(10);
  for (vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  const auto off = static_cast<vertex>(a.vertex_count());
  for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
  return g;
}

// Connected graph: random spanning tree plus extra random edges, at most `max_edges` edges.
SimpleGraph random_connected(std::mt19937& rng, std::size_t n, std::size_t max_edges) {
  SimpleGraph g(n);
  for (vertex v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<vertex>(0, v - 1)(rng));
  std::uniform_int_distribution<vertex> pick(0, static_cast<vertex>(n - 1));
  const std::size_t target = std::uniform_int_distribution<std::size_t>(n - 1, max_edges)(rng);
  for (int tries = 0; g.edge_count() < target && tries < 1000; ++tries) {
    const vertex a = pick(rng), b = pick(rng);
    if (a != b) g.add_edge(a, b);
  }
  return g;
}

std::size_t edges_of(const SimpleGraph& g, const std::vector<vertex>& block) {
  return induced_subgraph(g, block).edge_count();
}

}  // namespace

TEST(SimpleGraphBasics, EdgesAreSimpleAndSymmetric) {
  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_THROW(g.add_edge(2, 2), graph_error);
  EXPECT_THROW(g.add_edge(0, 9), graph_error);
}

TEST(SimpleGraphBasics, InducedSubgraph) {
  EXPECT_EQ(recognize_complete(induced_subgraph(complete_graph(5), {0, 2, 4})), 3u);
  EXPECT_EQ(induced_subgraph(SimpleGraph(6), {1, 3, 5}).edge_count(), 0u);
  EXPECT_THROW(induced_subgraph(complete_graph(3), {}), graph_error);

  // Rotations of D12 outside the center induce K4.
  const FiniteGroup d12 = groups::dihedral(6);
  std::vector<element> ve;
  const SimpleGraph gc = build_commuting_graph(d12, &ve);
  const element y = [&] {
    for (element x = 0; x < d12.order(); ++x)
      if (element_order(d12, x) == 6) return x;
    return element{0};
  }();
  std::vector<vertex> rot;
  for (vertex v = 0; v < ve.size(); ++v)
    if (d12.commute(ve[v], y) && d12.centralizer_bits(ve[v]).count() == 6) rot.push_back(v);
  EXPECT_EQ(recognize_complete(induced_subgraph(gc, rot)), 4u);
}

TEST(SimpleGraphBasics, Complement) {
  EXPECT_EQ(complement(complete_graph(6)).edge_count(), 0u);
  const SimpleGraph p = petersen();
  EXPECT_EQ(complement(complement(p)), p);
  const SimpleGraph gc = build_commuting_graph(groups::symmetric(4));
  const SimpleGraph nc = complement(gc);
  EXPECT_EQ(nc.vertex_count(), 23u);
  EXPECT_EQ(nc.edge_count() + gc.edge_count(), 23u * 22u / 2u);
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(complete_graph(3)), 3u);
  EXPECT_FALSE(girth(path(7)).has_value());
  EXPECT_EQ(girth(cycle(6)), 6u);
  EXPECT_EQ(girth(petersen()), 5u);
  EXPECT_FALSE(girth(build_commuting_graph(groups::dicyclic(2))).has_value());
  EXPECT_TRUE(has_triangle(complete_graph(3)));
  EXPECT_FALSE(has_triangle(cycle(5)));
}

TEST(Girth, CommutingGraphsHaveGirthThreeOrInfinity) {
  for (const auto& e : catalog()) {
    const auto gi = girth(build_commuting_graph(e.build()));
    EXPECT_TRUE(!gi || *gi == 3) << e.name;
  }
}

TEST(Blocks, Examples) {
  const auto p = blocks(path(3));
  EXPECT_EQ(p.blocks.size(), 2u);
  EXPECT_EQ(p.cut_vertices, std::vector<vertex>{1});
  EXPECT_EQ(blocks(complete_graph(5)).blocks.size(), 1u);

  const auto s4 = blocks(build_commuting_graph(groups::symmetric(4)));
  std::multiset<std::size_t> sizes;
  for (const auto& b : s4.blocks) sizes.insert(b.size());
  EXPECT_EQ(sizes.count(3), 7u);
  EXPECT_EQ(sizes.count(2), 4u);
  EXPECT_EQ(sizes.size(), 11u);

  SimpleGraph iso(3);
  EXPECT_EQ(blocks(iso).isolated.size(), 3u);
  EXPECT_TRUE(blocks(iso).blocks.empty());
}

TEST(Blocks, PartitionEdgesAndAreBiconnectedOnCatalogGraphs) {
  for (const auto& e : catalog()) {
    if (e.order > 120) continue;
    const SimpleGraph g = build_commuting_graph(e.build());
    const auto d = blocks(g);
    std::size_t total = 0;
    std::set<std::pair<vertex, vertex>> seen;
    for (const auto& b : d.blocks) {
      const SimpleGraph h = induced_subgraph(g, b);
      total += h.edge_count();
      for (auto [u, v] : h.edges()) {
        auto key = std::minmax(b[u], b[v]);
        EXPECT_TRUE(seen.insert(key).second) << e.name << ": edge in two blocks";
      }
      if (b.size() > 2)
        for (vertex drop = 0; drop < b.size(); ++drop) {
          std::vector<vertex> rest;
          for (vertex i = 0; i < b.size(); ++i)
            if (i != drop) rest.push_back(b[i]);
          EXPECT_TRUE(is_connected(induced_subgraph(g, rest))) << e.name;
        }
    }
    EXPECT_EQ(total, g.edge_count()) << e.name;
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
      for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
        std::vector<vertex> common;
        std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(), d.blocks[j].begin(), d.blocks[j].end(),
                              std::back_inserter(common));
        EXPECT_LE(common.size(), 1u);
        if (common.size() == 1)
          EXPECT_TRUE(std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), common[0]));
      }
  }
}

TEST(Blocks, RandomGraphsPartitionEdges) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 12;
    SimpleGraph g(n);
    std::uniform_int_distribution<vertex> pick(0, static_cast<vertex>(n - 1));
    for (int k = 0; k < trial % 20; ++k) {
      const vertex a = pick(rng), b = pick(rng);
      if (a != b) g.add_edge(a, b);
    }
    std::size_t total = 0;
    for (const auto& b : blocks(g).blocks) total += edges_of(g, b);
    EXPECT_EQ(total, g.edge_count());
  }
}

TEST(Recognition, Examples) {
  EXPECT_EQ(recognize_complete(complete_graph(3)), 3u);
  EXPECT_FALSE(recognize_complete(cycle(6)).has_value());
  EXPECT_FALSE(recognize_complete_bipartite(cycle(6)).has_value());
  SimpleGraph star(5);
  for (vertex v = 1; v < 5; ++v) star.add_edge(0, v);
  EXPECT_EQ(recognize_complete_bipartite(star), (std::pair<std::size_t, std::size_t>{1, 4}));
  EXPECT_EQ(recognize_complete_bipartite(complete_bipartite_graph(4, 3)), (std::pair<std::size_t, std::size_t>{3, 4}));
  EXPECT_EQ(recognize_complete_bipartite(cycle(4)), (std::pair<std::size_t, std::size_t>{2, 2}));
}

TEST(Formulas, CompleteAndBipartite) {
  EXPECT_EQ(genus_complete(4), 0);
  EXPECT_EQ(genus_complete(7), 1);
  EXPECT_EQ(genus_complete(8), 2);
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(genus_complete(n), 0);
  EXPECT_THROW(genus_complete(-1), std::invalid_argument);
  EXPECT_EQ(genus_complete_bipartite(3, 3), 1);
  EXPECT_EQ(genus_complete_bipartite(2, 100), 0);
  EXPECT_EQ(genus_complete_bipartite(3, 11), 3);
  EXPECT_EQ(genus_complete_bipartite(1, 9), 0);
  EXPECT_THROW(genus_complete_bipartite(-1, 3), std::invalid_argument);
}

TEST(Planarity, Examples) {
  EXPECT_TRUE(is_planar(complete_graph(4)));
  EXPECT_FALSE(is_planar(complete_graph(5)));
  EXPECT_FALSE(is_planar(complete_bipartite_graph(3, 3)));
  EXPECT_FALSE(is_planar(petersen()));
  EXPECT_TRUE(is_planar(cycle(9)));
  EXPECT_TRUE(is_planar(SimpleGraph(0)));
}

TEST(Oracle, MatchesFormulas) {
  for (std::size_t n : {3, 4, 5}) EXPECT_EQ(genus_oracle(complete_graph(n)), genus_complete(static_cast<std::int64_t>(n)));
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}})
    EXPECT_EQ(genus_oracle(complete_bipartite_graph(m, n)), genus_complete_bipartite(m, n)) << m << "," << n;
  EXPECT_EQ(genus_oracle(petersen()), 1);
  EXPECT_EQ(genus_oracle(path(6)), 0);
}

TEST(Oracle, CapAndConnectivity) {
  EXPECT_FALSE(genus_oracle(complete_graph(6), 14).has_value());
  EXPECT_THROW(genus_oracle(disjoint_union(complete_graph(3), complete_graph(3))), graph_error);
}

TEST(Oracle, AgreesWithPlanarityAndBoundsOnRandomGraphs) {
  std::mt19937 rng(2024);
  int nonplanar = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 5 + trial % 5;
    const SimpleGraph g = random_connected(rng, n, std::min<std::size_t>(16, n * (n - 1) / 2));
    const auto o = genus_oracle(g);
    ASSERT_TRUE(o.has_value());
    EXPECT_EQ(is_planar(g), *o == 0) << "trial " << trial;
    EXPECT_LE(genus_lower_bound_euler(g), *o);
    EXPECT_LE(*o, genus_upper_bound_betti(g));
    nonplanar += *o > 0;
  }
  EXPECT_GT(nonplanar, 10);
}

TEST(Bounds, EulerAndBetti) {
  EXPECT_EQ(genus_lower_bound_euler(complete_graph(7)), 1);
  EXPECT_EQ(genus_upper_bound_betti(complete_graph(7)), 7);
  EXPECT_EQ(genus_lower_bound_euler(path(5)), 0);
  EXPECT_EQ(genus_upper_bound_betti(path(5)), 0);
  EXPECT_EQ(genus_lower_bound_euler(complete_graph(5)), 1);
  EXPECT_EQ(genus_upper_bound_betti(complete_graph(5)), 3);
  EXPECT_THROW(genus_lower_bound_euler(SimpleGraph(3)), graph_error);
}

TEST(Bounds, DisjointCliques) {
  const SimpleGraph g55 = disjoint_union(complete_graph(5), complete_graph(5));
  std::vector<vertex> a{0, 1, 2, 3, 4}, b{5, 6, 7, 8, 9};
  EXPECT_EQ(disjoint_clique_lower_bound(g55, a, b), 2);
  const SimpleGraph g44 = disjoint_union(complete_graph(4), complete_graph(4));
  EXPECT_EQ(disjoint_clique_lower_bound(g44, {0, 1, 2, 3}, {4, 5, 6, 7}), 0);
  const SimpleGraph g65 = disjoint_union(complete_graph(6), complete_graph(5));
  EXPECT_EQ(disjoint_clique_lower_bound(g65, {0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}), 2);
  EXPECT_THROW(disjoint_clique_lower_bound(g55, a, {4, 5, 6}), graph_error);
  EXPECT_THROW(disjoint_clique_lower_bound(g55, {0, 5}, {1, 2}), graph_error);
}

TEST(Cliques, MaxCliqueExactOnSmallGraphs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 6 + trial % 8;
    SimpleGraph g(n);
    std::bernoulli_distribution coin(0.5);
    for (vertex u = 0; u < n; ++u)
      for (vertex v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<vertex> s;
      for (vertex v = 0; v < n; ++v)
        if (mask >> v & 1) s.push_back(v);
      if (s.size() > best && is_clique(g, s)) best = s.size();
    }
    const auto c = max_clique(g);
    EXPECT_TRUE(is_clique(g, c));
    EXPECT_EQ(c.size(), best);
  }
}

TEST(GenusOfGraph, Dispatch) {
  const auto r = genus_of_graph(disjoint_union(complete_graph(5), complete_graph(6)));
  EXPECT_TRUE(r.is_exact());
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.certificate, Certificate::BlockSum);
  EXPECT_EQ(genus_of_graph(SimpleGraph(4)).value, 0);
  EXPECT_EQ(genus_of_graph(complete_bipartite_graph(3, 5)).certificate, Certificate::BipartiteFormula);
  EXPECT_EQ(genus_of_graph(cycle(7)).certificate, Certificate::PlanarTest);
  EXPECT_EQ(genus_of_graph(petersen()).certificate, Certificate::RotationOracle);

  // Two blocks sharing a vertex: K5 and K3,3 glued at one point.
  SimpleGraph glued(10);
  for (vertex u = 0; u < 5; ++u)
    for (vertex v = u + 1; v < 5; ++v) glued.add_edge(u, v);
  for (vertex u : {4, 5, 6})
    for (vertex v : {7, 8, 9}) glued.add_edge(u, v);
  const GraphGenus gg = analyze_genus(glued);
  EXPECT_EQ(gg.blocks.size(), 2u);
  EXPECT_EQ(gg.total.value, 2);
}

TEST(GenusOfGraph, UnresolvedBlocksGiveBounds) {
  // Petersen graph with one chord is beyond a tiny oracle cap.
  SimpleGraph g = petersen();
  g.add_edge(0, 7);
  const auto r = genus_of_graph(g, 10);
  EXPECT_FALSE(r.is_exact());
  EXPECT_GE(r.lower, 1);
  EXPECT_LE(r.lower, r.upper);
  const auto exact = genus_of_graph(g);
  ASSERT_TRUE(exact.is_exact());
  EXPECT_GE(exact.value, r.lower);
  EXPECT_LE(exact.value, r.upper);
}

TEST(TextFormats, DotAndEdgeList) {
  SimpleGraph g(3);
  g.add_edge(0, 2);
  g.set_labels({"a", "b\"q", "c"});
  const std::string dot = to_dot(g);
  EXPECT_NE(dot.find("0 -- 2"), std::string::npos);
  EXPECT_NE(dot.find("label=\"b\\\"q\""), std::string::npos);

  std::stringstream ss;
  write_edge_list(ss, petersen());
  EXPECT_EQ(read_edge_list(ss), petersen());

  std::istringstream bad("3 2\n0 1\n1 7\n");
  try {
    read_edge_list(bad);
    FAIL() << "expected an error";
  } catch (const graph_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::istringstream short_list("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(short_list), graph_error);
}
