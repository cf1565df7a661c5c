#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "cgraph/graph.hpp"

namespace cgraph {

/// Boyer-Myrvold planarity test, linear time.
inline bool is_planar(const SimpleGraph& g) {
  // Euler: a simple planar graph on V >= 3 vertices has at most 3V - 6 edges.
  if (g.vertex_count() >= 3 && g.edge_count() > 3 * g.vertex_count() - 6) return false;
  using bgraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  bgraph b(g.vertex_count());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, b);
  return boost::boyer_myrvold_planarity_test(b);
}

}  // namespace cgraph
