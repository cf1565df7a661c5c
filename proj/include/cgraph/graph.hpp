#pragma once

// Simple undirected graphs and the structural operations the genus engine needs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgraph/bits.hpp"

namespace cgraph {

using vertex = std::uint32_t;

class graph_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SimpleGraph {
public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n) {}
  SimpleGraph(std::size_t n, const std::vector<std::pair<vertex, vertex>>& edges) : adj_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  /// Adds {u,v}; a repeated edge is ignored, a loop throws.
  void add_edge(vertex u, vertex v) {
    if (u >= adj_.size() || v >= adj_.size()) throw graph_error("edge endpoint out of range");
    if (u == v) throw graph_error("loops are not allowed in a simple graph");
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v) return;
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edges_;
  }

  bool has_edge(vertex u, vertex v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }
  const std::vector<vertex>& neighbors(vertex v) const { return adj_[v]; }
  std::size_t degree(vertex v) const { return adj_[v].size(); }

  std::vector<std::pair<vertex, vertex>> edges() const {
    std::vector<std::pair<vertex, vertex>> out;
    out.reserve(edges_);
    for (vertex u = 0; u < adj_.size(); ++u)
      for (vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != adj_.size()) throw graph_error("label count does not match vertex count");
    labels_ = std::move(labels);
  }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

  bitset neighbor_bits(vertex v) const {
    bitset b(adj_.size());
    for (vertex w : adj_[v]) b.set(w);
    return b;
  }

  bool operator==(const SimpleGraph& o) const { return adj_ == o.adj_; }

private:
  std::vector<std::vector<vertex>> adj_;
  std::size_t edges_ = 0;
  std::vector<std::string> labels_;
};

inline SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline SimpleGraph complete_bipartite_graph(std::size_t m, std::size_t n) {
  SimpleGraph g(m + n);
  for (vertex u = 0; u < m; ++u)
    for (vertex v = 0; v < n; ++v) g.add_edge(u, static_cast<vertex>(m + v));
  return g;
}

/// Vertices of `u` (any order, duplicates ignored) become 0..k-1 in increasing original order.
inline SimpleGraph induced_subgraph(const SimpleGraph& g, std::vector<vertex> u) {
  if (u.empty()) throw graph_error("induced subgraph on an empty vertex set");
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (u.back() >= g.vertex_count()) throw graph_error("vertex out of range");
  std::vector<std::int64_t> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < u.size(); ++i) pos[u[i]] = static_cast<std::int64_t>(i);
  SimpleGraph h(u.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (vertex w : g.neighbors(u[i]))
      if (pos[w] > static_cast<std::int64_t>(i)) h.add_edge(static_cast<vertex>(i), static_cast<vertex>(pos[w]));
    if (!g.labels().empty()) labels.push_back(g.labels()[u[i]]);
  }
  h.set_labels(std::move(labels));
  return h;
}

inline SimpleGraph complement(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  SimpleGraph h(n);
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  h.set_labels(g.labels());
  return h;
}

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<vertex>> connected_components(const SimpleGraph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<vertex>> out;
  for (vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<vertex> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (vertex w : g.neighbors(members[i]))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

/// Length of a shortest cycle, or nullopt when the graph is acyclic (girth infinity).
inline std::optional<std::size_t> girth(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<std::int64_t> parent(n);
  std::vector<vertex> queue;
  for (vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    dist[s] = 0;
    parent[s] = -1;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      vertex u = queue[i];
      if (2 * dist[u] + 1 >= best) break;
      for (vertex w : g.neighbors(u)) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != static_cast<std::int64_t>(w)) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    if (best == 3) break;
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

inline bool has_triangle(const SimpleGraph& g) {
  for (vertex u = 0; u < g.vertex_count(); ++u)
    for (vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (vertex w : g.neighbors(v))
        if (w > v && g.has_edge(u, w)) return true;
    }
  return false;
}

struct BlockDecomposition {
  std::vector<std::vector<vertex>> blocks;  // each sorted; ordered lexicographically
  std::vector<vertex> cut_vertices;         // sorted
  std::vector<vertex> isolated;             // vertices of degree 0, sorted
};

/// Biconnected components (bridges become two-vertex blocks) by an iterative Hopcroft-Tarjan walk.
inline BlockDecomposition blocks(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  BlockDecomposition out;
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<std::pair<vertex, vertex>> edge_stack;
  std::size_t timer = 0;

  struct frame {
    vertex v;
    std::int64_t parent;
    std::size_t next;
    std::size_t children;
  };

  for (vertex root = 0; root < n; ++root) {
    if (g.degree(root) == 0) {
      out.isolated.push_back(root);
      continue;
    }
    if (disc[root]) continue;
    std::vector<frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = ++timer;
    while (!stack.empty()) {
      frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        vertex w = nb[f.next++];
        if (!disc[w]) {
          edge_stack.emplace_back(f.v, w);
          ++f.children;
          disc[w] = low[w] = ++timer;
          stack.push_back({w, static_cast<std::int64_t>(f.v), 0, 0});
        } else if (static_cast<std::int64_t>(w) != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut[done.v] = 1;
        continue;
      }
      frame& p = stack.back();
      low[p.v] = std::min(low[p.v], low[done.v]);
      if (low[done.v] >= disc[p.v]) {
        if (p.parent >= 0) is_cut[p.v] = 1;
        std::vector<vertex> block;
        for (;;) {
          auto [a, b] = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(a);
          block.push_back(b);
          if (a == p.v && b == done.v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
  }
  for (vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

/// Some(n) iff g is isomorphic to K_n (n >= 1).
inline std::optional<std::size_t> recognize_complete(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return std::nullopt;
  if (g.edge_count() == n * (n - 1) / 2) return n;
  return std::nullopt;
}

/// Some(m, n) with m <= n iff g is isomorphic to K_{m,n} with m, n >= 1.
inline std::optional<std::pair<std::size_t, std::size_t>> recognize_complete_bipartite(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || !is_connected(g)) return std::nullopt;
  std::vector<int> color(n, -1);
  color[0] = 0;
  std::vector<vertex> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    vertex u = queue[i];
    for (vertex w : g.neighbors(u)) {
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        queue.push_back(w);
      } else if (color[w] == color[u]) {
        return std::nullopt;
      }
    }
  }
  std::size_t a = static_cast<std::size_t>(std::count(color.begin(), color.end(), 0));
  std::size_t b = n - a;
  if (g.edge_count() != a * b) return std::nullopt;
  return std::make_pair(std::min(a, b), std::max(a, b));
}

// ---------------------------------------------------------------------------
// Text formats

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

/// Undirected DOT with quoted labels; vertices and edges in index order.
inline void write_dot(std::ostream& os, const SimpleGraph& g, const std::string& name = "G") {
  os << "graph \"" << dot_escape(name) << "\" {\n";
  for (vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

inline std::string to_dot(const SimpleGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  write_dot(os, g, name);
  return os.str();
}

/// "V E" header, then E lines "u v" with 0-based endpoints. Blank lines and '#' comments are skipped.
inline SimpleGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++lineno;
      auto hash = out.find('#');
      if (hash != std::string::npos) out.erase(hash);
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) { throw graph_error("line " + std::to_string(lineno) + ": " + msg); };
  if (!next_line(line)) throw graph_error("line 1: missing 'V E' header");
  std::istringstream hs(line);
  long long nv = -1, ne = -1;
  std::string extra;
  if (!(hs >> nv >> ne) || nv < 0 || ne < 0 || (hs >> extra)) fail("expected 'V E' header");
  SimpleGraph g(static_cast<std::size_t>(nv));
  for (long long i = 0; i < ne; ++i) {
    if (!next_line(line)) fail("expected " + std::to_string(ne) + " edges, found " + std::to_string(i));
    std::istringstream es(line);
    long long u = -1, v = -1;
    if (!(es >> u >> v) || (es >> extra)) fail("expected 'u v'");
    if (u < 0 || v < 0 || u >= nv || v >= nv) fail("endpoint out of range");
    if (u == v) fail("loop edge");
    g.add_edge(static_cast<vertex>(u), static_cast<vertex>(v));
  }
  if (next_line(line)) fail("unexpected trailing content");
  return g;
}

inline void write_edge_list(std::ostream& os, const SimpleGraph& g) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

}  // namespace cgraph
