#pragma once

// Exact maximum clique (branch and bound with greedy colouring bounds).

#include <algorithm>
#include <vector>

#include "cgraph/bits.hpp"
#include "cgraph/graph.hpp"

namespace cgraph {

namespace detail {

class clique_search {
public:
  explicit clique_search(const SimpleGraph& g) : n_(g.vertex_count()) {
    adj_.reserve(n_);
    for (vertex v = 0; v < n_; ++v) adj_.push_back(g.neighbor_bits(v));
  }

  std::vector<vertex> run(const bitset& allowed) {
    best_.clear();
    current_.clear();
    expand(allowed);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

private:
  void expand(bitset p) {
    std::vector<vertex> order;
    std::vector<std::size_t> colors;
    colour(p, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colors[i] <= best_.size()) return;
      const vertex v = order[i];
      current_.push_back(v);
      bitset next = p & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  // Sequential greedy colouring; order[i] has colour colors[i], colours nondecreasing.
  void colour(const bitset& p, std::vector<vertex>& order, std::vector<std::size_t>& colors) const {
    bitset uncoloured = p;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      bitset q = uncoloured;
      while (q.any()) {
        const auto v = static_cast<vertex>(q.first());
        q.reset(v);
        q.subtract(adj_[v]);
        uncoloured.reset(v);
        order.push_back(v);
        colors.push_back(k);
      }
    }
  }

  std::size_t n_;
  std::vector<bitset> adj_;
  std::vector<vertex> best_;
  std::vector<vertex> current_;
};

}  // namespace detail

/// A maximum clique of g (sorted vertex list; empty for the empty graph).
inline std::vector<vertex> max_clique(const SimpleGraph& g) {
  bitset all(g.vertex_count());
  for (vertex v = 0; v < g.vertex_count(); ++v) all.set(v);
  return detail::clique_search(g).run(all);
}

inline bool is_clique(const SimpleGraph& g, const std::vector<vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || !g.has_edge(s[i], s[j])) return false;
  }
  return true;
}

/// Greedy packing: repeatedly removes a maximum clique of the remaining graph while it has at
/// least `min_size` vertices.
inline std::vector<std::vector<vertex>> disjoint_clique_packing(const SimpleGraph& g, std::size_t min_size) {
  detail::clique_search search(g);
  bitset remaining(g.vertex_count());
  for (vertex v = 0; v < g.vertex_count(); ++v) remaining.set(v);
  std::vector<std::vector<vertex>> out;
  while (remaining.any()) {
    auto c = search.run(remaining);
    if (c.size() < std::max<std::size_t>(min_size, 1)) break;
    for (vertex v : c) remaining.reset(v);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cgraph
