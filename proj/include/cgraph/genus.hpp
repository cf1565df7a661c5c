#pragma once

// Orientable genus: closed forms, Euler-type bounds, an exhaustive rotation-system oracle,
// and block-wise dispatch for arbitrary graphs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgraph/clique.hpp"
#include "cgraph/graph.hpp"
#include "cgraph/planarity.hpp"

namespace cgraph {

inline constexpr std::size_t default_oracle_cap = 16;

enum class GenusKind { Exact, Bounds };
enum class Certificate { CompleteFormula, BipartiteFormula, PlanarTest, RotationOracle, BlockSum };
enum class LowerSource { EulerLower, DisjointCliqueLower };
enum class UpperSource { BettiUpper };

inline const char* to_string(GenusKind k) { return k == GenusKind::Exact ? "exact" : "bounds"; }
inline const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::CompleteFormula: return "complete_formula";
    case Certificate::BipartiteFormula: return "bipartite_formula";
    case Certificate::PlanarTest: return "planar_test";
    case Certificate::RotationOracle: return "rotation_oracle";
    case Certificate::BlockSum: return "block_sum";
  }
  return "?";
}
inline const char* to_string(LowerSource s) {
  return s == LowerSource::EulerLower ? "euler_lower" : "disjoint_clique_lower";
}
inline const char* to_string(UpperSource) { return "betti_upper"; }

/// Either an exact genus with the way it was obtained, or an interval lower..upper.
struct GenusResult {
  GenusKind kind = GenusKind::Exact;
  std::int64_t value = 0;
  Certificate certificate = Certificate::BlockSum;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  LowerSource lower_source = LowerSource::EulerLower;
  UpperSource upper_source = UpperSource::BettiUpper;

  static GenusResult exact(std::int64_t v, Certificate c) {
    if (v < 0) throw std::invalid_argument("negative genus");
    GenusResult r;
    r.kind = GenusKind::Exact;
    r.value = r.lower = r.upper = v;
    r.certificate = c;
    return r;
  }
  static GenusResult bounds(std::int64_t lo, std::int64_t hi, LowerSource ls) {
    if (lo < 0 || lo > hi) throw std::invalid_argument("invalid genus bounds");
    GenusResult r;
    r.kind = GenusKind::Bounds;
    r.lower = lo;
    r.upper = hi;
    r.lower_source = ls;
    return r;
  }

  bool is_exact() const { return kind == GenusKind::Exact; }
  /// Lower end; equals value when exact.
  std::int64_t at_least() const { return is_exact() ? value : lower; }
  std::int64_t at_most() const { return is_exact() ? value : upper; }
};

namespace detail {
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}
}  // namespace detail

/// Genus of K_n: ceil((n-3)(n-4)/12), and 0 for n <= 2.
inline std::int64_t genus_complete(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("genus_complete: negative vertex count");
  if (n <= 4) return 0;
  return detail::ceil_div((n - 3) * (n - 4), 12);
}

/// Genus of K_{m,n}: ceil((m-2)(n-2)/4), and 0 when either side has at most one vertex.
inline std::int64_t genus_complete_bipartite(std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) throw std::invalid_argument("genus_complete_bipartite: negative part size");
  if (std::min(m, n) <= 2) return 0;
  return detail::ceil_div((m - 2) * (n - 2), 4);
}

inline void require_connected(const SimpleGraph& g, const char* what) {
  if (!is_connected(g)) throw graph_error(std::string(what) + ": graph is disconnected");
}

/// max(0, ceil((E - 3V + 6)/6)) for a connected graph.
inline std::int64_t genus_lower_bound_euler(const SimpleGraph& g) {
  require_connected(g, "genus_lower_bound_euler");
  const auto v = static_cast<std::int64_t>(g.vertex_count());
  const auto e = static_cast<std::int64_t>(g.edge_count());
  if (v < 3) return 0;
  return std::max<std::int64_t>(0, detail::ceil_div(e - 3 * v + 6, 6));
}

/// floor((E - V + 1)/2), half the cycle rank, for a connected graph.
inline std::int64_t genus_upper_bound_betti(const SimpleGraph& g) {
  require_connected(g, "genus_upper_bound_betti");
  const auto v = static_cast<std::int64_t>(g.vertex_count());
  const auto e = static_cast<std::int64_t>(g.edge_count());
  return std::max<std::int64_t>(0, (e - v + 1) / 2);
}

/// gamma(K_|a|) + gamma(K_|b|) for two vertex-disjoint cliques a, b of g.
inline std::int64_t disjoint_clique_lower_bound(const SimpleGraph& g, const std::vector<vertex>& a,
                                                const std::vector<vertex>& b) {
  if (!is_clique(g, a) || !is_clique(g, b)) throw graph_error("supplied vertex set is not a clique");
  for (vertex x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) throw graph_error("supplied cliques are not disjoint");
  return genus_complete(static_cast<std::int64_t>(a.size())) + genus_complete(static_cast<std::int64_t>(b.size()));
}

/// Sum of gamma(K_|c|) over a greedy packing of vertex-disjoint cliques (each of size >= 5).
inline std::int64_t clique_packing_lower_bound(const SimpleGraph& g) {
  std::int64_t total = 0;
  for (const auto& c : disjoint_clique_packing(g, 5)) total += genus_complete(static_cast<std::int64_t>(c.size()));
  return total;
}

// ---------------------------------------------------------------------------
// Rotation-system oracle

namespace detail {

class rotation_search {
public:
  explicit rotation_search(const SimpleGraph& g) : g_(g) {
    const std::size_t n = g.vertex_count();
    offset_.assign(n + 1, 0);
    for (vertex v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + g.degree(v);
    const std::size_t darts = offset_[n];
    head_.resize(darts);
    head_slot_.resize(darts);
    for (vertex u = 0; u < n; ++u) {
      const auto& nb = g.neighbors(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const vertex v = nb[i];
        head_[offset_[u] + i] = v;
        const auto& nv = g.neighbors(v);
        head_slot_[offset_[u] + i] = static_cast<std::size_t>(std::lower_bound(nv.begin(), nv.end(), u) - nv.begin());
      }
    }
    next_slot_.resize(darts);
    for (vertex v = 0; v < n; ++v)
      for (std::size_t i = 0; i < g.degree(v); ++i) next_slot_[offset_[v] + i] = (i + 1) % g.degree(v);
    assigned_.assign(n, 0);
    visited_.assign(darts, 0);

    // Max-degree vertex first, then BFS so faces close early.
    vertex start = 0;
    for (vertex v = 0; v < n; ++v)
      if (g.degree(v) > g.degree(start)) start = v;
    std::vector<char> seen(n, 0);
    order_.push_back(start);
    seen[start] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (vertex w : g.neighbors(order_[i]))
        if (!seen[w]) {
          seen[w] = 1;
          order_.push_back(w);
        }
  }

  std::size_t max_faces(std::size_t target) {
    target_ = target;
    best_ = 0;
    if (!order_.empty()) assign(0);
    return best_;
  }

private:
  std::size_t successor(std::size_t d) const {
    const vertex v = head_[d];
    return offset_[v] + next_slot_[offset_[v] + head_slot_[d]];
  }

  // Closed faces among darts whose heads are all assigned, and the number of darts they use.
  std::pair<std::size_t, std::size_t> closed_faces() {
    std::fill(visited_.begin(), visited_.end(), 0);
    std::size_t faces = 0, used = 0;
    for (std::size_t d = 0; d < visited_.size(); ++d) {
      if (visited_[d]) continue;
      std::size_t cur = d, len = 0;
      bool closed = false;
      for (;;) {
        visited_[cur] = 1;
        ++len;
        if (!assigned_[head_[cur]]) break;
        cur = successor(cur);
        if (cur == d) {
          closed = true;
          break;
        }
        if (visited_[cur]) break;
      }
      if (closed) {
        ++faces;
        used += len;
      }
    }
    return {faces, used};
  }

  void assign(std::size_t depth) {
    if (best_ >= target_) return;
    const vertex v = order_[depth];
    const std::size_t d = g_.degree(v);
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    assigned_[v] = 1;
    // Cyclic orders: slot 0 first, the rest permuted. At the first vertex, keep only one of
    // each mirror pair, since reversing every rotation preserves the face count.
    do {
      if (depth == 0 && d >= 3 && perm[1] > perm[d - 1]) continue;
      for (std::size_t i = 0; i < d; ++i) next_slot_[offset_[v] + perm[i]] = perm[(i + 1) % d];
      auto [faces, used] = closed_faces();
      if (depth + 1 == order_.size()) {
        best_ = std::max(best_, faces);
      } else if (faces + (visited_.size() - used) / 3 > best_) {
        assign(depth + 1);
      }
      if (best_ >= target_) break;
    } while (d > 1 && std::next_permutation(perm.begin() + 1, perm.end()));
    assigned_[v] = 0;
  }

  const SimpleGraph& g_;
  std::vector<std::size_t> offset_, head_slot_, next_slot_;
  std::vector<vertex> head_;
  std::vector<char> assigned_, visited_;
  std::vector<vertex> order_;
  std::size_t best_ = 0, target_ = 0;
};

/// Repeatedly deletes degree-1 vertices; genus is unchanged.
inline SimpleGraph strip_leaves(const SimpleGraph& g) {
  std::vector<std::size_t> deg(g.vertex_count());
  std::vector<char> removed(g.vertex_count(), 0);
  std::vector<vertex> queue;
  for (vertex v = 0; v < g.vertex_count(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) queue.push_back(v);
  }
  std::size_t alive = g.vertex_count();
  while (!queue.empty() && alive > 1) {
    vertex v = queue.back();
    queue.pop_back();
    if (removed[v] || deg[v] != 1) continue;
    removed[v] = 1;
    --alive;
    for (vertex w : g.neighbors(v))
      if (!removed[w] && --deg[w] == 1) queue.push_back(w);
  }
  std::vector<vertex> keep;
  for (vertex v = 0; v < g.vertex_count(); ++v)
    if (!removed[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

}  // namespace detail

/// Exact genus of a connected graph by exhaustive search over rotation systems, or nullopt when
/// the graph has more than `edge_cap` edges. Throws graph_error on disconnected input.
inline std::optional<std::int64_t> genus_oracle(const SimpleGraph& g, std::size_t edge_cap = default_oracle_cap) {
  if (g.vertex_count() == 0) return 0;
  require_connected(g, "genus_oracle");
  if (g.edge_count() > edge_cap) return std::nullopt;
  const SimpleGraph core = detail::strip_leaves(g);
  const auto v = static_cast<std::int64_t>(core.vertex_count());
  const auto e = static_cast<std::int64_t>(core.edge_count());
  if (e <= 1) return 0;
  // Euler-bound face count: no embedding can have more faces than this.
  const std::int64_t lower = genus_lower_bound_euler(core);
  const auto target = static_cast<std::size_t>(2 - v + e - 2 * lower);
  const auto faces = static_cast<std::int64_t>(detail::rotation_search(core).max_faces(target));
  return (2 - v + e - faces) / 2;
}

// ---------------------------------------------------------------------------
// Block-wise dispatch

enum class BlockType { Complete, CompleteBipartite, Planar, Oracle, Unresolved };

inline const char* to_string(BlockType t) {
  switch (t) {
    case BlockType::Complete: return "complete";
    case BlockType::CompleteBipartite: return "complete_bipartite";
    case BlockType::Planar: return "planar";
    case BlockType::Oracle: return "oracle";
    case BlockType::Unresolved: return "unresolved";
  }
  return "?";
}

struct BlockGenus {
  std::vector<vertex> vertices;
  std::size_t edges = 0;
  BlockType type = BlockType::Planar;
  std::size_t complete_n = 0;                      // when Complete
  std::pair<std::size_t, std::size_t> parts{0, 0};  // when CompleteBipartite
  GenusResult genus;
};

struct GraphGenus {
  BlockDecomposition decomposition;
  std::vector<BlockGenus> blocks;  // parallel to decomposition.blocks
  GenusResult total;
};

/// Genus of a single biconnected piece (or a K2).
inline BlockGenus block_genus(const SimpleGraph& block, std::size_t oracle_cap = default_oracle_cap) {
  BlockGenus out;
  out.edges = block.edge_count();
  if (auto n = recognize_complete(block)) {
    out.type = BlockType::Complete;
    out.complete_n = *n;
    out.genus = GenusResult::exact(genus_complete(static_cast<std::int64_t>(*n)), Certificate::CompleteFormula);
  } else if (auto mn = recognize_complete_bipartite(block)) {
    out.type = BlockType::CompleteBipartite;
    out.parts = *mn;
    out.genus = GenusResult::exact(
        genus_complete_bipartite(static_cast<std::int64_t>(mn->first), static_cast<std::int64_t>(mn->second)),
        Certificate::BipartiteFormula);
  } else if (is_planar(block)) {
    out.type = BlockType::Planar;
    out.genus = GenusResult::exact(0, Certificate::PlanarTest);
  } else if (auto og = genus_oracle(block, oracle_cap)) {
    out.type = BlockType::Oracle;
    out.genus = GenusResult::exact(*og, Certificate::RotationOracle);
  } else {
    out.type = BlockType::Unresolved;
    // Non-planar, so at least 1.
    const std::int64_t euler = std::max<std::int64_t>(1, genus_lower_bound_euler(block));
    const std::int64_t cliques = clique_packing_lower_bound(block);
    const std::int64_t upper = genus_upper_bound_betti(block);
    if (cliques > euler)
      out.genus = GenusResult::bounds(cliques, std::max(cliques, upper), LowerSource::DisjointCliqueLower);
    else
      out.genus = GenusResult::bounds(euler, std::max(euler, upper), LowerSource::EulerLower);
  }
  return out;
}

/// Decomposes into blocks and sums their genera (additivity over blocks, and over connected
/// components). Exact iff every block is exact.
inline GraphGenus analyze_genus(const SimpleGraph& g, std::size_t oracle_cap = default_oracle_cap) {
  GraphGenus out;
  out.decomposition = blocks(g);
  std::int64_t lo = 0, hi = 0;
  bool exact = true;
  LowerSource ls = LowerSource::EulerLower;
  for (const auto& b : out.decomposition.blocks) {
    BlockGenus bg = block_genus(induced_subgraph(g, b), oracle_cap);
    bg.vertices = b;
    lo += bg.genus.at_least();
    hi += bg.genus.at_most();
    if (!bg.genus.is_exact()) {
      exact = false;
      if (bg.genus.lower_source == LowerSource::DisjointCliqueLower) ls = LowerSource::DisjointCliqueLower;
    }
    out.blocks.push_back(std::move(bg));
  }
  if (exact) {
    Certificate c = out.blocks.size() == 1 ? out.blocks.front().genus.certificate : Certificate::BlockSum;
    out.total = GenusResult::exact(lo, c);
  } else {
    out.total = GenusResult::bounds(lo, hi, ls);
  }
  return out;
}

inline GenusResult genus_of_graph(const SimpleGraph& g, std::size_t oracle_cap = default_oracle_cap) {
  return analyze_genus(g, oracle_cap).total;
}

}  // namespace cgraph
