#pragma once

// Abelian subgroup enumeration by iterated centralizing extension.

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "cgraph/bits.hpp"
#include "cgraph/group.hpp"

namespace cgraph {

inline bitset cyclic_subgroup(const FiniteGroup& g, element x) {
  bitset h(g.order());
  element y = g.identity();
  do {
    h.set(y);
    y = g.mul(y, x);
  } while (y != g.identity());
  return h;
}

/// Elements commuting with every member of h.
inline bitset centralizer_of_set(const FiniteGroup& g, const bitset& h) {
  bitset c(g.order());
  for (element a = 0; a < g.order(); ++a) c.set(a);
  h.for_each([&](std::size_t a) { c &= g.centralizer_bits(static_cast<element>(a)); });
  return c;
}

/// Every abelian subgroup of g (including the trivial one), in no particular order.
///
/// Seeds are the cyclic subgroups; each found subgroup H is extended by every x in C(H) \ H
/// to H<x>. Elements x, y with H<x> = H<y> produce the same extension, so once H<x> is
/// known every generator of the cyclic quotient H<x>/H is skipped.
inline std::vector<bitset> abelian_subgroups(const FiniteGroup& g) {
  std::unordered_set<bitset, bitset_hash> found;
  std::vector<bitset> work;
  for (element x = 0; x < g.order(); ++x) {
    bitset c = cyclic_subgroup(g, x);
    if (found.insert(c).second) work.push_back(std::move(c));
  }
  std::vector<bitset> all(work.begin(), work.end());
  while (!work.empty()) {
    bitset h = std::move(work.back());
    work.pop_back();
    const std::vector<std::size_t> h_elems = h.indices();
    bitset cand = centralizer_of_set(g, h);
    cand.subtract(h);
    bitset skip(g.order());
    cand.for_each([&](std::size_t xi) {
      if (skip.test(xi)) return;
      const auto x = static_cast<element>(xi);
      bitset k(g.order());
      std::size_t index = 0;  // |K:H|
      for (element p = g.identity();; p = g.mul(p, x)) {
        if (h.test(p) && index > 0) break;
        for (auto a : h_elems) k.set(g.mul(static_cast<element>(a), p));
        ++index;
      }
      // y generates K/H iff its coset has order |K:H|
      k.for_each([&](std::size_t yi) {
        if (h.test(yi)) return;
        std::size_t o = 1;
        for (element p = static_cast<element>(yi); !h.test(p); p = g.mul(p, static_cast<element>(yi))) ++o;
        if (o == index) skip.set(yi);
      });
      if (found.insert(k).second) {
        all.push_back(k);
        work.push_back(std::move(k));
      }
    });
  }
  return all;
}

inline std::set<std::size_t> abelian_subgroup_orders(const FiniteGroup& g) {
  std::set<std::size_t> out;
  for (const auto& h : abelian_subgroups(g)) out.insert(h.count());
  return out;
}

inline bool exists_abelian_subgroup_of_order(const FiniteGroup& g, std::size_t k) {
  return abelian_subgroup_orders(g).count(k) > 0;
}

inline std::size_t max_abelian_subgroup_order(const FiniteGroup& g) {
  return *abelian_subgroup_orders(g).rbegin();
}

}  // namespace cgraph
