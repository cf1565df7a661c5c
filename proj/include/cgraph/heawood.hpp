#pragma once

// Genus-derived bounds on commuting sets, centers, abelian subgroups and group order,
// and their check against a concrete group.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cgraph/clique.hpp"
#include "cgraph/commuting.hpp"
#include "cgraph/subgroups.hpp"

namespace cgraph {

using big_int = boost::multiprecision::cpp_int;

inline std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw std::invalid_argument("isqrt of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

/// floor((7 + sqrt(1 + 48 g)) / 2). Since 7 + floor(s) and 7 + s share a floor after halving,
/// the integer square root gives the exact value.
inline std::int64_t heawood_h(std::int64_t genus) {
  if (genus < 0) throw std::invalid_argument("heawood_h: negative genus");
  return (7 + isqrt(1 + 48 * genus)) / 2;
}

struct HeawoodBounds {
  std::int64_t genus = 0;
  std::int64_t h = 0;                          // bound on pairwise-commuting non-central sets
  std::optional<std::int64_t> center_bound;    // floor(h / (t - 1))
  std::optional<std::int64_t> abelian_bound;   // h + |A n Z(G)|
  std::int64_t order_base = 0;                 // order bound is base^exponent
  std::int64_t order_exponent = 0;

  /// The order bound as an exact integer. Only sensible for small genus.
  big_int order_bound() const {
    return boost::multiprecision::pow(big_int(order_base), static_cast<unsigned>(order_exponent));
  }

  /// Exact test of n < base^exponent, stopping as soon as the partial power exceeds n.
  bool order_bound_exceeds(const big_int& n) const {
    big_int acc = 1;
    for (std::int64_t i = 0; i < order_exponent; ++i) {
      acc *= order_base;
      if (acc > n) return true;
    }
    return acc > n;
  }
};

inline HeawoodBounds heawood_bounds(std::int64_t genus, std::optional<std::int64_t> t = std::nullopt,
                                    std::optional<std::int64_t> center_overlap = std::nullopt) {
  if (t && *t < 2) throw std::invalid_argument("heawood_bounds: t must be at least 2");
  HeawoodBounds b;
  b.genus = genus;
  b.h = heawood_h(genus);
  if (t) b.center_bound = b.h / (*t - 1);
  if (center_overlap) b.abelian_bound = b.h + *center_overlap;
  b.order_base = 2 * b.h;
  b.order_exponent = b.h * (4 * b.h + 1) * (4 * b.h + 1);
  return b;
}

struct BoundCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Checks the clique, center, abelian-subgroup and order bounds implied by the report's exact genus.
inline std::vector<BoundCheck> check_bounds_against_group(const FiniteGroup& g, const CommutingGraphReport& report) {
  if (!report.total().is_exact()) throw std::invalid_argument("bound check needs an exact genus");
  const std::int64_t genus = report.total().value;
  const std::int64_t t = static_cast<std::int64_t>(quotient_exponent_t(g));
  const HeawoodBounds hb = heawood_bounds(genus, t);
  std::vector<BoundCheck> out;

  {
    auto clique = max_clique(report.graph);
    std::ostringstream os;
    os << "max commuting set " << clique.size() << " <= h=" << hb.h << " witness {";
    for (std::size_t i = 0; i < clique.size(); ++i) os << (i ? ", " : "") << report.graph.label(clique[i]);
    os << "}";
    out.push_back({"clique", static_cast<std::int64_t>(clique.size()) <= hb.h, os.str()});
  }
  {
    std::ostringstream os;
    os << "|Z|=" << report.center_order << " <= floor(h/(t-1))=" << *hb.center_bound << " with t=" << t;
    out.push_back({"center", static_cast<std::int64_t>(report.center_order) <= *hb.center_bound, os.str()});
  }
  {
    const bitset z = center_bits(g);
    bool ok = true;
    std::int64_t worst_slack = std::numeric_limits<std::int64_t>::max();
    std::size_t worst_size = 0, count = 0;
    for (const auto& a : abelian_subgroups(g)) {
      ++count;
      const auto size = static_cast<std::int64_t>(a.count());
      const auto bound = hb.h + static_cast<std::int64_t>(a.intersection_count(z));
      if (bound - size < worst_slack) {
        worst_slack = bound - size;
        worst_size = a.count();
      }
      if (size > bound) ok = false;
    }
    std::ostringstream os;
    os << count << " abelian subgroups; tightest |A|=" << worst_size << " with slack " << worst_slack;
    out.push_back({"abelian", ok, os.str()});
  }
  {
    std::ostringstream os;
    os << "|G|=" << g.order() << " < " << hb.order_base << "^" << hb.order_exponent;
    out.push_back({"order", hb.order_bound_exceeds(big_int(g.order())), os.str()});
  }
  return out;
}

}  // namespace cgraph
