#pragma once

// Classification and formula checks over the catalog.

#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cgraph/catalog.hpp"
#include "cgraph/commuting.hpp"
#include "cgraph/family.hpp"
#include "cgraph/heawood.hpp"
#include "cgraph/subgroups.hpp"

namespace cgraph {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"acyclic", "planar", "toroidal", "formulas", "bounds", "lemmas"};
  return names;
}

/// Built groups and commuting-graph reports for catalog entries, computed on first use.
class CatalogAnalysis {
public:
  struct Item {
    const CatalogEntry* entry;
    FiniteGroup group;
    CommutingGraphReport report;
  };

  const Item& get(const CatalogEntry& e) {
    auto it = items_.find(e.name);
    if (it == items_.end()) {
      FiniteGroup g = e.build();
      CommutingGraphReport r = commuting_graph(g);
      it = items_.emplace(e.name, std::make_unique<Item>(Item{&e, std::move(g), std::move(r)})).first;
    }
    return *it->second;
  }
  const Item& get(const std::string& name) {
    const CatalogEntry* e = find_entry(name);
    if (!e) throw catalog_error("unknown catalog group '" + name + "'");
    return get(*e);
  }

private:
  std::map<std::string, std::unique_ptr<Item>> items_;
};

namespace detail {

inline std::string genus_text(const GenusResult& r) { return describe(r); }

inline std::string girth_text(const std::optional<std::size_t>& g) { return g ? std::to_string(*g) : "inf"; }

class suite_builder {
public:
  explicit suite_builder(std::string name) : start_(std::chrono::steady_clock::now()) { rep_.suite = std::move(name); }
  void check(std::string name, bool ok, std::string detail = {}) {
    rep_.checks.push_back({std::move(name), ok, std::move(detail)});
  }
  SuiteReport finish() {
    rep_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(rep_);
  }

private:
  SuiteReport rep_;
  std::chrono::steady_clock::time_point start_;
};

inline bool in_list(const CatalogEntry& e, CatalogTag tag) {
  if (e.has(tag)) return true;
  // An alias of a listed group counts as listed.
  for (const auto& other : catalog())
    if (other.has(tag) && other.iso_class == e.iso_class) return true;
  return false;
}

inline std::size_t tag_count(CatalogTag tag) { return catalog_entries(tag).size(); }

inline element element_by_label(const FiniteGroup& g, const std::string& label) {
  for (element x = 0; x < g.order(); ++x)
    if (g.label(x) == label) return x;
  throw group_error("no element labelled " + label);
}

/// Vertices of the commuting graph for the non-central elements of `h`.
inline std::vector<vertex> vertices_of(const CommutingGraphReport& r, const bitset& h) {
  std::vector<vertex> out;
  for (std::size_t v = 0; v < r.vertex_element.size(); ++v)
    if (h.test(r.vertex_element[v])) out.push_back(static_cast<vertex>(v));
  return out;
}

inline bool is_power_of_two(std::size_t n) { return n && !(n & (n - 1)); }

}  // namespace detail

/// Girth is infinite exactly for the three listed groups; otherwise it is 3.
inline SuiteReport run_acyclic_suite(CatalogAnalysis& cache) {
  detail::suite_builder s("acyclic");
  s.check("acyclic list has 3 entries", detail::tag_count(CatalogTag::AcyclicList) == 3,
          std::to_string(detail::tag_count(CatalogTag::AcyclicList)));
  for (const auto& e : catalog()) {
    const auto& r = cache.get(e).report;
    const bool listed = detail::in_list(e, CatalogTag::AcyclicList);
    const bool acyclic = !r.girth.has_value();
    s.check("acyclic:" + e.name, acyclic == listed && (acyclic || *r.girth == 3),
            "girth " + detail::girth_text(r.girth) + (listed ? ", listed" : ", not listed"));
  }
  return s.finish();
}

/// Genus 0 exactly for the planar list; every other catalog group has genus at least 1.
inline SuiteReport run_planar_suite(CatalogAnalysis& cache) {
  detail::suite_builder s("planar");
  s.check("planar list has 17 entries", detail::tag_count(CatalogTag::PlanarList) == 17,
          std::to_string(detail::tag_count(CatalogTag::PlanarList)));
  for (const auto& e : catalog()) {
    const GenusResult& g = cache.get(e).report.total();
    const bool listed = detail::in_list(e, CatalogTag::PlanarList);
    const bool ok = listed ? (g.is_exact() && g.value == 0) : g.at_least() >= 1;
    s.check("planar:" + e.name, ok, "genus " + detail::genus_text(g) + (listed ? ", listed" : ", not listed"));
  }

  // The six non-abelian groups of order 16 with center of order 4.
  std::set<InvariantSignature> sigs;
  std::size_t count = 0;
  bool all_planar = true;
  for (const auto& e : catalog()) {
    const auto& item = cache.get(e);
    if (item.group.order() != 16 || item.report.center_order != 4) continue;
    ++count;
    sigs.insert(invariant_signature(item.group));
    all_planar = all_planar && item.report.total().is_exact() && item.report.total().value == 0;
  }
  s.check("order 16 with |Z|=4: six distinct groups, all planar", count == 6 && sigs.size() == 6 && all_planar,
          std::to_string(count) + " entries, " + std::to_string(sigs.size()) + " signatures");

  // Same signature <=> same isomorphism class, across the whole catalog.
  std::map<InvariantSignature, std::set<std::string>> by_sig;
  for (const auto& e : catalog()) by_sig[invariant_signature(cache.get(e).group)].insert(e.iso_class);
  std::size_t iso_classes = 0;
  {
    std::set<std::string> all;
    for (const auto& e : catalog()) all.insert(e.iso_class);
    iso_classes = all.size();
  }
  bool separated = by_sig.size() == iso_classes;
  for (const auto& [sig, classes] : by_sig) separated = separated && classes.size() == 1;
  s.check("signatures separate isomorphism classes", separated,
          std::to_string(by_sig.size()) + " signatures for " + std::to_string(iso_classes) + " classes");

  const auto& psl = cache.get("PSL(2,4)");
  const auto& a5 = cache.get("A5");
  s.check("PSL(2,4) and A5 share signature and genus",
          invariant_signature(psl.group) == invariant_signature(a5.group) &&
              detail::genus_text(psl.report.total()) == detail::genus_text(a5.report.total()),
          "genus " + detail::genus_text(psl.report.total()));
  return s.finish();
}

/// Genus 1 exactly for the toroidal list, plus the S5 witness and the order-24 case.
inline SuiteReport run_toroidal_suite(CatalogAnalysis& cache) {
  detail::suite_builder s("toroidal");
  s.check("toroidal list has 7 entries", detail::tag_count(CatalogTag::ToroidalList) == 7,
          std::to_string(detail::tag_count(CatalogTag::ToroidalList)));
  for (const auto& e : catalog()) {
    const GenusResult& g = cache.get(e).report.total();
    const bool listed = detail::in_list(e, CatalogTag::ToroidalList);
    const bool is_one = g.is_exact() && g.value == 1;
    const bool ok = listed ? is_one : (g.is_exact() ? g.value != 1 : g.at_least() >= 2 || g.at_most() < 1);
    s.check("toroidal:" + e.name, ok, "genus " + detail::genus_text(g) + (listed ? ", listed" : ", not listed"));
  }

  bool disjoint = true, nested = true;
  for (const auto& e : catalog()) {
    if (e.has(CatalogTag::ToroidalList) && (e.has(CatalogTag::PlanarList) || e.has(CatalogTag::AcyclicList)))
      disjoint = false;
    if (e.has(CatalogTag::AcyclicList) && !e.has(CatalogTag::PlanarList)) nested = false;
  }
  s.check("toroidal list disjoint from planar and acyclic lists", disjoint);
  s.check("acyclic list contained in planar list", nested);

  // S5: S = <(1 2)(3 4 5)> and T = <(4 5)(1 2 3)> meet trivially, giving two disjoint K5.
  {
    const auto& item = cache.get("S5");
    const FiniteGroup& g = item.group;
    const element x = detail::element_by_label(g, cycle_notation(parse_cycles("(1 2)(3 4 5)", 5)));
    const element y = detail::element_by_label(g, cycle_notation(parse_cycles("(4 5)(1 2 3)", 5)));
    const bitset S = cyclic_subgroup(g, x), T = cyclic_subgroup(g, y);
    const auto a = detail::vertices_of(item.report, S);
    const auto b = detail::vertices_of(item.report, T);
    const bool trivial_meet = S.intersection_count(T) == 1;
    const std::int64_t lb = disjoint_clique_lower_bound(item.report.graph, a, b);
    s.check("S5 disjoint-clique witness gives genus >= 2",
            trivial_meet && S.count() == 6 && T.count() == 6 && lb >= 2 && item.report.total().at_least() >= 2,
            "|S|=|T|=6, cliques " + std::to_string(a.size()) + "+" + std::to_string(b.size()) + ", bound " +
                std::to_string(lb) + ", engine " + detail::genus_text(item.report.total()));
  }

  // Order 24, |Z| = 2: Z2xA4 is the only toroidal one and SL(2,3) is planar.
  {
    std::vector<std::string> toroidal, planar;
    std::size_t n = 0;
    for (const auto& e : catalog()) {
      const auto& r = cache.get(e).report;
      if (r.group_order != 24 || r.center_order != 2) continue;
      ++n;
      if (r.total().is_exact() && r.total().value == 1) toroidal.push_back(e.name);
      if (r.total().is_exact() && r.total().value == 0) planar.push_back(e.name);
    }
    s.check("order 24 with |Z|=2: only Z2xA4 toroidal, only SL(2,3) planar",
            toroidal == std::vector<std::string>{"Z2xA4"} && planar == std::vector<std::string>{"SL(2,3)"},
            std::to_string(n) + " catalog groups");
  }
  return s.finish();
}

/// Complete and complete bipartite closed forms, and the rotation oracle on small instances.
inline void check_closed_forms(detail::suite_builder& s, std::size_t oracle_cap = default_oracle_cap) {
  for (std::int64_t n = 3; n <= 20; ++n) {
    const auto expect = static_cast<std::int64_t>(std::ceil(static_cast<double>((n - 3) * (n - 4)) / 12.0));
    s.check("K" + std::to_string(n) + " formula", genus_complete(n) == expect,
            std::to_string(genus_complete(n)) + " vs " + std::to_string(expect));
  }
  for (std::int64_t m = 2; m <= 10; ++m)
    for (std::int64_t n = 2; n <= 10; ++n) {
      const auto expect = static_cast<std::int64_t>(std::ceil(static_cast<double>((m - 2) * (n - 2)) / 4.0));
      s.check("K" + std::to_string(m) + "," + std::to_string(n) + " formula",
              genus_complete_bipartite(m, n) == expect,
              std::to_string(genus_complete_bipartite(m, n)) + " vs " + std::to_string(expect));
    }
  for (std::size_t n : {3, 4, 5}) {
    const auto o = genus_oracle(complete_graph(n), oracle_cap);
    s.check("oracle K" + std::to_string(n), o && *o == genus_complete(static_cast<std::int64_t>(n)),
            o ? std::to_string(*o) : "over cap");
  }
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    const auto o = genus_oracle(complete_bipartite_graph(m, n), oracle_cap);
    s.check("oracle K" + std::to_string(m) + "," + std::to_string(n),
            o && *o == genus_complete_bipartite(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)),
            o ? std::to_string(*o) : "over cap");
  }

}

/// Family formulas against the block decomposition of the built group.
inline void check_family_formulas(detail::suite_builder& s) {
  struct Case {
    std::string label;
    FamilyParams family;
    std::function<FiniteGroup()> build;
    std::optional<std::int64_t> expected;
  };
  std::vector<Case> cases;
  for (std::size_t n = 3; n <= 12; ++n)
    cases.push_back({"D" + std::to_string(2 * n), FamilyParams::dihedral(static_cast<std::int64_t>(n)),
                     [n] { return groups::dihedral(n); }, std::nullopt});
  for (std::size_t n = 2; n <= 7; ++n)
    cases.push_back({"Q" + std::to_string(4 * n), FamilyParams::dicyclic(static_cast<std::int64_t>(n)),
                     [n] { return groups::dicyclic(n); }, std::nullopt});
  for (std::size_t n : {4, 5})
    cases.push_back({"SD" + std::to_string(1 << n), FamilyParams::semidihedral(static_cast<std::int64_t>(n)),
                     [n] { return groups::semidihedral(n); }, std::nullopt});
  for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {2, 5}, {2, 7}, {3, 7}})
    cases.push_back({"pq(" + std::to_string(p) + "," + std::to_string(q) + ")",
                     FamilyParams::pq(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)),
                     [p, q] { return groups::affine_pq(p, q); }, std::nullopt});
  cases.push_back({"Heis(3)", FamilyParams::p_cubed(3), [] { return find_entry("Heis(3)")->build(); }, 4});
  cases.push_back({"Z9:Z3", FamilyParams::p_cubed(3), [] { return find_entry("Z9:Z3")->build(); }, 4});
  cases.push_back({"PSL(2,4)", FamilyParams::psl2(2), [] { return find_entry("PSL(2,4)")->build(); }, 0});
  cases.push_back({"GL(2,3)", FamilyParams::gl2(3), [] { return find_entry("GL(2,3)")->build(); }, 3});
  for (const auto& c : cases) {
    const FiniteGroup g = c.build();
    const CommutingGraphReport r = commuting_graph(g);
    const std::int64_t f = family_genus(c.family);
    const bool ok = r.total().is_exact() && r.total().value == f && (!c.expected || f == *c.expected);
    s.check("family " + c.label, ok,
            "formula " + std::to_string(f) + ", engine " + detail::genus_text(r.total()) +
                (c.expected ? ", expected " + std::to_string(*c.expected) : ""));
  }

}

/// A x G for abelian A: each family member scales by |A|.
inline void check_abelian_products(detail::suite_builder& s) {
  for (std::size_t a : {2, 3})
    for (const std::string inner : {"S3", "D8", "Q8"}) {
      const FiniteGroup g = find_entry(inner)->build();
      const FiniteGroup ag = direct_product(cyclic_group(a), g);
      const CommutingGraphReport r = commuting_graph(ag);
      std::int64_t sum = 0;
      for (std::size_t size : centralizer_family(g).sizes())
        sum += genus_complete(static_cast<std::int64_t>(a * size));
      const FamilyParams inner_family = *find_entry(inner)->family;
      const std::int64_t f = family_genus(FamilyParams::abelian_times(static_cast<std::int64_t>(a), inner_family));
      s.check("Z" + std::to_string(a) + "x" + inner, r.total().is_exact() && r.total().value == sum && f == sum,
              "sum " + std::to_string(sum) + ", formula " + std::to_string(f) + ", engine " +
                  detail::genus_text(r.total()));
    }

}

/// For AC groups the blocks are exactly the complete graphs on the family members.
inline void check_block_certificates(detail::suite_builder& s, CatalogAnalysis& cache) {
  for (const auto& e : catalog()) {
    const auto& item = cache.get(e);
    if (!item.report.is_ac) continue;
    const auto& r = item.report;
    std::set<std::vector<element>> members, block_sets;
    std::size_t covered = 0;
    for (const auto& m : r.family->members) {
      members.insert(m.elements);
      covered += m.size();
    }
    bool complete = true;
    for (const auto& b : r.genus.blocks) {
      complete = complete && b.type == BlockType::Complete;
      std::vector<element> els;
      for (vertex v : b.vertices) els.push_back(r.vertex_element[v]);
      std::sort(els.begin(), els.end());
      block_sets.insert(els);
    }
    // Singleton members are isolated vertices rather than blocks.
    for (vertex v : r.genus.decomposition.isolated) block_sets.insert({r.vertex_element[v]});
    const GenusResult ac = ac_genus(item.group);
    const bool ok = complete && members == block_sets && covered == r.group_order - r.center_order &&
                    r.total().is_exact() && ac.value == r.total().value;
    s.check("blocks are family members: " + e.name, ok,
            std::to_string(members.size()) + " members, " + std::to_string(r.genus.blocks.size()) + " blocks");
  }
}

inline SuiteReport run_formulas_suite(CatalogAnalysis& cache, std::size_t oracle_cap = default_oracle_cap) {
  detail::suite_builder s("formulas");
  check_closed_forms(s, oracle_cap);
  check_family_formulas(s);
  check_abelian_products(s);
  check_block_certificates(s, cache);
  return s.finish();
}

/// Heawood-type bounds for every catalog group with exact genus.
inline SuiteReport run_bounds_suite(CatalogAnalysis& cache) {
  detail::suite_builder s("bounds");
  s.check("h(0) = 4", heawood_h(0) == 4, std::to_string(heawood_h(0)));
  s.check("h(1) = 7", heawood_h(1) == 7, std::to_string(heawood_h(1)));
  for (const auto& e : catalog()) {
    const auto& item = cache.get(e);
    if (!item.report.total().is_exact()) continue;
    for (const auto& b : check_bounds_against_group(item.group, item.report))
      s.check(b.name + ":" + e.name, b.passed, b.detail);
  }
  return s.finish();
}

/// Abelian subgroups of prescribed orders in catalog 2-groups and groups of order 30 and 40.
inline SuiteReport run_lemmas_suite(CatalogAnalysis& cache) {
  detail::suite_builder s("lemmas");
  std::size_t two_groups = 0, big_two_groups = 0, order30 = 0, order40 = 0;
  for (const auto& e : catalog()) {
    const auto& item = cache.get(e);
    const std::size_t n = item.group.order();
    if (detail::is_power_of_two(n) && n >= 16) {
      ++two_groups;
      s.check("2-group of order >= 16 has abelian subgroup of order 8: " + e.name,
              exists_abelian_subgroup_of_order(item.group, 8));
      if (n >= 32 && item.report.center_order >= 4) {
        ++big_two_groups;
        s.check("2-group of order >= 32 with |Z| >= 4 has abelian subgroup of order 16: " + e.name,
                exists_abelian_subgroup_of_order(item.group, 16));
      }
    }
    if (n == 30) {
      ++order30;
      s.check("order 30 has subgroup of order 15: " + e.name, exists_abelian_subgroup_of_order(item.group, 15));
    }
    if (n == 40) {
      ++order40;
      s.check("order 40 has abelian subgroup of order 10: " + e.name, exists_abelian_subgroup_of_order(item.group, 10));
    }
  }
  s.check("catalog has 2-groups of order >= 16", two_groups > 0, std::to_string(two_groups));
  s.check("catalog has 2-groups of order >= 32 with |Z| >= 4", big_two_groups > 0, std::to_string(big_two_groups));
  s.check("catalog has groups of order 30", order30 == 3, std::to_string(order30));
  s.check("catalog has a group of order 40", order40 >= 1, std::to_string(order40));
  return s.finish();
}

/// Runs one suite by name; "all" runs every suite. Returns nullopt for an unknown name.
inline std::optional<std::vector<SuiteReport>> run_suite(const std::string& name, CatalogAnalysis& cache,
                                                         std::size_t oracle_cap = default_oracle_cap) {
  std::vector<SuiteReport> out;
  auto want = [&](const char* n) { return name == "all" || name == n; };
  if (want("acyclic")) out.push_back(run_acyclic_suite(cache));
  if (want("planar")) out.push_back(run_planar_suite(cache));
  if (want("toroidal")) out.push_back(run_toroidal_suite(cache));
  if (want("formulas")) out.push_back(run_formulas_suite(cache, oracle_cap));
  if (want("bounds")) out.push_back(run_bounds_suite(cache));
  if (want("lemmas")) out.push_back(run_lemmas_suite(cache));
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace cgraph
