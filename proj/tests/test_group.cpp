#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cgraph/catalog.hpp"
#include "cgraph/group.hpp"
#include "cgraph/group_io.hpp"
#include "cgraph/subgroups.hpp"

using namespace cgraph;

namespace {

FiniteGroup perms(std::size_t degree, std::initializer_list<const char*> gens) {
  std::vector<permutation> ps;
  for (const char* g : gens) ps.push_back(parse_cycles(g, degree));
  return group_from_permutations(ps);
}

element by_label(const FiniteGroup& g, const std::string& label) {
  for (element x = 0; x < g.order(); ++x)
    if (g.label(x) == label) return x;
  ADD_FAILURE() << "no element " << label;
  return 0;
}

std::size_t generated_order(const FiniteGroup& g, std::vector<element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<element> m{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (element s : gens)
      if (!in[g.mul(m[i], s)]) {
        in[g.mul(m[i], s)] = 1;
        m.push_back(g.mul(m[i], s));
      }
  return m.size();
}

// All subgroups generated by at most three elements, kept when abelian.
std::set<std::vector<element>> brute_force_abelian_subgroups(const FiniteGroup& g) {
  std::set<std::vector<element>> out;
  const std::size_t n = g.order();
  auto close = [&](std::vector<element> gens) {
    std::vector<char> in(n, 0);
    std::vector<element> members{g.identity()};
    in[g.identity()] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (element s : gens) {
        const element y = g.mul(members[i], s);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    std::sort(members.begin(), members.end());
    return members;
  };
  for (element a = 0; a < n; ++a)
    for (element b = a; b < n; ++b) {
      if (!g.commute(a, b)) continue;
      for (element c = b; c < n; ++c)
        if (g.commute(a, c) && g.commute(b, c)) out.insert(close({a, b, c}));
    }
  return out;
}

}  // namespace

TEST(Permutations, GenerationExamples) {
  EXPECT_EQ(perms(3, {"(1 2)", "(1 2 3)"}).order(), 6u);
  EXPECT_EQ(perms(5, {"(1 2 3 4 5)", "(2 3 5 4)"}).order(), 20u);
  EXPECT_EQ(group_from_permutations({}).order(), 1u);
}

TEST(Permutations, IdentityFirstAndLabelsInCycleNotation) {
  const FiniteGroup s3 = perms(3, {"(1 2)", "(1 2 3)"});
  EXPECT_EQ(s3.identity(), 0u);
  EXPECT_EQ(s3.label(0), "()");
  EXPECT_EQ(s3.label(1), "(1 2)");
  EXPECT_EQ(s3.label(2), "(1 2 3)");
}

TEST(Permutations, Errors) {
  EXPECT_THROW(group_from_permutations({permutation{0, 0, 1}}), group_error);
  EXPECT_THROW(group_from_permutations({parse_cycles("(1 2)", 5), parse_cycles("(1 2 3 4 5)", 5)}, 100), group_error);
  EXPECT_THROW(parse_cycles("(1 2", 3), group_error);
  EXPECT_THROW(parse_cycles("(1 4)", 3), group_error);
  EXPECT_THROW(parse_cycles("(1 2 1)", 3), group_error);
  EXPECT_THROW(parse_cycles("1 2", 3), group_error);
  EXPECT_EQ(parse_cycles("()", 3), (permutation{0, 1, 2}));
  EXPECT_EQ(cycle_notation(parse_cycles("(3 1)(2)", 3)), "(1 3)");
}

TEST(Permutations, ComposeAppliesLeftOperandFirst) {
  const permutation a = parse_cycles("(1 2)", 3), b = parse_cycles("(2 3)", 3);
  // 1 -a-> 2 -b-> 3
  EXPECT_EQ(compose(a, b)[0], 2u);
}

TEST(Products, DirectProductExamples) {
  const FiniteGroup d8 = groups::dihedral(4);
  const FiniteGroup z2xd8 = direct_product(cyclic_group(2), d8);
  EXPECT_EQ(z2xd8.order(), 16u);
  EXPECT_EQ(center(z2xd8).size(), 4u);
  const FiniteGroup z1xd8 = direct_product(cyclic_group(1), d8);
  EXPECT_EQ(invariant_signature(z1xd8), invariant_signature(d8));
  const FiniteGroup z3xs3 = direct_product(cyclic_group(3), groups::symmetric(3));
  EXPECT_EQ(z3xs3.order(), 18u);
  EXPECT_EQ(center(z3xs3).size(), 3u);
  EXPECT_EQ(z3xs3.label(0), "(0,())");
  EXPECT_THROW(direct_product(cyclic_group(50), cyclic_group(50), 100), group_error);
}

TEST(Products, AbelianTimesAcScalesFamily) {
  for (std::size_t a : {2, 3, 4})
    for (const FiniteGroup& g : {groups::symmetric(3), groups::dihedral(4), groups::dicyclic(2), groups::dihedral(5)}) {
      const FiniteGroup ag = direct_product(cyclic_group(a), g);
      ASSERT_TRUE(is_ac_group(ag));
      std::multiset<std::size_t> expect, got;
      for (auto s : centralizer_family(g).sizes()) expect.insert(a * s);
      for (auto s : centralizer_family(ag).sizes()) got.insert(s);
      EXPECT_EQ(got, expect);
    }
}

TEST(Quotient, ByCenter) {
  const FiniteGroup q8 = groups::dicyclic(2);
  const FiniteGroup qq = quotient_by_center(q8);
  EXPECT_EQ(qq.order(), 4u);
  for (element x = 0; x < qq.order(); ++x) EXPECT_LE(element_order(qq, x), 2u);
  EXPECT_EQ(quotient_by_center(groups::dihedral(4)).order(), 4u);
  EXPECT_EQ(quotient_by_center(cyclic_group(7)).order(), 1u);
  EXPECT_TRUE(quotient_by_center(groups::general_linear_2(3)).is_associative());
}

TEST(Quotient, ExponentT) {
  EXPECT_EQ(quotient_exponent_t(groups::dicyclic(2)), 2u);
  EXPECT_EQ(quotient_exponent_t(groups::dihedral(5)), 5u);
  EXPECT_EQ(quotient_exponent_t(groups::special_linear_23()), 3u);
  EXPECT_THROW(quotient_exponent_t(cyclic_group(4)), group_error);
}

TEST(Queries, CenterCentralizerOrder) {
  EXPECT_EQ(center(groups::symmetric(3)).size(), 1u);
  EXPECT_EQ(center(groups::dihedral(4)).size(), 2u);
  const FiniteGroup d12 = groups::dihedral(6);
  const element y = by_label(d12, "(1 2 3 4 5 6)");
  const ElementSet c = centralizer(d12, y);
  EXPECT_EQ(c.size(), 6u);
  EXPECT_EQ(element_order(d12, y), 6u);
  bitset cyc = cyclic_subgroup(d12, y);
  EXPECT_EQ(ElementSet::from_bits(cyc), c);
}

TEST(Queries, AcFlag) {
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_TRUE(is_ac_group(groups::dihedral(n))) << n;
  EXPECT_FALSE(is_ac_group(groups::symmetric(4)));
  EXPECT_TRUE(is_ac_group(cyclic_group(6)));
}

TEST(Queries, CentralizerFamilyExamples) {
  auto sizes = [](const FiniteGroup& g) {
    auto s = centralizer_family(g).sizes();
    return std::multiset<std::size_t>(s.begin(), s.end());
  };
  EXPECT_EQ(sizes(groups::dihedral(6)), (std::multiset<std::size_t>{4, 2, 2, 2}));
  EXPECT_EQ(sizes(groups::dicyclic(2)), (std::multiset<std::size_t>{2, 2, 2}));
  const auto gl = sizes(groups::general_linear_2(3));
  EXPECT_EQ(gl.size(), 13u);
  EXPECT_EQ(gl.count(2), 6u);
  EXPECT_EQ(gl.count(6), 3u);
  EXPECT_EQ(gl.count(4), 4u);
  EXPECT_THROW(centralizer_family(cyclic_group(5)), group_error);
}

TEST(Subgroups, Examples) {
  EXPECT_EQ(max_abelian_subgroup_order(groups::dihedral(8)), 8u);
  EXPECT_TRUE(exists_abelian_subgroup_of_order(direct_product(cyclic_group(2), groups::dihedral(4)), 8));
  EXPECT_EQ(max_abelian_subgroup_order(cyclic_group(12)), 12u);
  EXPECT_EQ(max_abelian_subgroup_order(direct_product(cyclic_group(2), cyclic_group(6))), 12u);
}

TEST(Subgroups, EnumerationMatchesBruteForce) {
  // Every abelian subgroup of these groups needs at most three generators.
  for (const char* name : {"S3", "D8", "Q8", "A4", "D12", "Z2xD8", "Z2xQ8", "SG(16,3)", "D8*Z4", "M16", "Z4:Z4",
                           "SL(2,3)", "S4", "Heis(3)", "Z3xQ8", "Z2xA4"}) {
    const FiniteGroup g = find_entry(name)->build();
    std::set<std::vector<element>> got;
    for (const auto& a : abelian_subgroups(g)) got.insert(ElementSet::from_bits(a).elements);
    EXPECT_EQ(got, brute_force_abelian_subgroups(g)) << name;
  }
}

TEST(Signature, DistinguishesSameOrderGroups) {
  EXPECT_NE(invariant_signature(groups::dihedral(4)), invariant_signature(groups::dicyclic(2)));
  EXPECT_NE(invariant_signature(groups::dihedral(8)), invariant_signature(groups::semidihedral(4)));
  EXPECT_EQ(invariant_signature(groups::alternating(5)), invariant_signature(groups::projective_special_linear_2(4)));
}

TEST(Invariants, HoldOnEveryCatalogGroup) {
  for (const auto& e : catalog()) {
    const FiniteGroup g = e.build();
    const bitset z = center_bits(g);
    bitset meet(g.order());
    for (element x = 0; x < g.order(); ++x) meet.set(x);
    for (element x = 0; x < g.order(); ++x) {
      ASSERT_TRUE(g.centralizer_bits(x).test(x)) << e.name;
      meet &= g.centralizer_bits(x);
      ASSERT_EQ(conjugacy_class(g, x).size() * centralizer(g, x).size(), g.order()) << e.name;
    }
    EXPECT_EQ(meet, z) << e.name;
    EXPECT_EQ(g.order(), e.order) << e.name;
    EXPECT_EQ(z.count(), e.center_order) << e.name;
    EXPECT_EQ(is_ac_group(g), e.ac) << e.name;

    const auto fam = centralizer_family(g);
    bitset cover(g.order());
    std::size_t total = 0;
    for (const auto& m : fam.members) {
      for (element x : m.elements) cover.set(x);
      total += m.size();
    }
    EXPECT_EQ(cover.count() + z.count(), g.order()) << e.name;
    EXPECT_FALSE(cover.intersects(z)) << e.name;
    if (e.ac) EXPECT_EQ(total, g.order() - z.count()) << e.name << ": members overlap";
  }
}

TEST(Invariants, DihedralCenter) {
  for (std::size_t n = 3; n <= 20; ++n) EXPECT_EQ(center(groups::dihedral(n)).size(), n % 2 ? 1u : 2u) << n;
}

TEST(Constructions, RuleGroupsAreAssociative) {
  for (const FiniteGroup& g : {groups::sg16_3(), groups::d8_central_z4(), groups::metacyclic(4, 4, 0, 3),
                               groups::dicyclic(5), groups::semidihedral(5)})
    EXPECT_TRUE(g.is_associative());
  EXPECT_THROW(groups::metacyclic(5, 2, 0, 2), catalog_error);  // 2^2 != 1 mod 5
}

TEST(Constructions, PresentationRelations) {
  // SG(16,3): some generating pair satisfies a^4 = b^4 = 1, ab = b^-1 a^-1, ab^-1 = b a^-1.
  const FiniteGroup g = groups::sg16_3();
  bool found = false;
  for (element a = 0; a < g.order() && !found; ++a)
    for (element b = 0; b < g.order() && !found; ++b)
      found = g.power(a, 4) == g.identity() && g.power(b, 4) == g.identity() &&
              g.mul(a, b) == g.mul(g.inv(b), g.inv(a)) && g.mul(a, g.inv(b)) == g.mul(b, g.inv(a)) &&
              generated_order(g, {a, b}) == 16;
  EXPECT_TRUE(found);

  // M16: a^8 = b^2 = 1, bab = a^5.
  const FiniteGroup m = find_entry("M16")->build();
  found = false;
  for (element a = 0; a < m.order() && !found; ++a)
    for (element b = 0; b < m.order() && !found; ++b)
      found = element_order(m, a) == 8 && element_order(m, b) == 2 && m.mul(m.mul(b, a), b) == m.power(a, 5) &&
              generated_order(m, {a, b}) == 16;
  EXPECT_TRUE(found);

  // D8 * Z4: a^4 = b^2 = c^2 = 1, a central, bc = a^2 cb.
  const FiniteGroup d = groups::d8_central_z4();
  found = false;
  for (element a = 0; a < d.order() && !found; ++a) {
    if (element_order(d, a) != 4 || d.centralizer_bits(a).count() != 16) continue;
    for (element b = 0; b < d.order() && !found; ++b)
      for (element c = 0; c < d.order() && !found; ++c)
        found = element_order(d, b) == 2 && element_order(d, c) == 2 &&
                d.mul(b, c) == d.mul(d.power(a, 2), d.mul(c, b)) && generated_order(d, {a, b, c}) == 16;
  }
  EXPECT_TRUE(found);

  std::set<InvariantSignature> sigs;
  for (const char* n : {"Z2xD8", "Z2xQ8", "SG(16,3)", "Z4:Z4", "D8*Z4", "M16"})
    sigs.insert(invariant_signature(find_entry(n)->build()));
  EXPECT_EQ(sigs.size(), 6u);
}

TEST(GroupFile, ParsesPermutationsAndTables) {
  std::istringstream perm("# S3\norder 6\nperm-generators 3\n(1 2)\n(1 2 3)\n");
  EXPECT_EQ(read_group(perm).order(), 6u);
  std::istringstream table("order 2\ntable\n0 1\n1 0\n");
  EXPECT_EQ(read_group(table).order(), 2u);
  std::istringstream trivial("order 1\nperm-generators 4\n");
  EXPECT_EQ(read_group(trivial).order(), 1u);
}

TEST(GroupFile, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_group(in);
    } catch (const group_file_error& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("order 6\nperm-generators 3\n(1 2)\n(1 4)\n"), 4u);
  EXPECT_EQ(line_of("order 5\nperm-generators 3\n(1 2)\n(1 2 3)\n"), 1u);
  EXPECT_EQ(line_of("ordre 6\n"), 1u);
  EXPECT_EQ(line_of("order 2\ntable\n0 1\n1\n"), 4u);
  EXPECT_EQ(line_of("order 2\ntable\n0 1\n0 1\n"), 2u);
  EXPECT_EQ(line_of("order 3\ntable\n0 1 2\n1 2 0\n2 0 x\n"), 5u);
  EXPECT_EQ(line_of("order 2\nsomething\n"), 2u);
  EXPECT_EQ(line_of(""), 1u);
  // A Latin square with identity that is not associative.
  EXPECT_EQ(line_of("order 5\ntable\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"), 2u);
}

TEST(GroupFile, TableRoundTrip) {
  const FiniteGroup g = groups::dicyclic(3);
  std::stringstream ss;
  write_group_table(ss, g);
  EXPECT_EQ(read_group(ss).table(), g.table());
}
