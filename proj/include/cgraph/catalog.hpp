#pragma once

// Named groups with their expected invariants.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgraph/commuting.hpp"
#include "cgraph/family.hpp"
#include "cgraph/field.hpp"
#include "cgraph/group.hpp"

namespace cgraph {

class catalog_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Constructions

namespace groups {

inline permutation perm_from_cycles(std::size_t degree, const std::string& cycles) {
  return parse_cycles(cycles, degree);
}

inline permutation affine_map(std::size_t m, std::size_t mul, std::size_t add) {
  permutation p(m);
  for (std::size_t x = 0; x < m; ++x) p[x] = static_cast<std::uint32_t>((mul * x + add) % m);
  return p;
}

inline FiniteGroup cyclic(std::size_t n) { return cyclic_group(n); }

inline FiniteGroup symmetric(std::size_t n) {
  if (n < 1 || n > 7) throw catalog_error("S_n supported for 1 <= n <= 7");
  if (n == 1) return FiniteGroup();
  permutation t(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = static_cast<std::uint32_t>(i);
    c[i] = static_cast<std::uint32_t>((i + 1) % n);
  }
  std::swap(t[0], t[1]);
  return group_from_permutations({t, c});
}

inline FiniteGroup alternating(std::size_t n) {
  if (n < 3 || n > 7) throw catalog_error("A_n supported for 3 <= n <= 7");
  std::vector<permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
    p[0] = 1;
    p[1] = static_cast<std::uint32_t>(k);
    p[k] = 0;
    gens.push_back(p);
  }
  return group_from_permutations(gens);
}

/// D_{2n} acting on the n vertices of a polygon: rotation x -> x+1, reflection x -> -x.
inline FiniteGroup dihedral(std::size_t n) {
  if (n < 3) throw catalog_error("D_{2n} needs n >= 3");
  return group_from_permutations({affine_map(n, 1, 1), affine_map(n, n - 1, 0)});
}

/// Non-abelian semidirect product Z_q : Z_p as affine maps x -> x+1, x -> r x on Z_q, with r of
/// multiplicative order p.
inline FiniteGroup affine_pq(std::size_t p, std::size_t q) {
  for (std::size_t r = 2; r < q; ++r) {
    std::size_t o = 1, x = r;
    while (x != 1) {
      x = x * r % q;
      ++o;
    }
    if (o == p) return group_from_permutations({affine_map(q, 1, 1), affine_map(q, r, 0)});
  }
  throw catalog_error("no element of order p in Z_q^*");
}

/// Group on normal forms, realised faithfully by the left-regular permutations of `gens`.
/// Element labels are the normal-form words.
template <class Mul>
FiniteGroup regular_realisation(std::size_t n, Mul mul, const std::vector<element>& gens,
                                const std::vector<std::string>& words) {
  const FiniteGroup rule = group_from_rule(n, mul, words);
  if (!rule.is_associative()) throw catalog_error("normal-form rule is not associative");
  std::vector<permutation> perms;
  for (element x : gens) perms.push_back(left_regular(rule, x));
  permutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint32_t>(i);
  // p = left multiplication by some x; p(identity) = x names the element.
  FiniteGroup g = close_under(
      perms, id, compose, [](const permutation& p) { return p; },
      [&](const permutation& p) { return words[p[rule.identity()]]; });
  if (g.order() != n) throw catalog_error("generators do not generate the whole normal-form group");
  return g;
}

/// <a, b | a^m = 1, b^k = a^t, b a b^-1 = a^r>, elements a^i b^j.
inline FiniteGroup metacyclic(std::size_t m, std::size_t k, std::size_t t, std::size_t r) {
  std::size_t rk = 1;
  for (std::size_t i = 0; i < k; ++i) rk = rk * r % m;
  if (rk != 1 % m) throw catalog_error("metacyclic: r^k must be 1 mod m");
  if ((t * r) % m != t % m) throw catalog_error("metacyclic: a^t must be central");
  std::vector<std::size_t> rpow(k);
  rpow[0] = 1;
  for (std::size_t j = 1; j < k; ++j) rpow[j] = rpow[j - 1] * r % m;
  const std::size_t n = m * k;
  auto mul = [=](element x, element y) -> element {
    const std::size_t i = x % m, j = x / m, u = y % m, v = y / m;
    std::size_t ai = (i + u * rpow[j]) % m;
    std::size_t bj = j + v;
    if (bj >= k) {
      bj -= k;
      ai = (ai + t) % m;
    }
    return static_cast<element>(ai + m * bj);
  };
  std::vector<std::string> words(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = x % m, j = x / m;
    std::string w;
    if (i) w += i == 1 ? "a" : "a^" + std::to_string(i);
    if (j) w += j == 1 ? "b" : "b^" + std::to_string(j);
    words[x] = w.empty() ? "1" : w;
  }
  return regular_realisation(n, mul, {1, static_cast<element>(m)}, words);
}

/// Q_{4n} = <x, y | y^{2n} = 1, x^2 = y^n, x y x^-1 = y^-1>.
inline FiniteGroup dicyclic(std::size_t n) {
  if (n < 2) throw catalog_error("Q_{4n} needs n >= 2");
  return metacyclic(2 * n, 2, n, 2 * n - 1);
}

/// SD_{2^n} = <r, s | r^{2^{n-1}} = s^2 = 1, s r s = r^{2^{n-2}-1}>.
inline FiniteGroup semidihedral(std::size_t n) {
  if (n < 4 || n > 12) throw catalog_error("SD_{2^n} supported for 4 <= n <= 12");
  const std::size_t half = std::size_t{1} << (n - 1);
  return metacyclic(half, 2, 0, half / 2 - 1);
}

/// <a, b | a^4 = b^4 = 1, ab = b^-1 a^-1, ab^-1 = b a^-1>, realised as (Z4 x Z2) : Z2 on words
/// u^i v^j c^k with c u c = u v and v central.
inline FiniteGroup sg16_3() {
  auto enc = [](std::size_t i, std::size_t j, std::size_t k) { return static_cast<element>(i + 4 * j + 8 * k); };
  auto mul = [&](element x, element y) -> element {
    const std::size_t i = x % 4, j = (x / 4) % 2, k = x / 8;
    const std::size_t p = y % 4, q = (y / 4) % 2, r = y / 8;
    return enc((i + p) % 4, (j + q + k * p) % 2, (k + r) % 2);
  };
  std::vector<std::string> words(16);
  for (std::size_t x = 0; x < 16; ++x) {
    std::string w;
    const std::size_t i = x % 4, j = (x / 4) % 2, k = x / 8;
    if (i) w += i == 1 ? "u" : "u^" + std::to_string(i);
    if (j) w += "v";
    if (k) w += "c";
    words[x] = w.empty() ? "1" : w;
  }
  return regular_realisation(16, mul, {enc(1, 0, 0), enc(0, 1, 0), enc(0, 0, 1)}, words);
}

/// D8 * Z4 = <a, b, c | a^4 = b^2 = c^2 = 1, ab = ba, ac = ca, bc = a^2 cb>, words a^i b^j c^k.
inline FiniteGroup d8_central_z4() {
  auto enc = [](std::size_t i, std::size_t j, std::size_t k) { return static_cast<element>(i + 4 * j + 8 * k); };
  auto mul = [&](element x, element y) -> element {
    const std::size_t i = x % 4, j = (x / 4) % 2, k = x / 8;
    const std::size_t u = y % 4, v = (y / 4) % 2, w = y / 8;
    // c^k b^v = a^{2kv} b^v c^k
    return enc((i + u + 2 * k * v) % 4, (j + v) % 2, (k + w) % 2);
  };
  std::vector<std::string> words(16);
  for (std::size_t x = 0; x < 16; ++x) {
    std::string w;
    const std::size_t i = x % 4, j = (x / 4) % 2, k = x / 8;
    if (i) w += i == 1 ? "a" : "a^" + std::to_string(i);
    if (j) w += "b";
    if (k) w += "c";
    words[x] = w.empty() ? "1" : w;
  }
  return regular_realisation(16, mul, {enc(1, 0, 0), enc(0, 1, 0), enc(0, 0, 1)}, words);
}

/// Heisenberg group mod 3 (order 27, exponent 3) acting on Z3 x Z3 by (x,y) -> (x+1,y) and (x,y) -> (x,y+x).
inline FiniteGroup heisenberg3() {
  permutation a(9), b(9);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      a[3 * x + y] = static_cast<std::uint32_t>(3 * ((x + 1) % 3) + y);
      b[3 * x + y] = static_cast<std::uint32_t>(3 * x + (y + x) % 3);
    }
  return group_from_permutations({a, b});
}

/// Z3 : D8 where the Klein subgroup {1, r^2, s, r^2 s} centralises Z3 and r inverts it.
inline FiniteGroup z3_semidirect_d8() {
  return group_from_permutations({perm_from_cycles(7, "(5 6 7)"), perm_from_cycles(7, "(1 2 3 4)(6 7)"),
                                  perm_from_cycles(7, "(2 4)")});
}

inline FiniteGroup special_linear_23() {
  auto f = FieldContext::make(3);
  return group_from_matrices({Mat2::of(f, 1, 1, 0, 1), Mat2::of(f, 1, 0, 1, 1)}, f);
}

/// GL(2,q) from diag(g, 1) and [[-1, 1], [-1, 0]] with g primitive.
inline FiniteGroup general_linear_2(int q) {
  auto f = FieldContext::make(q);
  const FieldElement g = primitive_element(f);
  const FieldElement one = FieldElement::one(f), zero = FieldElement::zero(f), m1 = field_neg(one);
  return group_from_matrices({Mat2{g, zero, zero, one}, Mat2{m1, one, m1, zero}}, f);
}

/// SL(2, 2^k) = PSL(2, 2^k): upper unipotent, the swap and diag(t, t^-1).
inline FiniteGroup projective_special_linear_2(int q) {
  if (q != 4 && q != 8 && q != 16) throw catalog_error("PSL(2,q) supported for q in {4, 8, 16}");
  auto f = FieldContext::make(q);
  const FieldElement t = primitive_element(f);
  const FieldElement one = FieldElement::one(f), zero = FieldElement::zero(f);
  return group_from_matrices(
      {Mat2{one, one, zero, one}, Mat2{zero, one, one, zero}, Mat2{t, zero, zero, field_inv(t)}}, f);
}

}  // namespace groups

// ---------------------------------------------------------------------------
// Catalog

enum class CatalogTag { AcyclicList, PlanarList, ToroidalList, Counterexample, CounterexampleCandidate };

inline const char* to_string(CatalogTag t) {
  switch (t) {
    case CatalogTag::AcyclicList: return "acyclic-list";
    case CatalogTag::PlanarList: return "planar-list";
    case CatalogTag::ToroidalList: return "toroidal-list";
    case CatalogTag::Counterexample: return "counterexample";
    case CatalogTag::CounterexampleCandidate: return "counterexample-candidate";
  }
  return "?";
}

inline std::optional<CatalogTag> parse_catalog_tag(const std::string& s) {
  for (auto t : {CatalogTag::AcyclicList, CatalogTag::PlanarList, CatalogTag::ToroidalList, CatalogTag::Counterexample,
                 CatalogTag::CounterexampleCandidate})
    if (s == to_string(t)) return t;
  return std::nullopt;
}

struct CatalogEntry {
  std::string name;
  std::string iso_class;  // canonical name of the isomorphism type; differs from name for aliases
  std::string recipe;
  std::function<FiniteGroup()> construct;
  std::size_t order = 0;
  std::size_t center_order = 0;
  bool ac = false;
  std::optional<std::int64_t> genus;        // exact expectation
  std::optional<std::int64_t> genus_lower;  // when only a lower bound is expected
  std::vector<CatalogTag> tags;
  std::optional<FamilyParams> family;

  bool has(CatalogTag t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }
  FiniteGroup build() const { return construct(); }
};

namespace detail {

inline std::vector<CatalogEntry> make_catalog() {
  using T = CatalogTag;
  using F = FamilyParams;
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, std::string recipe, std::function<FiniteGroup()> f, std::size_t order,
                 std::size_t z, bool ac, std::optional<std::int64_t> genus, std::vector<CatalogTag> tags,
                 std::optional<FamilyParams> fam = std::nullopt, std::string iso = {}) {
    CatalogEntry e;
    e.iso_class = iso.empty() ? name : iso;
    e.name = std::move(name);
    e.recipe = std::move(recipe);
    e.construct = std::move(f);
    e.order = order;
    e.center_order = z;
    e.ac = ac;
    e.genus = genus;
    e.tags = std::move(tags);
    e.family = std::move(fam);
    c.push_back(std::move(e));
  };
  auto prod = [](std::function<FiniteGroup()> a, std::function<FiniteGroup()> b) {
    return [a, b] { return direct_product(a(), b()); };
  };
  auto Z = [](std::size_t n) { return [n] { return groups::cyclic(n); }; };
  auto D = [](std::size_t n) { return [n] { return groups::dihedral(n); }; };
  auto Q = [](std::size_t n) { return [n] { return groups::dicyclic(n); }; };
  auto S = [](std::size_t n) { return [n] { return groups::symmetric(n); }; };
  auto A = [](std::size_t n) { return [n] { return groups::alternating(n); }; };

  // Acyclic and planar lists.
  add("S3", "permutations (1 2), (1 2 3)", S(3), 6, 1, true, 0, {T::AcyclicList, T::PlanarList}, F::dihedral(3));
  add("D8", "polygon symmetries, n=4", D(4), 8, 2, true, 0, {T::AcyclicList, T::PlanarList}, F::dihedral(4));
  add("Q8", "dicyclic n=2", Q(2), 8, 2, true, 0, {T::AcyclicList, T::PlanarList}, F::dicyclic(2));
  add("D10", "polygon symmetries, n=5", D(5), 10, 1, true, 0, {T::PlanarList}, F::dihedral(5));
  add("A4", "3-cycles (1 2 3), (1 2 4)", A(4), 12, 1, true, 0, {T::PlanarList});
  add("Sz(2)", "permutations (1 2 3 4 5), (2 3 5 4)",
      [] {
        return group_from_permutations(
            {groups::perm_from_cycles(5, "(1 2 3 4 5)"), groups::perm_from_cycles(5, "(2 3 5 4)")});
      },
      20, 1, true, 0, {T::PlanarList});
  add("S4", "permutations (1 2), (1 2 3 4)", S(4), 24, 1, false, 0, {T::PlanarList});
  add("A5", "3-cycles (1 2 k)", A(5), 60, 1, true, 0, {T::PlanarList});
  add("D12", "polygon symmetries, n=6", D(6), 12, 2, true, 0, {T::PlanarList}, F::dihedral(6));
  add("Q12", "dicyclic n=3", Q(3), 12, 2, true, 0, {T::PlanarList}, F::dicyclic(3));
  add("SL(2,3)", "matrices [[1,1],[0,1]], [[1,0],[1,1]] over GF(3)", groups::special_linear_23, 24, 2, true, 0,
      {T::PlanarList});
  add("Z2xD8", "direct product", prod(Z(2), D(4)), 16, 4, true, 0, {T::PlanarList},
      F::abelian_times(2, F::dihedral(4)));
  add("Z2xQ8", "direct product", prod(Z(2), Q(2)), 16, 4, true, 0, {T::PlanarList},
      F::abelian_times(2, F::dicyclic(2)));
  add("SG(16,3)", "(Z4 x Z2) : Z2, left-regular", groups::sg16_3, 16, 4, true, 0, {T::PlanarList});
  add("Z4:Z4", "metacyclic <a,b | a^4=b^4=1, bab^-1=a^-1>", [] { return groups::metacyclic(4, 4, 0, 3); }, 16, 4,
      true, 0, {T::PlanarList});
  add("D8*Z4", "central product, left-regular", groups::d8_central_z4, 16, 4, true, 0, {T::PlanarList});
  add("M16", "affine maps x+1, 5x on Z8", [] {
        return group_from_permutations({groups::affine_map(8, 1, 1), groups::affine_map(8, 5, 0)});
      },
      16, 4, true, 0, {T::PlanarList});

  // Toroidal list.
  add("D14", "polygon symmetries, n=7", D(7), 14, 1, true, 1, {T::ToroidalList}, F::dihedral(7));
  add("Z7:Z3", "affine maps x+1, 2x on Z7", [] { return groups::affine_pq(3, 7); }, 21, 1, true, 1,
      {T::ToroidalList}, F::pq(3, 7));
  add("Z2xA4", "direct product", prod(Z(2), A(4)), 24, 2, true, 1, {T::ToroidalList});
  add("Z3xS3", "direct product", prod(Z(3), S(3)), 18, 3, true, 1, {T::ToroidalList},
      F::abelian_times(3, F::dihedral(3)));
  add("D16", "polygon symmetries, n=8", D(8), 16, 2, true, 1, {T::ToroidalList}, F::dihedral(8));
  add("Q16", "dicyclic n=4", Q(4), 16, 2, true, 1, {T::ToroidalList}, F::dicyclic(4));
  add("SD16", "semidihedral n=4", [] { return groups::semidihedral(4); }, 16, 2, true, 1, {T::ToroidalList},
      F::semidihedral(4));

  // Groups the classification arguments rule out.
  add("S5", "permutations (1 2), (1 2 3 4 5)", S(5), 120, 1, false, std::nullopt, {T::Counterexample});
  c.back().genus_lower = 2;
  add("GL(2,3)", "diag(g,1), [[-1,1],[-1,0]] over GF(3)", [] { return groups::general_linear_2(3); }, 48, 2, true,
      3, {T::Counterexample}, F::gl2(3));
  add("GL(2,4)", "diag(g,1), [[-1,1],[-1,0]] over GF(4)", [] { return groups::general_linear_2(4); }, 180, 3, true,
      61, {T::Counterexample}, F::gl2(4));
  add("GL(2,5)", "diag(g,1), [[-1,1],[-1,0]] over GF(5)", [] { return groups::general_linear_2(5); }, 480, 4, true,
      398, {T::Counterexample}, F::gl2(5));
  add("PSL(2,4)", "SL(2,4) generators over GF(4)", [] { return groups::projective_special_linear_2(4); }, 60, 1, true,
      0, {}, F::psl2(2), "A5");
  add("PSL(2,8)", "SL(2,8) generators over GF(8)", [] { return groups::projective_special_linear_2(8); }, 504, 1,
      true, 101, {T::Counterexample}, F::psl2(3));
  add("Heis(3)", "unitriangular action on Z3 x Z3", groups::heisenberg3, 27, 3, true, 4, {T::Counterexample},
      F::p_cubed(3));
  add("Z9:Z3", "affine maps x+1, 4x on Z9", [] {
        return group_from_permutations({groups::affine_map(9, 1, 1), groups::affine_map(9, 4, 0)});
      },
      27, 3, true, 4, {T::Counterexample}, F::p_cubed(3));
  add("SD32", "semidihedral n=5", [] { return groups::semidihedral(5); }, 32, 2, true, 10, {T::Counterexample},
      F::semidihedral(5));
  add("D18", "polygon symmetries, n=9", D(9), 18, 1, true, 2, {T::Counterexample}, F::dihedral(9));
  add("D20", "polygon symmetries, n=10", D(10), 20, 2, true, 2, {T::Counterexample}, F::dihedral(10));
  add("D22", "polygon symmetries, n=11", D(11), 22, 1, true, 4, {T::Counterexample}, F::dihedral(11));
  add("D24", "polygon symmetries, n=12", D(12), 24, 2, true, 4, {T::Counterexample, T::CounterexampleCandidate},
      F::dihedral(12));
  add("Q20", "dicyclic n=5", Q(5), 20, 2, true, 2, {T::Counterexample}, F::dicyclic(5));
  add("Q24", "dicyclic n=6", Q(6), 24, 2, true, 4, {T::Counterexample, T::CounterexampleCandidate}, F::dicyclic(6));
  add("Q28", "dicyclic n=7", Q(7), 28, 2, true, 6, {T::Counterexample}, F::dicyclic(7));
  add("Z3:D8", "permutations (5 6 7), (1 2 3 4)(6 7), (2 4)", groups::z3_semidirect_d8, 24, 2, true, 4,
      {T::Counterexample, T::CounterexampleCandidate});
  add("Z3xD8", "direct product", prod(Z(3), D(4)), 24, 6, true, 3, {T::Counterexample},
      F::abelian_times(3, F::dihedral(4)));
  add("Z3xQ8", "direct product", prod(Z(3), Q(2)), 24, 6, true, 3, {T::Counterexample},
      F::abelian_times(3, F::dicyclic(2)));
  add("Z2xD12", "direct product", prod(Z(2), D(6)), 24, 4, true, 2, {T::Counterexample},
      F::abelian_times(2, F::dihedral(6)));
  add("D30", "polygon symmetries, n=15", D(15), 30, 1, true, 10, {T::Counterexample}, F::dihedral(15));
  add("Z3xD10", "direct product", prod(Z(3), D(5)), 30, 3, true, 6, {T::Counterexample},
      F::abelian_times(3, F::dihedral(5)));
  add("Z5xS3", "direct product", prod(Z(5), S(3)), 30, 5, true, 7, {T::Counterexample},
      F::abelian_times(5, F::dihedral(3)));
  add("D40", "polygon symmetries, n=20", D(20), 40, 2, true, 18, {T::Counterexample}, F::dihedral(20));
  add("Z2xD16", "direct product", prod(Z(2), D(8)), 32, 4, true, 6, {T::Counterexample},
      F::abelian_times(2, F::dihedral(8)));
  add("Z4xD8", "direct product", prod(Z(4), D(4)), 32, 8, true, 6, {T::Counterexample},
      F::abelian_times(4, F::dihedral(4)));

  std::sort(c.begin(), c.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return c;
}

}  // namespace detail

/// All entries, ordered by name.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::make_catalog();
  return entries;
}

/// Entries carrying `tag`, or every entry when no tag is given.
inline std::vector<const CatalogEntry*> catalog_entries(std::optional<CatalogTag> tag = std::nullopt) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog())
    if (!tag || e.has(*tag)) out.push_back(&e);
  return out;
}

inline const CatalogEntry* find_entry(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"SG16_3", "SG(16,3)"}, {"Sz2", "Sz(2)"},     {"SL2_3", "SL(2,3)"}, {"SL(2, 3)", "SL(2,3)"},
      {"D8xZ4", "D8*Z4"},     {"Z4xZ4", "Z4:Z4"},   {"Z7xZ3", "Z7:Z3"},   {"PSL2_4", "PSL(2,4)"},
      {"PSL2_8", "PSL(2,8)"}, {"Heis3", "Heis(3)"}, {"Z3xD8'", "Z3:D8"},
  };
  std::string key = name;
  if (auto it = aliases.find(name); it != aliases.end()) key = it->second;
  for (const auto& e : catalog())
    if (e.name == key) return &e;
  return nullptr;
}

/// Builds a named catalog group, or a family member when `param` is given:
/// D, Q, SD take the group order; S, A, Z the degree or order; GL2 and PSL2 the field size.
inline FiniteGroup build(const std::string& name, std::optional<long long> param = std::nullopt) {
  if (!param) {
    if (const CatalogEntry* e = find_entry(name)) return e->build();
    // "D14", "Q16", "SD32", "S4", ... without an explicit parameter.
    std::size_t split = 0;
    while (split < name.size() && !std::isdigit(static_cast<unsigned char>(name[split]))) ++split;
    if (split == 0 || split == name.size()) throw catalog_error("unknown catalog group '" + name + "'");
    const std::string digits = name.substr(split);
    if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw catalog_error("unknown catalog group '" + name + "'");
    return build(name.substr(0, split), std::stoll(digits));
  }
  const long long k = *param;
  auto bad = [&](const std::string& why) -> catalog_error {
    return catalog_error(name + " with parameter " + std::to_string(k) + ": " + why);
  };
  if (name == "D") {
    if (k < 6 || k % 2) throw bad("dihedral order must be even and at least 6");
    return groups::dihedral(static_cast<std::size_t>(k / 2));
  }
  if (name == "Q") {
    if (k < 8 || k % 4) throw bad("dicyclic order must be a multiple of 4 and at least 8");
    return groups::dicyclic(static_cast<std::size_t>(k / 4));
  }
  if (name == "SD") {
    int n = 0;
    while ((1LL << n) < k) ++n;
    if ((1LL << n) != k || n < 4 || n > 12) throw bad("semidihedral order must be 2^n with 4 <= n <= 12");
    return groups::semidihedral(static_cast<std::size_t>(n));
  }
  if (name == "S") {
    if (k < 1 || k > 7) throw bad("degree must be in 1..7");
    return groups::symmetric(static_cast<std::size_t>(k));
  }
  if (name == "A") {
    if (k < 3 || k > 7) throw bad("degree must be in 3..7");
    return groups::alternating(static_cast<std::size_t>(k));
  }
  if (name == "Z") {
    if (k < 1 || k > static_cast<long long>(default_closure_cap)) throw bad("order out of range");
    return groups::cyclic(static_cast<std::size_t>(k));
  }
  if (name == "GL2") {
    if (k != 3 && k != 4 && k != 5 && k != 7 && k != 8 && k != 9) throw bad("field size must be in {3,4,5,7,8,9}");
    return groups::general_linear_2(static_cast<int>(k));
  }
  if (name == "PSL2") {
    if (k != 4 && k != 8 && k != 16) throw bad("field size must be 4, 8 or 16");
    return groups::projective_special_linear_2(static_cast<int>(k));
  }
  throw catalog_error("unknown group family '" + name + "'");
}

struct FieldCheck {
  std::string field;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct VerificationRecord {
  std::string name;
  std::vector<FieldCheck> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const FieldCheck& c) { return c.passed; });
  }
};

inline std::string describe(const GenusResult& r) {
  if (r.is_exact()) return std::to_string(r.value);
  return "[" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
}

/// Builds the group and compares order, center, AC flag and computed genus with the entry.
inline VerificationRecord verify_entry(const CatalogEntry& e, const FiniteGroup& g, const CommutingGraphReport& r) {
  VerificationRecord rec;
  rec.name = e.name;
  auto add = [&](std::string f, std::string exp, std::string act) {
    const bool ok = exp == act;
    rec.checks.push_back({std::move(f), std::move(exp), std::move(act), ok});
  };
  add("order", std::to_string(e.order), std::to_string(g.order()));
  add("center_order", std::to_string(e.center_order), std::to_string(r.center_order));
  add("is_ac", e.ac ? "true" : "false", r.is_ac ? "true" : "false");
  if (e.genus) add("genus", std::to_string(*e.genus), describe(r.total()));
  if (e.genus_lower) {
    const bool ok = r.total().at_least() >= *e.genus_lower;
    rec.checks.push_back({"genus_lower", ">=" + std::to_string(*e.genus_lower), describe(r.total()), ok});
  }
  return rec;
}

inline VerificationRecord verify_entry(const CatalogEntry& e) {
  const FiniteGroup g = e.build();
  if (g.is_abelian()) {
    VerificationRecord rec;
    rec.name = e.name;
    rec.checks.push_back({"non_abelian", "true", "false", false});
    return rec;
  }
  return verify_entry(e, g, commuting_graph(g));
}

}  // namespace cgraph
