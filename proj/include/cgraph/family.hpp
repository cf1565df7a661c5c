#pragma once

// Closed-form commuting-graph genus for standard families of AC-groups.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgraph/genus.hpp"

namespace cgraph {

enum class FamilyTag { Dihedral, Dicyclic, Semidihedral, PQ, PCubed, PSL2, GL2, AbelianTimesAC };

inline const char* to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::Dihedral: return "dihedral";
    case FamilyTag::Dicyclic: return "dicyclic";
    case FamilyTag::Semidihedral: return "semidihedral";
    case FamilyTag::PQ: return "pq";
    case FamilyTag::PCubed: return "p_cubed";
    case FamilyTag::PSL2: return "psl2";
    case FamilyTag::GL2: return "gl2";
    case FamilyTag::AbelianTimesAC: return "abelian_times_ac";
  }
  return "?";
}

class family_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Family tag plus its parameters. Dihedral n: D_{2n}; Dicyclic n: Q_{4n}; Semidihedral n: order 2^n;
/// PQ (p, q): the non-abelian group of order pq; PCubed p: non-abelian of order p^3;
/// PSL2 k: PSL(2, 2^k); GL2 q; AbelianTimesAC: A x G with |A| = a and G described by `inner`.
struct FamilyParams {
  FamilyTag tag = FamilyTag::Dihedral;
  std::int64_t n = 0, p = 0, q = 0, k = 0, a = 0;
  std::shared_ptr<const FamilyParams> inner;

  static FamilyParams dihedral(std::int64_t n) { return make(FamilyTag::Dihedral, [&](auto& f) { f.n = n; }); }
  static FamilyParams dicyclic(std::int64_t n) { return make(FamilyTag::Dicyclic, [&](auto& f) { f.n = n; }); }
  static FamilyParams semidihedral(std::int64_t n) { return make(FamilyTag::Semidihedral, [&](auto& f) { f.n = n; }); }
  static FamilyParams pq(std::int64_t p, std::int64_t q) {
    return make(FamilyTag::PQ, [&](auto& f) {
      f.p = p;
      f.q = q;
    });
  }
  static FamilyParams p_cubed(std::int64_t p) { return make(FamilyTag::PCubed, [&](auto& f) { f.p = p; }); }
  static FamilyParams psl2(std::int64_t k) { return make(FamilyTag::PSL2, [&](auto& f) { f.k = k; }); }
  static FamilyParams gl2(std::int64_t q) { return make(FamilyTag::GL2, [&](auto& f) { f.q = q; }); }
  static FamilyParams abelian_times(std::int64_t a, FamilyParams inner) {
    return make(FamilyTag::AbelianTimesAC, [&](auto& f) {
      f.a = a;
      f.inner = std::make_shared<const FamilyParams>(std::move(inner));
    });
  }

  std::string describe() const {
    switch (tag) {
      case FamilyTag::Dihedral: return "D" + std::to_string(2 * n);
      case FamilyTag::Dicyclic: return "Q" + std::to_string(4 * n);
      case FamilyTag::Semidihedral: return "SD" + std::to_string(std::int64_t{1} << n);
      case FamilyTag::PQ: return "pq(" + std::to_string(p) + "," + std::to_string(q) + ")";
      case FamilyTag::PCubed: return "p^3(" + std::to_string(p) + ")";
      case FamilyTag::PSL2: return "PSL(2," + std::to_string(std::int64_t{1} << k) + ")";
      case FamilyTag::GL2: return "GL(2," + std::to_string(q) + ")";
      case FamilyTag::AbelianTimesAC: return "A" + std::to_string(a) + "x" + (inner ? inner->describe() : "?");
    }
    return "?";
  }

private:
  template <class F>
  static FamilyParams make(FamilyTag t, F&& fill) {
    FamilyParams f;
    f.tag = t;
    fill(f);
    return f;
  }
};

namespace detail {

inline bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  for (std::int64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

inline bool is_prime_power(std::int64_t x) {
  if (x < 2) return false;
  std::int64_t p = 2;
  while (x % p != 0) ++p;
  while (x % p == 0) x /= p;
  return x == 1;
}

}  // namespace detail

/// Throws family_error when a parameter is outside the family's range.
inline void validate(const FamilyParams& f) {
  auto fail = [&](const std::string& why) { throw family_error(std::string(to_string(f.tag)) + ": " + why); };
  switch (f.tag) {
    case FamilyTag::Dihedral:
      if (f.n < 3) fail("n must be at least 3");
      break;
    case FamilyTag::Dicyclic:
      if (f.n < 2) fail("n must be at least 2");
      break;
    case FamilyTag::Semidihedral:
      if (f.n < 4 || f.n > 40) fail("n must be in 4..40");
      break;
    case FamilyTag::PQ:
      if (!detail::is_prime(f.p) || !detail::is_prime(f.q)) fail("p and q must be prime");
      if ((f.q - 1) % f.p != 0) fail("p must divide q-1");
      break;
    case FamilyTag::PCubed:
      if (!detail::is_prime(f.p)) fail("p must be prime");
      break;
    case FamilyTag::PSL2:
      if (f.k < 2 || f.k > 20) fail("k must be in 2..20");
      break;
    case FamilyTag::GL2:
      if (f.q <= 2 || !detail::is_prime_power(f.q)) fail("q must be a prime power greater than 2");
      break;
    case FamilyTag::AbelianTimesAC:
      if (f.a < 1) fail("abelian factor order must be positive");
      if (!f.inner) fail("missing inner family");
      validate(*f.inner);
      break;
  }
}

/// Sizes of the sets C_G(u) \ Z(G), with multiplicity, for the family member G.
inline std::vector<std::pair<std::int64_t, std::int64_t>> family_member_sizes(const FamilyParams& f) {
  validate(f);
  using entry = std::pair<std::int64_t, std::int64_t>;  // (count, size)
  switch (f.tag) {
    case FamilyTag::Dihedral:
      if (f.n % 2 == 0) return {entry{1, f.n - 2}, entry{f.n / 2, 2}};
      return {entry{1, f.n - 1}, entry{f.n, 1}};
    case FamilyTag::Dicyclic: return {entry{1, 2 * (f.n - 1)}, entry{f.n, 2}};
    case FamilyTag::Semidihedral: {
      const std::int64_t half = std::int64_t{1} << (f.n - 1);
      return {entry{1, half - 2}, entry{half / 2, 2}};
    }
    case FamilyTag::PQ: return {entry{1, f.q - 1}, entry{f.q, f.p - 1}};
    case FamilyTag::PCubed: return {entry{f.p + 1, f.p * (f.p - 1)}};
    case FamilyTag::PSL2: {
      const std::int64_t m = std::int64_t{1} << f.k;
      return {entry{m + 1, m - 1}, entry{(m / 2) * (m + 1), m - 2}, entry{(m / 2) * (m - 1), m}};
    }
    case FamilyTag::GL2: {
      const std::int64_t q = f.q;
      return {entry{q * (q + 1) / 2, (q - 1) * (q - 2)}, entry{q * (q - 1) / 2, q * (q - 1)}, entry{q + 1, (q - 1) * (q - 1)}};
    }
    case FamilyTag::AbelianTimesAC: {
      auto sizes = family_member_sizes(*f.inner);
      for (auto& [count, size] : sizes) size *= f.a;
      return sizes;
    }
  }
  return {};
}

/// Closed-form genus of the commuting graph of the family member.
inline std::int64_t family_genus(const FamilyParams& f) {
  validate(f);
  auto K = [](std::int64_t n) { return genus_complete(n); };
  switch (f.tag) {
    case FamilyTag::Dihedral: return f.n % 2 == 0 ? K(f.n - 2) : K(f.n - 1);
    case FamilyTag::Dicyclic: return K(2 * (f.n - 1));
    case FamilyTag::Semidihedral: return K((std::int64_t{1} << (f.n - 1)) - 2);
    case FamilyTag::PQ: return K(f.q - 1) + f.q * K(f.p - 1);
    case FamilyTag::PCubed: return (f.p + 1) * K(f.p * (f.p - 1));
    case FamilyTag::PSL2: {
      const std::int64_t m = std::int64_t{1} << f.k;
      return (m + 1) * K(m - 1) + (m / 2) * (m + 1) * K(m - 2) + (m / 2) * (m - 1) * K(m);
    }
    case FamilyTag::GL2: {
      const std::int64_t q = f.q;
      return q * (q + 1) / 2 * K((q - 1) * (q - 2)) + q * (q - 1) / 2 * K(q * (q - 1)) + (q + 1) * K((q - 1) * (q - 1));
    }
    case FamilyTag::AbelianTimesAC: {
      std::int64_t total = 0;
      for (auto [count, size] : family_member_sizes(*f.inner)) total += count * K(f.a * size);
      return total;
    }
  }
  return 0;
}

}  // namespace cgraph
