#pragma once

// Finite groups stored as complete multiplication tables.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgraph/bits.hpp"
#include "cgraph/field.hpp"

namespace cgraph {

using element = std::uint32_t;
using permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t default_closure_cap = 10000;

class group_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class FiniteGroup {
public:
  FiniteGroup() : FiniteGroup(std::vector<element>{0}) {}

  /// Builds from a row-major n x n table. Throws group_error unless the table is a Latin
  /// square with a two-sided identity. Associativity is checked separately.
  explicit FiniteGroup(std::vector<element> table, std::vector<std::string> labels = {})
      : table_(std::move(table)), labels_(std::move(labels)) {
    const std::size_t sz = table_.size();
    n_ = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(sz))));
    while (n_ * n_ > sz) --n_;
    while ((n_ + 1) * (n_ + 1) <= sz) ++n_;
    if (n_ == 0 || n_ * n_ != sz) throw group_error("multiplication table is not square");
    validate_latin();
    find_identity();
    inverse_.assign(n_, 0);
    for (element a = 0; a < n_; ++a)
      for (element b = 0; b < n_; ++b)
        if (mul(a, b) == identity_) {
          inverse_[a] = b;
          break;
        }
    for (element a = 0; a < n_; ++a)
      if (mul(inverse_[a], a) != identity_) throw group_error("left and right inverses differ");
    if (labels_.empty()) {
      labels_.reserve(n_);
      for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    }
    if (labels_.size() != n_) throw group_error("label count does not match group order");
    centralizers_.assign(n_, bitset(n_));
    for (element a = 0; a < n_; ++a)
      for (element b = a; b < n_; ++b)
        if (commute(a, b)) {
          centralizers_[a].set(b);
          centralizers_[b].set(a);
        }
  }

  std::size_t order() const { return n_; }
  element mul(element a, element b) const { return table_[a * n_ + b]; }
  element inv(element a) const { return inverse_[a]; }
  element identity() const { return identity_; }
  const std::string& label(element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<element>& table() const { return table_; }

  bool commute(element a, element b) const { return mul(a, b) == mul(b, a); }

  element power(element a, long long k) const {
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    element r = identity_;
    while (k > 0) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }

  bool is_abelian() const {
    for (element a = 0; a < n_; ++a)
      for (element b = a + 1; b < n_; ++b)
        if (!commute(a, b)) return false;
    return true;
  }

  /// Exhaustive O(n^3) check.
  bool is_associative() const {
    for (element a = 0; a < n_; ++a)
      for (element b = 0; b < n_; ++b) {
        const element ab = mul(a, b);
        for (element c = 0; c < n_; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    return true;
  }

  /// Bitset of all elements commuting with x.
  const bitset& centralizer_bits(element x) const { return centralizers_[x]; }

private:
  void validate_latin() const {
    std::vector<char> seen(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t c = 0; c < n_; ++c) {
        element v = table_[r * n_ + c];
        if (v >= n_) throw group_error("table entry out of range in row " + std::to_string(r));
        if (seen[v]) throw group_error("row " + std::to_string(r) + " is not a permutation");
        seen[v] = 1;
      }
    }
    for (std::size_t c = 0; c < n_; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t r = 0; r < n_; ++r) {
        element v = table_[r * n_ + c];
        if (seen[v]) throw group_error("column " + std::to_string(c) + " is not a permutation");
        seen[v] = 1;
      }
    }
  }

  void find_identity() {
    for (element e = 0; e < n_; ++e) {
      bool ok = true;
      for (element a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) {
        identity_ = e;
        return;
      }
    }
    throw group_error("table has no identity element");
  }

  std::size_t n_ = 0;
  std::vector<element> table_;
  std::vector<element> inverse_;
  std::vector<std::string> labels_;
  element identity_ = 0;
  std::vector<bitset> centralizers_;
};

/// Sorted, duplicate-free list of element indices.
struct ElementSet {
  std::vector<element> elements;

  ElementSet() = default;
  explicit ElementSet(std::vector<element> e) : elements(std::move(e)) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  }
  static ElementSet from_bits(const bitset& b) {
    ElementSet s;
    b.for_each([&](std::size_t i) { s.elements.push_back(static_cast<element>(i)); });
    return s;
  }
  bitset to_bits(std::size_t n) const {
    bitset b(n);
    for (auto e : elements) b.set(e);
    return b;
  }

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  bool contains(element e) const { return std::binary_search(elements.begin(), elements.end(), e); }
  auto begin() const { return elements.begin(); }
  auto end() const { return elements.end(); }
  bool operator==(const ElementSet&) const = default;
  auto operator<=>(const ElementSet&) const = default;
};

inline ElementSet centralizer(const FiniteGroup& g, element x) {
  return ElementSet::from_bits(g.centralizer_bits(x));
}

inline bitset center_bits(const FiniteGroup& g) {
  bitset z(g.order());
  for (element a = 0; a < g.order(); ++a)
    if (g.centralizer_bits(a).count() == g.order()) z.set(a);
  return z;
}

inline ElementSet center(const FiniteGroup& g) { return ElementSet::from_bits(center_bits(g)); }

inline ElementSet conjugacy_class(const FiniteGroup& g, element x) {
  std::vector<element> out;
  out.reserve(g.order());
  for (element h = 0; h < g.order(); ++h) out.push_back(g.mul(g.mul(h, x), g.inv(h)));
  return ElementSet(std::move(out));
}

inline std::size_t element_order(const FiniteGroup& g, element x) {
  std::size_t k = 1;
  for (element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

/// True iff the centralizer of every non-central element is abelian.
inline bool is_ac_group(const FiniteGroup& g) {
  const bitset z = center_bits(g);
  for (element x = 0; x < g.order(); ++x) {
    if (z.test(x)) continue;
    const bitset& cx = g.centralizer_bits(x);
    bool abelian = true;
    cx.for_each([&](std::size_t a) {
      if (abelian && (cx & g.centralizer_bits(static_cast<element>(a))) != cx) abelian = false;
    });
    if (!abelian) return false;
  }
  return true;
}

/// The sets C_G(u) \ Z(G) for non-central u, deduplicated, ordered by smallest element.
struct CentralizerFamily {
  std::vector<ElementSet> members;

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (const auto& m : members) s.push_back(m.size());
    return s;
  }
};

inline CentralizerFamily centralizer_family(const FiniteGroup& g) {
  const bitset z = center_bits(g);
  if (z.count() == g.order()) throw group_error("centralizer family of an abelian group is empty");
  std::map<std::vector<element>, int> seen;
  CentralizerFamily fam;
  for (element u = 0; u < g.order(); ++u) {
    if (z.test(u)) continue;
    bitset c = g.centralizer_bits(u);
    c.subtract(z);
    ElementSet s = ElementSet::from_bits(c);
    if (seen.emplace(s.elements, 0).second) fam.members.push_back(std::move(s));
  }
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

/// Element x^2 for each x, counted per image: the multiset of square-root counts.
inline std::vector<std::size_t> square_root_counts(const FiniteGroup& g) {
  std::vector<std::size_t> cnt(g.order(), 0);
  for (element x = 0; x < g.order(); ++x) ++cnt[g.mul(x, x)];
  std::sort(cnt.begin(), cnt.end());
  return cnt;
}

// ---------------------------------------------------------------------------
// Construction

/// Closes `gens` under `mul`, numbering elements in BFS order from `identity`.
/// `key` maps an element to a hashable value; `label` renders it.
template <class T, class Mul, class Key, class Label>
FiniteGroup close_under(const std::vector<T>& gens, const T& identity, Mul mul, Key key, Label label,
                        std::size_t cap = default_closure_cap) {
  using key_type = decltype(key(identity));
  std::vector<T> elems{identity};
  std::map<key_type, element> index;
  index.emplace(key(identity), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const T& s : gens) {
      T p = mul(elems[i], s);
      auto k = key(p);
      if (index.find(k) == index.end()) {
        if (elems.size() >= cap)
          throw group_error("closure exceeds cap of " + std::to_string(cap) + " elements");
        index.emplace(std::move(k), static_cast<element>(elems.size()));
        elems.push_back(std::move(p));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(key(mul(elems[a], elems[b])));
      if (it == index.end()) throw group_error("generated set is not closed under multiplication");
      table[a * n + b] = it->second;
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const T& e : elems) labels.push_back(label(e));
  return FiniteGroup(std::move(table), std::move(labels));
}

inline bool is_bijection(const permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

/// Product applies `a` first, then `b` (right action, as in GAP).
inline permutation compose(const permutation& a, const permutation& b) {
  permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

/// Disjoint-cycle notation with 1-based points; "()" for the identity.
inline std::string cycle_notation(const permutation& p) {
  std::ostringstream os;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) os << ' ';
      first = false;
      os << j + 1;
      j = p[j];
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

/// Parses "(1 2)(3 4 5)" on `degree` points. Whitespace or commas separate points; "()" is
/// the identity. Throws group_error on malformed input.
inline permutation parse_cycles(const std::string& text, std::size_t degree) {
  permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw group_error("expected '(' at column " + std::to_string(i + 1));
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
      if (i >= text.size()) throw group_error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw group_error("unexpected character '" + std::string(1, text[i]) + "' at column " + std::to_string(i + 1));
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) throw group_error("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (used[v - 1]) throw group_error("point " + std::to_string(v) + " repeated");
      used[v - 1] = 1;
      cyc.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = static_cast<std::uint32_t>(cyc[(k + 1) % cyc.size()]);
    skip_ws();
  }
  return p;
}

/// Group generated by permutations of {0..m-1}, elements in BFS order from the identity.
inline FiniteGroup group_from_permutations(const std::vector<permutation>& generators,
                                           std::size_t cap = default_closure_cap) {
  std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != degree) throw group_error("generators act on different numbers of points");
    if (!is_bijection(g)) throw group_error("generator is not a bijection");
  }
  permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  return close_under(generators, id, compose, [](const permutation& p) { return p; }, cycle_notation, cap);
}

inline FiniteGroup group_from_matrices(const std::vector<Mat2>& generators, const field_ptr& ctx,
                                       std::size_t cap = default_closure_cap) {
  for (const auto& m : generators) {
    if (!(*m.context() == *ctx)) throw field_error("generator over a different field");
    if (mat2_det(m).is_zero()) throw group_error("singular generator " + m.to_string());
  }
  return close_under(generators, Mat2::identity(ctx), mat2_mul, [](const Mat2& m) { return m.index(); },
                     [](const Mat2& m) { return m.to_string(); }, cap);
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap = default_closure_cap) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > cap) throw group_error("direct product order " + std::to_string(n) + " exceeds cap");
  std::vector<element> table(n * n);
  std::vector<std::string> labels(n);
  for (element x = 0; x < n; ++x) {
    labels[x] = "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
    for (element y = 0; y < n; ++y)
      table[x * n + y] = static_cast<element>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  }
  return FiniteGroup(std::move(table), std::move(labels));
}

/// Cyclic group Z_n as a table.
inline FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw group_error("cyclic group of order 0");
  std::vector<element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<element>((a + b) % n);
  }
  return FiniteGroup(std::move(table), std::move(labels));
}

/// The group on indices 0..n-1 with multiplication `mul`, where index 0 is the identity.
template <class Mul>
FiniteGroup group_from_rule(std::size_t n, Mul mul, std::vector<std::string> labels = {}) {
  std::vector<element> table(n * n);
  for (element a = 0; a < n; ++a)
    for (element b = 0; b < n; ++b) table[a * n + b] = static_cast<element>(mul(a, b));
  return FiniteGroup(std::move(table), std::move(labels));
}

/// Left-regular permutation of x: y -> x*y.
inline permutation left_regular(const FiniteGroup& g, element x) {
  permutation p(g.order());
  for (element y = 0; y < g.order(); ++y) p[y] = g.mul(x, y);
  return p;
}

/// G/Z(G) on cosets, each coset represented by its smallest element; cosets ordered by representative.
inline FiniteGroup quotient_by_center(const FiniteGroup& g) {
  const ElementSet z = center(g);
  std::vector<element> rep_of(g.order());
  std::vector<element> reps;
  for (element x = 0; x < g.order(); ++x) {
    element m = x;
    for (auto c : z) m = std::min(m, g.mul(x, c));
    rep_of[x] = m;
    if (m == x) reps.push_back(x);
  }
  std::vector<element> coset_index(g.order());
  for (element x = 0; x < g.order(); ++x)
    coset_index[x] = static_cast<element>(std::lower_bound(reps.begin(), reps.end(), rep_of[x]) - reps.begin());
  const std::size_t k = reps.size();
  std::vector<element> table(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = g.label(reps[i]) + "Z";
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = coset_index[g.mul(reps[i], reps[j])];
  }
  return FiniteGroup(std::move(table), std::move(labels));
}

/// Maximum element order in G/Z(G).
inline std::size_t quotient_exponent_t(const FiniteGroup& g) {
  if (g.is_abelian()) throw group_error("quotient exponent requested for an abelian group");
  const FiniteGroup q = quotient_by_center(g);
  std::size_t t = 1;
  for (element x = 0; x < q.order(); ++x) t = std::max(t, element_order(q, x));
  return t;
}

/// Invariants used to tell catalog groups apart without an isomorphism test.
struct InvariantSignature {
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::vector<std::pair<std::size_t, std::size_t>> order_centralizer;  // sorted (o(x), |C(x)|)
  std::vector<std::size_t> square_roots;

  bool operator==(const InvariantSignature&) const = default;
  auto operator<=>(const InvariantSignature&) const = default;

  std::map<std::size_t, std::size_t> element_orders() const {
    std::map<std::size_t, std::size_t> m;
    for (auto [o, c] : order_centralizer) ++m[o];
    return m;
  }
  std::map<std::size_t, std::size_t> centralizer_sizes() const {
    std::map<std::size_t, std::size_t> m;
    for (auto [o, c] : order_centralizer) ++m[c];
    return m;
  }
};

inline InvariantSignature invariant_signature(const FiniteGroup& g) {
  InvariantSignature s;
  s.order = g.order();
  s.center_order = center_bits(g).count();
  for (element x = 0; x < g.order(); ++x)
    s.order_centralizer.emplace_back(element_order(g, x), g.centralizer_bits(x).count());
  std::sort(s.order_centralizer.begin(), s.order_centralizer.end());
  s.square_roots = square_root_counts(g);
  return s;
}

}  // namespace cgraph
