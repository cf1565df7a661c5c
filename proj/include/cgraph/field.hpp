#pragma once

// Small finite fields GF(p^k) in polynomial basis, and 2x2 matrices over them.

#include <array>
#include <cstdint>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgraph {

class field_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int max_field_degree = 4;
inline constexpr int max_field_order = 16;

/// Characteristic, degree and monic reduction polynomial of GF(p^k).
/// `poly` holds the low coefficients c_0..c_{k-1} of x^k + c_{k-1}x^{k-1} + ... + c_0.
class FieldContext {
public:
  FieldContext(int p, int k, std::vector<int> poly) : p_(p), k_(k), poly_(std::move(poly)) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
      throw field_error("unsupported characteristic " + std::to_string(p));
    if (k < 1 || k > max_field_degree)
      throw field_error("unsupported degree " + std::to_string(k));
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    if (q_ > max_field_order)
      throw field_error("field order " + std::to_string(q_) + " exceeds 16");
    if (static_cast<int>(poly_.size()) != k)
      throw field_error("reduction polynomial must have exactly k low coefficients");
    for (int c : poly_)
      if (c < 0 || c >= p) throw field_error("reduction coefficient out of range");
    if (!irreducible())
      throw field_error("reduction polynomial is reducible");
  }

  /// The field of order q with the fixed reduction polynomials used throughout.
  static std::shared_ptr<const FieldContext> make(int q) {
    switch (q) {
      case 2: return std::make_shared<FieldContext>(2, 1, std::vector<int>{0});
      case 3: return std::make_shared<FieldContext>(3, 1, std::vector<int>{0});
      case 5: return std::make_shared<FieldContext>(5, 1, std::vector<int>{0});
      case 7: return std::make_shared<FieldContext>(7, 1, std::vector<int>{0});
      case 4: return std::make_shared<FieldContext>(2, 2, std::vector<int>{1, 1});        // x^2+x+1
      case 8: return std::make_shared<FieldContext>(2, 3, std::vector<int>{1, 1, 0});     // x^3+x+1
      case 9: return std::make_shared<FieldContext>(3, 2, std::vector<int>{1, 0});        // x^2+1
      case 16: return std::make_shared<FieldContext>(2, 4, std::vector<int>{1, 1, 0, 0}); // x^4+x+1
      default: throw field_error("no supported field of order " + std::to_string(q));
    }
  }

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  const std::vector<int>& reduction() const { return poly_; }

  bool operator==(const FieldContext& o) const { return p_ == o.p_ && k_ == o.k_ && poly_ == o.poly_; }

  using coeffs = std::array<std::uint8_t, max_field_degree>;

  coeffs from_index(int v) const {
    coeffs c{};
    for (int i = 0; i < k_; ++i) {
      c[i] = static_cast<std::uint8_t>(v % p_);
      v /= p_;
    }
    return c;
  }
  int to_index(const coeffs& c) const {
    int v = 0;
    for (int i = k_ - 1; i >= 0; --i) v = v * p_ + c[i];
    return v;
  }

  coeffs add(const coeffs& x, const coeffs& y) const {
    coeffs r{};
    for (int i = 0; i < k_; ++i) r[i] = static_cast<std::uint8_t>((x[i] + y[i]) % p_);
    return r;
  }
  coeffs neg(const coeffs& x) const {
    coeffs r{};
    for (int i = 0; i < k_; ++i) r[i] = static_cast<std::uint8_t>((p_ - x[i]) % p_);
    return r;
  }
  coeffs mul(const coeffs& x, const coeffs& y) const {
    std::array<int, 2 * max_field_degree> prod{};
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    // x^k = -(c_0 + ... + c_{k-1} x^{k-1})
    for (int d = 2 * k_ - 2; d >= k_; --d) {
      int lead = prod[d];
      if (lead == 0) continue;
      prod[d] = 0;
      for (int i = 0; i < k_; ++i)
        prod[d - k_ + i] = ((prod[d - k_ + i] - lead * poly_[i]) % p_ + p_) % p_;
    }
    coeffs r{};
    for (int i = 0; i < k_; ++i) r[i] = static_cast<std::uint8_t>(prod[i]);
    return r;
  }

private:
  // The quotient ring is a field iff every nonzero element is invertible.
  bool irreducible() const {
    for (int a = 1; a < q_; ++a) {
      bool found = false;
      for (int b = 1; b < q_ && !found; ++b)
        found = to_index(mul(from_index(a), from_index(b))) == 1;
      if (!found) return false;
    }
    return true;
  }

  int p_;
  int k_;
  int q_ = 1;
  std::vector<int> poly_;
};

using field_ptr = std::shared_ptr<const FieldContext>;

class FieldElement {
public:
  FieldElement(field_ptr ctx, int index) : ctx_(std::move(ctx)) {
    if (!ctx_) throw field_error("null field context");
    if (index < 0 || index >= ctx_->order()) throw field_error("field element index out of range");
    c_ = ctx_->from_index(index);
  }
  FieldElement(field_ptr ctx, const FieldContext::coeffs& c) : ctx_(std::move(ctx)), c_(c) {
    for (int i = 0; i < ctx_->degree(); ++i)
      if (c_[i] >= ctx_->characteristic()) throw field_error("coefficient out of range");
  }

  static FieldElement zero(field_ptr ctx) { return {std::move(ctx), 0}; }
  static FieldElement one(field_ptr ctx) { return {std::move(ctx), 1}; }
  /// The class of x, i.e. the polynomial-basis generator t.
  static FieldElement generator(field_ptr ctx) {
    FieldContext::coeffs c{};
    if (ctx->degree() > 1)
      c[1] = 1;
    else
      c[0] = 1;
    return {std::move(ctx), c};
  }

  const field_ptr& context() const { return ctx_; }
  const FieldContext::coeffs& coefficients() const { return c_; }
  int index() const { return ctx_->to_index(c_); }
  bool is_zero() const { return index() == 0; }

  bool operator==(const FieldElement& o) const { return same_field(o) && c_ == o.c_; }

  bool same_field(const FieldElement& o) const { return ctx_ == o.ctx_ || *ctx_ == *o.ctx_; }

  std::string to_string() const {
    if (ctx_->degree() == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (int i = ctx_->degree() - 1; i >= 0; --i) {
      if (c_[i] == 0) continue;
      if (!first) os << '+';
      first = false;
      if (i == 0 || c_[i] != 1) os << int(c_[i]);
      if (i >= 1) os << 't';
      if (i >= 2) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
  }

private:
  field_ptr ctx_;
  FieldContext::coeffs c_{};
};

namespace detail {
inline void require_same_field(const FieldElement& x, const FieldElement& y) {
  if (!x.same_field(y)) throw field_error("field context mismatch");
}
}  // namespace detail

inline FieldElement field_add(const FieldElement& x, const FieldElement& y) {
  detail::require_same_field(x, y);
  return {x.context(), x.context()->add(x.coefficients(), y.coefficients())};
}

inline FieldElement field_neg(const FieldElement& x) {
  return {x.context(), x.context()->neg(x.coefficients())};
}

inline FieldElement field_sub(const FieldElement& x, const FieldElement& y) {
  return field_add(x, field_neg(y));
}

inline FieldElement field_mul(const FieldElement& x, const FieldElement& y) {
  detail::require_same_field(x, y);
  return {x.context(), x.context()->mul(x.coefficients(), y.coefficients())};
}

inline FieldElement field_inv(const FieldElement& x) {
  if (x.is_zero()) throw field_error("inverse of zero");
  const auto& ctx = x.context();
  for (int b = 1; b < ctx->order(); ++b) {
    FieldElement y(ctx, b);
    if (field_mul(x, y).index() == 1) return y;
  }
  throw field_error("no inverse found");  // unreachable for an irreducible reduction polynomial
}

/// A generator of the multiplicative group.
inline FieldElement primitive_element(const field_ptr& ctx) {
  const int q = ctx->order();
  for (int a = 1; a < q; ++a) {
    FieldElement x(ctx, a);
    FieldElement y = x;
    int ord = 1;
    while (y.index() != 1) {
      y = field_mul(y, x);
      ++ord;
    }
    if (ord == q - 1) return x;
  }
  throw field_error("no primitive element");
}

struct Mat2 {
  FieldElement a, b, c, d;

  static Mat2 identity(const field_ptr& ctx) {
    return {FieldElement::one(ctx), FieldElement::zero(ctx), FieldElement::zero(ctx), FieldElement::one(ctx)};
  }
  /// Entries given as field-element indices, row-major.
  static Mat2 of(const field_ptr& ctx, int a, int b, int c, int d) {
    return {FieldElement(ctx, a), FieldElement(ctx, b), FieldElement(ctx, c), FieldElement(ctx, d)};
  }

  const field_ptr& context() const { return a.context(); }

  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

  /// Dense index in [0, q^4), used as a hash key during closure.
  int index() const {
    const int q = context()->order();
    return ((a.index() * q + b.index()) * q + c.index()) * q + d.index();
  }

  std::string to_string() const {
    return "[[" + a.to_string() + "," + b.to_string() + "],[" + c.to_string() + "," + d.to_string() + "]]";
  }
};

inline Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return {field_add(field_mul(x.a, y.a), field_mul(x.b, y.c)), field_add(field_mul(x.a, y.b), field_mul(x.b, y.d)),
          field_add(field_mul(x.c, y.a), field_mul(x.d, y.c)), field_add(field_mul(x.c, y.b), field_mul(x.d, y.d))};
}

inline FieldElement mat2_det(const Mat2& m) { return field_sub(field_mul(m.a, m.d), field_mul(m.b, m.c)); }

inline Mat2 mat2_inv(const Mat2& m) {
  FieldElement det = mat2_det(m);
  if (det.is_zero()) throw field_error("singular matrix");
  FieldElement s = field_inv(det);
  return {field_mul(s, m.d), field_mul(s, field_neg(m.b)), field_mul(s, field_neg(m.c)), field_mul(s, m.a)};
}

}  // namespace cgraph
