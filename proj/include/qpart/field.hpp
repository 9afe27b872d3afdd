#pragma once

// Exact arithmetic in the ring of integers of a real quadratic field Q(√D).
//
// Elements are stored in the integral basis (1, ω) where
//   ω = √D          for D ≡ 2, 3 (mod 4)
//   ω = (1 + √D)/2  for D ≡ 1 (mod 4)
// and ξ = -ω' is √D or (√D - 1)/2 respectively. Every order and sign decision
// reduces to comparing A² with B²·D for integers A, B; nothing here touches
// floating point.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "qpart/errors.hpp"
#include "qpart/integer.hpp"

namespace qpart {

class FieldId {
 public:
  explicit FieldId(std::int64_t d) : d_(d) {
    if (d < 2) throw InvalidField("D must be at least 2, got " + std::to_string(d));
    if (!is_squarefree(d)) throw InvalidField("D must be squarefree, got " + std::to_string(d));
  }

  std::int64_t D() const { return d_; }
  Integer D_int() const { return make_int(d_); }
  bool one_mod_four() const { return d_ % 4 == 1; }

  // Δ_K: D when D ≡ 1 (mod 4), 4D otherwise.
  Integer discriminant() const { return one_mod_four() ? D_int() : 4 * D_int(); }

  // (D - 1)/4, the constant term of ω² when D ≡ 1 (mod 4).
  Integer omega_sq_const() const { return one_mod_four() ? make_int((d_ - 1) / 4) : D_int(); }

  static bool is_squarefree(std::int64_t d) {
    if (d < 1) return false;
    for (std::int64_t p = 2; p * p <= d; ++p) {
      if (d % (p * p) == 0) return false;
    }
    return true;
  }

  friend bool operator==(const FieldId& l, const FieldId& r) { return l.d_ == r.d_; }

 private:
  std::int64_t d_;
};

// a + b·ω.
struct QElement {
  Integer a;
  Integer b;

  QElement() = default;
  QElement(Integer a_, Integer b_) : a(std::move(a_)), b(std::move(b_)) {}
  static QElement rational(const Integer& n) { return {n, 0}; }

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

  QElement& operator+=(const QElement& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  QElement& operator-=(const QElement& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  friend QElement operator+(QElement l, const QElement& r) { return l += r; }
  friend QElement operator-(QElement l, const QElement& r) { return l -= r; }
  friend QElement operator-(const QElement& e) { return {-e.a, -e.b}; }
  friend QElement operator*(const Integer& k, const QElement& e) { return {k * e.a, k * e.b}; }
  friend bool operator==(const QElement& l, const QElement& r) { return l.a == r.a && l.b == r.b; }
  friend bool operator!=(const QElement& l, const QElement& r) { return !(l == r); }

  friend std::ostream& operator<<(std::ostream& os, const QElement& e) {
    return os << '(' << e.a.get_str() << ", " << e.b.get_str() << ')';
  }
};

// Sign of A + B√D.
inline int sign_surd(const Integer& A, const Integer& B, const FieldId& f) {
  const int sa = sgn(A);
  const int sb = sgn(B);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare A² against B²·D.
  const int c = cmp(Integer(A * A), Integer(B * B * f.D_int()));
  if (c == 0) return 0;  // unreachable for squarefree D ≥ 2 with B ≠ 0
  return c > 0 ? sa : sb;
}

// Write e as (A + B√D)/den with den = 2 when D ≡ 1 (mod 4) and 1 otherwise.
struct SurdCoords {
  Integer A;
  Integer B;
  int den;
};

inline SurdCoords surd_coords(const QElement& e, const FieldId& f) {
  if (f.one_mod_four()) return {2 * e.a + e.b, e.b, 2};
  return {e.a, e.b, 1};
}

// Inverse of surd_coords for (A + B√D)/den. Throws if not an algebraic integer.
inline QElement from_surd(const Integer& A, const Integer& B, const Integer& den, const FieldId& f) {
  if (sgn(den) <= 0) throw InvalidArgument("from_surd: denominator must be positive");
  if (f.one_mod_four()) {
    // A/den + (B/den)√D = a + b/2 + (b/2)√D
    const Integer twoB = 2 * B;
    if (!divides(den, twoB)) throw InvalidArgument("from_surd: not an algebraic integer");
    Integer b = twoB / den;
    const Integer num = 2 * A - b * den;
    if (!divides(Integer(2 * den), num)) throw InvalidArgument("from_surd: not an algebraic integer");
    return {num / (2 * den), std::move(b)};
  }
  if (!divides(den, A) || !divides(den, B)) throw InvalidArgument("from_surd: not an algebraic integer");
  return {A / den, B / den};
}

/// Sign of the real embedding a + b·ω.
inline int sign_of(const QElement& e, const FieldId& f) {
  const SurdCoords c = surd_coords(e, f);
  return sign_surd(c.A, c.B, f);
}

inline QElement conjugate(const QElement& e, const FieldId& f) {
  if (f.one_mod_four()) return {e.a + e.b, -e.b};  // ω' = 1 - ω
  return {e.a, -e.b};
}

inline bool is_totally_positive(const QElement& e, const FieldId& f) {
  return sign_of(e, f) > 0 && sign_of(conjugate(e, f), f) > 0;
}

inline Integer trace(const QElement& e, const FieldId& f) {
  return f.one_mod_four() ? Integer(2 * e.a + e.b) : Integer(2 * e.a);
}

inline Integer norm(const QElement& e, const FieldId& f) {
  if (f.one_mod_four()) return e.a * e.a + e.a * e.b - e.b * e.b * f.omega_sq_const();
  return e.a * e.a - e.b * e.b * f.D_int();
}

inline QElement mul(const QElement& l, const QElement& r, const FieldId& f) {
  const Integer bd = l.b * r.b;
  if (f.one_mod_four()) {
    // ω² = ω + (D-1)/4
    return {l.a * r.a + bd * f.omega_sq_const(), l.a * r.b + l.b * r.a + bd};
  }
  return {l.a * r.a + bd * f.D_int(), l.a * r.b + l.b * r.a};
}

/// l ≻ r, i.e. l - r is totally positive.
inline bool succ_gt(const QElement& l, const QElement& r, const FieldId& f) {
  return is_totally_positive(l - r, f);
}

/// l ⪰ r.
inline bool succ_ge(const QElement& l, const QElement& r, const FieldId& f) {
  return l == r || succ_gt(l, r, f);
}

inline bool lex_lt(const QElement& l, const QElement& r) {
  const int c = cmp(l.a, r.a);
  return c < 0 || (c == 0 && l.b < r.b);
}

// ⌊(a + b√D)/den⌋ for den > 0, exact.
inline Integer floor_surd(const Integer& a, const Integer& b, const Integer& den, const FieldId& f) {
  if (sgn(den) <= 0) throw InvalidArgument("floor_surd: denominator must be positive");
  Integer fl;  // ⌊b√D⌋
  if (sgn(b) >= 0) {
    fl = isqrt(b * b * f.D_int());
  } else {
    // b√D is irrational for b ≠ 0, so the floor is one below -⌊|b|√D⌋.
    fl = -isqrt(b * b * f.D_int()) - 1;
  }
  return floor_div(a + fl, den);
}

// ξ as (A + B√D)/den: √D, or (√D - 1)/2.
inline Integer floor_xi_mult(const Integer& y, const FieldId& f) {
  if (sgn(y) < 0) throw InvalidArgument("floor_xi_mult: y must be non-negative");
  if (f.one_mod_four()) return floor_surd(Integer(-y), y, 2, f);
  return floor_surd(0, y, 1, f);
}

inline Integer ceil_xi_mult(const Integer& y, const FieldId& f) {
  if (sgn(y) == 0) return 0;
  return floor_xi_mult(y, f) + 1;  // y·ξ is irrational for y ≥ 1
}

// ξ = ω - 1 when D ≡ 1 (mod 4), ξ = ω otherwise.
inline QElement xi_element(const FieldId& f) { return {f.one_mod_four() ? -1 : 0, 1}; }

// p + q·ξ in the (1, ω) basis.
inline QElement from_xi(const Integer& p, const Integer& q, const FieldId& f) {
  if (f.one_mod_four()) return {p - q, q};
  return {p, q};
}

// (⌈yξ⌉ + k) + y·ω, the element indexed by (k, y) in the search tables.
inline QElement ky_element(const Integer& k, const Integer& y, const FieldId& f) {
  return {ceil_xi_mult(y, f) + k, y};
}

}  // namespace qpart
