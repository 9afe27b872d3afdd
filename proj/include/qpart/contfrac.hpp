#pragma once

// Continued fraction of σ_D = ω + ⌊ξ⌋, its convergents, the elements
// α_i = p_i + q_i·ξ, the indecomposables α_{i,r} = α_i + r·α_{i+1} (odd i)
// and the units ε, ε₊.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qpart/field.hpp"

namespace qpart {

struct Convergent {
  Integer p;
  Integer q;
};

struct FieldContext {
  FieldId field;
  Integer floor_xi;
  std::vector<Integer> period;  // u_0 .. u_{s-1}
  // Indexed from i = -1: convergents[i + 1] = (p_i, q_i), alphas[i + 1] = α_i.
  std::vector<Convergent> convergents;
  std::vector<QElement> alphas;
  // One ε₊-period of indecomposables, y ≥ 0 representatives, (1, ω) basis.
  std::vector<QElement> indecomposables;
  QElement eps;
  QElement eps_plus;
  Integer discriminant;

  std::size_t period_length() const { return period.size(); }
  // Index shift S with α_{i+S} = ε₊·α_i: s for even s, 2s for odd s.
  std::size_t eps_plus_shift() const { return period.size() % 2 == 0 ? period.size() : 2 * period.size(); }
  const Integer& u(long i) const { return period[static_cast<std::size_t>(i) % period.size()]; }
  const QElement& alpha(long i) const { return alphas.at(static_cast<std::size_t>(i + 1)); }
  const Convergent& convergent(long i) const { return convergents.at(static_cast<std::size_t>(i + 1)); }
  long max_alpha_index() const { return static_cast<long>(alphas.size()) - 2; }
};

/// Purely periodic partial quotients (u_0, ..., u_{s-1}) of σ_D.
///
/// Runs the usual (P + √D)/Q recursion starting from σ_D itself and stops when
/// the initial (P, Q) state comes back.
inline std::vector<Integer> expand_sigma(const FieldId& f) {
  const Integer D = f.D_int();
  const Integer root = isqrt(D);
  Integer P, Q;
  if (f.one_mod_four()) {
    const Integer floor_xi = floor_xi_mult(1, f);
    P = 2 * floor_xi + 1;
    Q = 2;
  } else {
    P = root;
    Q = 1;
  }
  const Integer P0 = P, Q0 = Q;
  std::vector<Integer> period;
  do {
    // Q > 0 throughout for a reduced quadratic irrational.
    Integer a = floor_div(P + root, Q);
    P = a * Q - P;
    const Integer rem = D - P * P;
    if (!divides(Q, rem)) throw std::logic_error("expand_sigma: Q does not divide D - P^2");
    Q = rem / Q;
    period.push_back(std::move(a));
    if (period.size() > 100000000) throw std::logic_error("expand_sigma: period did not close");
  } while (P != P0 || Q != Q0);
  return period;
}

inline FieldContext build_context(const FieldId& f) {
  FieldContext ctx{f, floor_xi_mult(1, f), expand_sigma(f), {}, {}, {}, {}, {}, f.discriminant()};
  const long s = static_cast<long>(ctx.period.size());
  const long S = static_cast<long>(ctx.eps_plus_shift());

  // Enough terms for α_{2S} so that the α_{i+s} = ε·α_i relation can be checked
  // across two full ε₊-periods.
  const long last = 2 * S + 1;
  ctx.convergents.reserve(static_cast<std::size_t>(last + 2));
  ctx.convergents.push_back({1, 0});                                // i = -1
  ctx.convergents.push_back({(ctx.period[0] + 1) / 2, 1});         // i = 0, p_0 = ⌈u_0/2⌉
  for (long i = 1; i <= last; ++i) {
    const Integer& u = ctx.u(i);
    const Convergent& c1 = ctx.convergent(i - 1);
    const Convergent& c2 = ctx.convergent(i - 2);
    ctx.convergents.push_back({u * c1.p + c2.p, u * c1.q + c2.q});
  }
  ctx.alphas.reserve(ctx.convergents.size());
  for (const Convergent& c : ctx.convergents) ctx.alphas.push_back(from_xi(c.p, c.q, f));

  ctx.eps = ctx.alpha(s - 1);
  ctx.eps_plus = ctx.alpha(S - 1);

  for (long i = -1; i <= S - 3; i += 2) {
    const Integer& u_next = ctx.u(i + 2);
    for (Integer r = 0; r < u_next; ++r) {
      QElement e = ctx.alpha(i) + r * ctx.alpha(i + 1);
      ctx.indecomposables.push_back(std::move(e));
    }
  }
  return ctx;
}

/// ⌊ε₊ / (ξ + ω)⌋, exact.
///
/// With ε₊ = (A + B√D)/e and ξ + ω = c√D we always have e·c = 2, so the ratio
/// is (B·D + A√D)/(2D).
inline Integer floor_ratio_eps(const FieldContext& ctx) {
  const FieldId& f = ctx.field;
  const SurdCoords c = surd_coords(ctx.eps_plus, f);
  return floor_surd(c.B * f.D_int(), c.A, 2 * f.D_int(), f);
}

}  // namespace qpart
