#pragma once

// Brute-force partition enumeration. Deliberately naive and independent of the
// recurrence and of the column windows used by the grid: candidate parts come
// from a crude box and are filtered with sign tests only.

#include <cstdint>
#include <vector>

#include "qpart/field.hpp"

namespace qpart {

using Partition = std::vector<QElement>;  // parts in non-increasing lexicographic order

struct OracleOptions {
  std::uint64_t node_budget = 10'000'000;
};

namespace detail {

// Every β with 0 ≺ β ⪯ rest, β ≤_LEX bound, in decreasing lexicographic order.
// For totally positive β = u + v·ω both u > 0 and |v| < u·max(1/ξ, 1/ω) < 2u.
inline std::vector<QElement> oracle_parts(const QElement& rest, const QElement& bound, const FieldId& f) {
  std::vector<QElement> out;
  for (Integer u = rest.a; u >= 1; --u) {
    const Integer vmax = 2 * u;
    for (Integer v = vmax; v >= -vmax; --v) {
      QElement beta{u, v};
      if (lex_lt(bound, beta)) continue;
      if (!is_totally_positive(beta, f)) continue;
      const QElement r = rest - beta;
      if (!r.is_zero() && !is_totally_positive(r, f)) continue;
      out.push_back(std::move(beta));
    }
  }
  return out;
}

template <typename Emit>
void oracle_descend(const QElement& rest, const QElement& bound, const FieldId& f, Partition& stack,
                    std::uint64_t& nodes, const OracleOptions& opt, Emit&& emit) {
  if (++nodes > opt.node_budget) throw BudgetExceeded("partition oracle exceeded its node budget");
  if (rest.is_zero()) {
    emit(stack);
    return;
  }
  for (const QElement& beta : oracle_parts(rest, bound, f)) {
    stack.push_back(beta);
    oracle_descend(rest - beta, beta, f, stack, nodes, opt, emit);
    stack.pop_back();
  }
}

}  // namespace detail

/// Every partition of α, each multiset exactly once.
inline std::vector<Partition> enumerate_partitions(const QElement& alpha, const FieldId& f,
                                                   const OracleOptions& opt = {}) {
  if (!is_totally_positive(alpha, f)) throw InvalidArgument("enumerate_partitions: α must be totally positive");
  std::vector<Partition> out;
  Partition stack;
  std::uint64_t nodes = 0;
  detail::oracle_descend(alpha, alpha, f, stack, nodes, opt, [&](const Partition& p) { out.push_back(p); });
  return out;
}

inline Integer count_partitions(const QElement& alpha, const FieldId& f, const OracleOptions& opt = {}) {
  if (alpha.is_zero()) return 1;
  if (!is_totally_positive(alpha, f)) throw InvalidArgument("count_partitions: α must be totally positive");
  Integer count = 0;
  Partition stack;
  std::uint64_t nodes = 0;
  detail::oracle_descend(alpha, alpha, f, stack, nodes, opt, [&](const Partition&) { ++count; });
  return count;
}

}  // namespace qpart
