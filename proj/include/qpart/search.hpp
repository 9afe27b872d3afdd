#pragma once

// Finding every α (up to conjugation and totally positive units) with a given
// number of partitions.
//
// Each class has a representative α = (⌈yξ⌉ + k) + y·ω with k, y ≥ 0 and
// 1 ≤ α/α' ≤ ε₊. Counts grow strictly along ≺, so once p_K(k_max) ≥ M and the
// corner p_K(⌈y_max·ξ⌉ + y_max·ω) ≥ M with y_max ≥ ⌊ε₊/(ξ+ω)⌋, every
// representative with p_K ≤ M has k ≤ k_max and y ≤ y_max.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

/// Smallest n ≥ 1 with p_K(n) ≥ m.
template <class Evaluator>
std::int64_t find_kmax(Evaluator& grid, const Integer& m) {
  if (m < 1) throw InvalidArgument("find_kmax: m must be positive");
  for (std::int64_t n = 1;; ++n) {
    if (grid.value(QElement::rational(make_int(n))) >= m) return n;
  }
}

/// Smallest y ≥ ⌊ε₊/(ξ+ω)⌋ whose corner element ⌈yξ⌉ + y·ω has p_K ≥ m.
template <class Evaluator>
std::int64_t find_ymax(Evaluator& grid, const Integer& m) {
  if (m < 1) throw InvalidArgument("find_ymax: m must be positive");
  const FieldId& f = grid.field();
  for (std::int64_t y = to_i64(floor_ratio_eps(grid.context()));; ++y) {
    if (grid.value(ky_element(0, make_int(y), f)) >= m) return y;
  }
}

// ξ + ω as an element: 2ω - 1 or 2ω.
inline QElement xi_plus_omega(const FieldId& f) { return xi_element(f) + QElement{0, 1}; }

/// x ≥ 1, y ≥ 0 and α ≤ ε₊·α' as real numbers.
inline bool in_fundamental_domain(const QElement& e, const FieldContext& ctx) {
  const FieldId& f = ctx.field;
  if (e.a < 1 || e.b < 0) return false;
  return sign_of(mul(ctx.eps_plus, conjugate(e, f), f) - e, f) >= 0;
}

/// The fundamental-domain representative of the class of a totally positive e.
inline QElement canonical_representative(QElement e, const FieldContext& ctx) {
  const FieldId& f = ctx.field;
  if (!is_totally_positive(e, f)) throw InvalidArgument("canonical_representative: element is not totally positive");
  const QElement eps_inv = conjugate(ctx.eps_plus, f);  // norm 1
  for (;;) {
    if (sgn(e.b) < 0) {
      e = conjugate(e, f);  // α/α' < 1 exactly when y < 0
      continue;
    }
    if (sign_of(mul(ctx.eps_plus, conjugate(e, f), f) - e, f) < 0) {
      e = mul(e, eps_inv, f);  // divides α/α' by ε₊²
      continue;
    }
    return e;
  }
}

struct SearchReport {
  FieldId field;
  std::int64_t m_max = 0;
  std::int64_t k_max = 0;
  std::int64_t y_max = 0;
  std::vector<std::vector<Integer>> slice;  // slice[y][k] = p_K((⌈yξ⌉ + k) + y·ω)
  std::map<std::int64_t, std::vector<QElement>> representatives;  // m -> lex-sorted, 1 ≤ m ≤ m_max
};

// Works with a PartitionGrid or a SparseEvaluator; the grid pays for whole
// columns, the sparse evaluator only for the intervals below the slice.
template <class Evaluator>
SearchReport search_m(Evaluator& grid, std::int64_t M) {
  if (M < 1) throw InvalidArgument("search_m: M must be positive");
  const FieldId& f = grid.field();
  const FieldContext& ctx = grid.context();
  const Integer bound = make_int(M);
  SearchReport rep{f, M, find_kmax(grid, bound), find_ymax(grid, bound), {}, {}};

  for (std::int64_t m = 1; m <= M; ++m) rep.representatives[m];
  for (std::int64_t y = 0; y <= rep.y_max; ++y) {
    std::vector<Integer> row;
    for (std::int64_t k = 0; k <= rep.k_max; ++k) {
      const QElement alpha = ky_element(make_int(k), make_int(y), f);
      const Integer p = grid.value(alpha);
      if (p <= bound && in_fundamental_domain(alpha, ctx)) rep.representatives[p.get_si()].push_back(alpha);
      row.push_back(p);
    }
    rep.slice.push_back(std::move(row));
  }
  for (auto& [m, reps] : rep.representatives) std::sort(reps.begin(), reps.end(), [](auto& l, auto& r) { return lex_lt(l, r); });
  return rep;
}

inline SearchReport search_m(const FieldId& f, std::int64_t M) {
  SparseEvaluator eval(build_context(f));
  return search_m(eval, M);
}

/// (E_n, F_n) = (⌊n/2⌋², (n-1)² for even n or n² for odd n).
inline std::pair<std::int64_t, std::int64_t> en_fn_bounds(std::int64_t n) {
  if (n < 1) throw InvalidArgument("en_fn_bounds: n must be positive");
  const std::int64_t h = n / 2;
  return {h * h, n % 2 == 0 ? (n - 1) * (n - 1) : n * n};
}

inline std::vector<std::int64_t> squarefree_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = std::max<std::int64_t>(lo, 2); d <= hi; ++d)
    if (FieldId::is_squarefree(d)) out.push_back(d);
  return out;
}

// The m whose set D(m) is decided completely by a finite scan, and the largest D
// that still needs an explicit search; beyond it p_K(n) = p(n) = m for some n.
inline std::optional<std::int64_t> dm_completeness_threshold(std::int64_t m) {
  switch (m) {
    case 1:
    case 2: return 1;   // p_K(1) = 1, p_K(2) = 2 in every field
    case 3: return 5;   // p_K(3) = 3 for D ∈ {2, 3} and D > 5
    case 5: return 5;   // p_K(4) = 5 for D > 5
    case 7: return 25;  // p_K(5) = 7 for D ≡ 2, 3, D > 4 and D ≡ 1, D > 25
    case 11: return 25; // p_K(6) = 11 for D ≡ 2, 3, D > 9 and D ≡ 1, D > 25
    default: return std::nullopt;
  }
}

struct DmEntry {
  std::int64_t D = 0;
  bool member = false;         // m is not a value of p_K
  std::string decided_by;      // "p_K(n) = m" or "search"
};

struct DmScan {
  std::int64_t m = 0;
  std::vector<DmEntry> entries;  // in input order
  std::vector<std::int64_t> members;
  bool exhaustive = false;  // the scan range reaches the completeness threshold
  std::optional<std::int64_t> threshold;
};

inline DmEntry dm_probe(std::int64_t m, std::int64_t D) {
  const FieldId f(D);
  SparseEvaluator grid(build_context(f));
  // Cheap exit: a rational integer n with p(n) = m and p_K(n) = m.
  const std::vector<Integer> p = p_rational_table(64);
  for (std::int64_t n = 1; n < static_cast<std::int64_t>(p.size()) && p[static_cast<std::size_t>(n)] <= m; ++n) {
    if (p[static_cast<std::size_t>(n)] == m && grid.value(QElement::rational(make_int(n))) == m)
      return {D, false, "p_K(" + std::to_string(n) + ") = " + std::to_string(m)};
  }
  const SearchReport rep = search_m(grid, m);
  return {D, rep.representatives.at(m).empty(), "search"};
}

/// Which D in Ds have no element with exactly m partitions. Fields are probed
/// concurrently; the result order follows Ds.
inline DmScan dm_scan(std::int64_t m, const std::vector<std::int64_t>& Ds, unsigned threads = 1) {
  if (m < 1) throw InvalidArgument("dm_scan: m must be positive");
  DmScan out{m, std::vector<DmEntry>(Ds.size()), {}, false, dm_completeness_threshold(m)};
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto work = [&] {
    for (std::size_t i = next++; i < Ds.size(); i = next++) {
      try {
        out.entries[i] = dm_probe(m, Ds[i]);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(Ds.size())));
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);
  for (const DmEntry& e : out.entries)
    if (e.member) out.members.push_back(e.D);
  if (out.threshold) {
    const auto needed = squarefree_range(2, *out.threshold);
    out.exhaustive = std::all_of(needed.begin(), needed.end(),
                                 [&](std::int64_t d) { return std::find(Ds.begin(), Ds.end(), d) != Ds.end(); });
  }
  return out;
}

struct ThresholdRow {
  std::int64_t n = 0;
  std::int64_t D = 0;
  std::int64_t bound = 0;  // E_n or F_n for this D
  Integer p_K;
  Integer p;
};

/// Checks p_K(n) = p(n) exactly when D exceeds E_n (D ≡ 2, 3) or F_n (D ≡ 1),
/// and p_K(n) > p(n) otherwise, and that the extra two-part partitions used
/// for optimality consist of totally positive parts.
inline std::vector<ThresholdRow> verify_thresholds(std::int64_t n, const std::vector<std::int64_t>& Ds) {
  const auto [E, F] = en_fn_bounds(n);
  const Integer pn = p_rational(n);
  std::vector<ThresholdRow> rows;
  std::string failures;
  for (std::int64_t D : Ds) {
    const FieldId f(D);
    PartitionGrid grid(build_context(f));
    const std::int64_t bound = f.one_mod_four() ? F : E;
    const Integer& pk = grid.value(QElement::rational(make_int(n)));
    rows.push_back({n, D, bound, pk, pn});
    const bool above = D > bound;
    if (above ? pk != pn : pk <= pn) {
      failures += " (n=" + std::to_string(n) + ", D=" + std::to_string(D) + ": p_K=" + pk.get_str() +
                  ", p=" + pn.get_str() + ")";
      continue;
    }
    if (above) continue;
    // The explicit extra partition n = β + γ.
    const std::int64_t k = n / 2;
    QElement beta, gamma;
    if (!f.one_mod_four()) {
      if (n < 4) continue;
      beta = {make_int(n - k), 1};  // k + √D or k + 1 + √D
      gamma = {make_int(k), -1};
    } else {
      if (n < 3) continue;
      if (n % 2 == 0) {
        beta = {make_int(k), 1};
        gamma = {make_int(k), -1};
      } else {
        beta = {make_int(k + 1), -1};
        gamma = {make_int(k), 1};
      }
    }
    if (!is_totally_positive(beta, f) || !is_totally_positive(gamma, f) ||
        beta + gamma != QElement::rational(make_int(n)))
      failures += " (n=" + std::to_string(n) + ", D=" + std::to_string(D) + ": extra partition not totally positive)";
  }
  if (!failures.empty()) throw AssertionFailure("threshold check failed:" + failures);
  return rows;
}

struct Witness {
  QElement alpha;
  Integer count;
  std::int64_t expected = 0;
  std::string branch;
};

/// α = (⌈ξ⌉ + 2) + ω, which has exactly 4 partitions.
template <class Evaluator>
Witness witness_m4(Evaluator& grid) {
  const FieldId& f = grid.field();
  const QElement alpha = ky_element(2, 1, f);
  Witness w{alpha, grid.value(alpha), 4, "m4"};
  if (w.count != 4)
    throw AssertionFailure("D = " + std::to_string(f.D()) + ": p_K((⌈ξ⌉+2)+ω) = " + w.count.get_str() + ", expected 4");
  return w;
}

// ⌈ξ⌉ - ξ > 1/2, decided as the sign of (2⌈ξ⌉ - 1) - 2ξ.
inline bool ceil_gap_exceeds_half(const FieldId& f) {
  const Integer c = ceil_xi_mult(1, f);
  return sign_of(QElement::rational(2 * c - 1) - make_int(2) * xi_element(f), f) > 0;
}

/// α = (⌈2ξ⌉ + 2) + 2ω: 6 partitions when ⌈ξ⌉ - ξ > 1/2, 9 otherwise.
/// D = 5 is outside that statement; pass allow_d5 to get its value (10).
template <class Evaluator>
Witness witness_m6(Evaluator& grid, bool allow_d5 = false) {
  const FieldId& f = grid.field();
  if (f.D() == 5 && !allow_d5) throw InvalidArgument("witness_m6: D = 5 is excluded");
  const QElement alpha = ky_element(2, 2, f);
  Witness w{alpha, grid.value(alpha), 0, ""};
  if (f.D() == 5) {
    w.expected = 10;
    w.branch = "D=5";
  } else if (ceil_gap_exceeds_half(f)) {
    w.expected = 6;
    w.branch = "gap>1/2";
  } else {
    w.expected = 9;
    w.branch = "gap<1/2";
  }
  if (w.count != w.expected)
    throw AssertionFailure("D = " + std::to_string(f.D()) + ": p_K((⌈2ξ⌉+2)+2ω) = " + w.count.get_str() +
                           ", expected " + std::to_string(w.expected));
  return w;
}

}  // namespace qpart
