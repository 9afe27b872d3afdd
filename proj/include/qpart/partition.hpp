#pragma once

// The partition function p_K on O_K^+ via the recurrence
//
//   α·p_K(α) = Σ_{0 ≺ β ⪯ α} σ_K(β)·p_K(α - β),
//
// evaluated column by column over the first coordinate x of α = x + y·ω.
// Every β ≻ 0 has first coordinate ≥ 1, so p_K(α - β) always lives in an
// earlier column; cells of one column are independent of each other.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "qpart/contfrac.hpp"
#include "qpart/divisors.hpp"
#include "qpart/field.hpp"

namespace qpart {

/// c(β): the largest rational integer dividing β.
inline Integer content(const QElement& e) {
  if (e.is_zero()) throw InvalidArgument("content: zero element");
  Integer g;
  mpz_gcd(g.get_mpz_t(), e.a.get_mpz_t(), e.b.get_mpz_t());
  return g;
}

/// σ_K(β) = (β / c(β))·σ(c(β)).
inline QElement sigma_K(const QElement& e, const FieldId& f, DivisorCache& cache) {
  if (!is_totally_positive(e, f)) throw InvalidArgument("sigma_K: element is not totally positive");
  const Integer c = content(e);
  const Integer sc = static_cast<unsigned long>(cache.sigma(to_i64(c)));
  return {e.a / c * sc, e.b / c * sc};
}

// Range of y with x + y·ω ≻ 0 for a fixed x ≥ 1: -⌊x/ω⌋ ≤ y ≤ ⌊x/ξ⌋.
struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool contains(std::int64_t y) const { return lo <= y && y <= hi; }
  std::int64_t size() const { return hi >= lo ? hi - lo + 1 : 0; }
  friend bool operator==(const Window&, const Window&) = default;
};

inline Window column_window(std::int64_t x, const FieldId& f) {
  if (x < 1) return {};
  const Integer X = make_int(x);
  if (f.one_mod_four()) {
    // x/ξ = 2x(√D + 1)/(D - 1), x/ω = 2x(√D - 1)/(D - 1)
    const Integer den = f.D_int() - 1;
    return {-to_i64(floor_surd(Integer(-2 * X), Integer(2 * X), den, f)),
            to_i64(floor_surd(Integer(2 * X), Integer(2 * X), den, f))};
  }
  const std::int64_t w = to_i64(floor_surd(0, X, f.D_int(), f));  // ⌊x/√D⌋
  return {-w, w};
}

/// All β with 0 ≺ β ⪯ α, in lexicographic order, each confirmed by exact sign tests.
///
/// β = u + v·ω ranges over 1 ≤ u ≤ x (≺ implies <_LEX and totally positive
/// elements have u ≥ 1); v is the intersection of the window for β ≻ 0 with the
/// window for α - β ⪰ 0.
inline std::vector<QElement> enumerate_interval(const QElement& alpha, const FieldId& f) {
  if (!is_totally_positive(alpha, f)) throw InvalidArgument("enumerate_interval: α must be totally positive");
  const std::int64_t x = to_i64(alpha.a);
  const std::int64_t y = to_i64(alpha.b);
  std::vector<QElement> out;
  for (std::int64_t u = 1; u <= x; ++u) {
    const Window wu = column_window(u, f);
    std::int64_t lo = wu.lo, hi = wu.hi;
    if (u == x) {
      lo = std::max(lo, y);
      hi = std::min(hi, y);
    } else {
      const Window wr = column_window(x - u, f);
      lo = std::max(lo, y - wr.hi);
      hi = std::min(hi, y - wr.lo);
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      QElement beta{make_int(u), make_int(v)};
      if (!is_totally_positive(beta, f)) throw std::logic_error("enumerate_interval: window produced β not ≻ 0");
      const QElement rest = alpha - beta;
      if (!rest.is_zero() && !is_totally_positive(rest, f))
        throw std::logic_error("enumerate_interval: window produced β not ⪯ α");
      out.push_back(std::move(beta));
    }
  }
  return out;
}

class PartitionGrid;
inline Integer p_value(std::int64_t x, std::int64_t y, const PartitionGrid& grid);

/// Table of p_K(x + y·ω) for 1 ≤ x ≤ max_x and every totally positive y of each
/// column, plus p_K(0) = 1. Cells outside the totally positive cone are absent,
/// not zero.
class PartitionGrid {
 public:
  explicit PartitionGrid(FieldContext ctx, unsigned threads = 1)
      : ctx_(std::move(ctx)), threads_(std::max(1u, threads)), windows_{Window{0, 0}}, columns_{{Integer(1)}} {}

  PartitionGrid(const FieldId& f, std::int64_t max_x, unsigned threads = 1)
      : PartitionGrid(build_context(f), threads) {
    extend(max_x);
  }

  const FieldContext& context() const { return ctx_; }
  const FieldId& field() const { return ctx_.field; }
  std::int64_t max_x() const { return static_cast<std::int64_t>(columns_.size()) - 1; }
  void set_threads(unsigned t) { threads_ = std::max(1u, t); }

  const Window& window(std::int64_t x) const { return windows_.at(static_cast<std::size_t>(x)); }
  const std::vector<Integer>& column(std::int64_t x) const { return columns_.at(static_cast<std::size_t>(x)); }
  const DivisorCache& divisor_cache() const { return divisors_; }

  // Non-null iff (x, y) is 0 or totally positive with x ≤ max_x.
  const Integer* find(std::int64_t x, std::int64_t y) const {
    if (x < 0 || x > max_x()) return nullptr;
    const Window& w = windows_[static_cast<std::size_t>(x)];
    if (!w.contains(y)) return nullptr;
    return &columns_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - w.lo)];
  }

  const Integer& at(std::int64_t x, std::int64_t y) const {
    const Integer* p = find(x, y);
    if (p == nullptr)
      throw std::out_of_range("no grid cell at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
    return *p;
  }

  const Integer& at(const QElement& e) const { return at(to_i64(e.a), to_i64(e.b)); }

  bool covers(const QElement& e) const { return e.a.fits_slong_p() && e.b.fits_slong_p() && find(e.a.get_si(), e.b.get_si()); }

  std::size_t cell_count() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  /// Computes every column up to new_max_x. Earlier columns are never touched.
  void extend(std::int64_t new_max_x) {
    if (new_max_x <= max_x()) return;
    divisors_.reserve(new_max_x);
    for (std::int64_t x = max_x() + 1; x <= new_max_x; ++x) {
      const Window w = column_window(x, field());
      std::vector<Integer> col(static_cast<std::size_t>(w.size()));
      fill_column(x, w, col);
      windows_.push_back(w);
      columns_.push_back(std::move(col));
    }
  }

  /// Extends the grid as needed so that e is covered, then returns p_K(e).
  const Integer& value(const QElement& e) {
    if (!e.is_zero() && !is_totally_positive(e, field()))
      throw InvalidArgument("p_K is only defined on totally positive elements");
    extend(to_i64(e.a));
    return at(e);
  }

  // Rebuilds a grid from stored columns (deserialisation). Column shapes are
  // validated against the field; values are taken as given.
  static PartitionGrid from_columns(FieldContext ctx, std::vector<std::vector<Integer>> columns) {
    PartitionGrid g(std::move(ctx));
    if (columns.empty() || columns[0].size() != 1 || columns[0][0] != 1)
      throw InvalidArgument("grid column 0 must hold exactly p_K(0) = 1");
    for (std::size_t x = 1; x < columns.size(); ++x) {
      const Window w = column_window(static_cast<std::int64_t>(x), g.field());
      if (static_cast<std::int64_t>(columns[x].size()) != w.size())
        throw InvalidArgument("grid column " + std::to_string(x) + " has the wrong length");
      g.windows_.push_back(w);
    }
    g.columns_ = std::move(columns);
    g.divisors_.reserve(g.max_x());
    return g;
  }

 private:
  void fill_column(std::int64_t x, const Window& w, std::vector<Integer>& col) const {
    const std::int64_t n = w.size();
    // Small columns are not worth a thread hand-off.
    const unsigned workers = static_cast<unsigned>(std::min<std::int64_t>(threads_, std::max<std::int64_t>(1, n / 4)));
    if (workers <= 1 || x < 16) {
      for (std::int64_t i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = p_value(x, w.lo + i, *this);
      return;
    }
    std::exception_ptr failure;
    std::mutex failure_mu;
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::int64_t i = t; i < n; i += workers)
              col[static_cast<std::size_t>(i)] = p_value(x, w.lo + i, *this);
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
          }
        });
      }
    }  // join: column x is complete past this point
    if (failure) std::rethrow_exception(failure);
  }

  FieldContext ctx_;
  unsigned threads_;
  std::vector<Window> windows_;
  std::vector<std::vector<Integer>> columns_;
  DivisorCache divisors_;
};

/// p_K(x + y·ω) from the recurrence, reading only columns 0 .. x-1 of grid.
///
/// The sum S = Σ σ_K(β)·p_K(α - β) is an element (s0, s1) of O_K. It must
/// equal p·α = (p·x, p·y); both coordinates are used and must agree.
inline Integer p_value(std::int64_t x, std::int64_t y, const PartitionGrid& grid) {
  if (x < 1) throw InvalidArgument("p_value: x must be at least 1");
  if (x - 1 > grid.max_x()) throw std::logic_error("p_value: earlier columns are not complete");
  const FieldId& f = grid.field();
  const DivisorCache& sigma = grid.divisor_cache();
  const Window wx = column_window(x, f);
  if (!wx.contains(y)) throw InvalidArgument("p_value: element is not totally positive");

  static const Integer one = 1;
  Integer s0 = 0, s1 = 0;
  for (std::int64_t u = 1; u <= x; ++u) {
    const std::int64_t rem = x - u;
    const Window& wu = u < x ? grid.window(u) : wx;
    std::int64_t lo = wu.lo, hi = wu.hi;
    const Window* wr = nullptr;
    if (rem == 0) {
      lo = std::max(lo, y);
      hi = std::min(hi, y);
    } else {
      wr = &grid.window(rem);
      lo = std::max(lo, y - wr->hi);
      hi = std::min(hi, y - wr->lo);
    }
    if (lo > hi) continue;
    const std::vector<Integer>* rest = rem == 0 ? nullptr : &grid.column(rem);
    for (std::int64_t v = lo; v <= hi; ++v) {
      const Integer& p_rest = rest ? (*rest)[static_cast<std::size_t>(y - v - wr->lo)] : one;
      const std::int64_t av = v < 0 ? -v : v;
      const std::int64_t c = std::gcd(u, av);
      const unsigned long sc = static_cast<unsigned long>(sigma.sigma_at(c));
      mpz_addmul_ui(s0.get_mpz_t(), p_rest.get_mpz_t(), static_cast<unsigned long>(u / c) * sc);
      if (v > 0) {
        mpz_addmul_ui(s1.get_mpz_t(), p_rest.get_mpz_t(), static_cast<unsigned long>(av / c) * sc);
      } else if (v < 0) {
        mpz_submul_ui(s1.get_mpz_t(), p_rest.get_mpz_t(), static_cast<unsigned long>(av / c) * sc);
      }
    }
  }

  auto fail = [&](const char* what) {
    return DivisibilityViolation(std::string("p_value at (") + std::to_string(x) + ", " + std::to_string(y) +
                                 "): " + what + "; S = (" + s0.get_str() + ", " + s1.get_str() + ")");
  };
  Integer p;
  if (y != 0) {
    const Integer Y = make_int(y);
    if (!divides(Y, s1)) throw fail("ω-coefficient not divisible by y");
    p = s1 / Y;
    if (s0 != p * make_int(x)) throw fail("coefficients disagree");
  } else {
    const Integer X = make_int(x);
    if (sgn(s1) != 0) throw fail("ω-coefficient of a rational α is non-zero");
    if (!divides(X, s0)) throw fail("rational coefficient not divisible by x");
    p = s0 / X;
  }
  return p;
}

/// p_K on demand, memoised over exactly the cells that the requested values
/// depend on: the interval {γ : 0 ≺ γ ⪯ α} of each target α. Near the edge of
/// the cone (small α') that interval has about α·α'/√Δ points, far fewer than
/// the full columns a PartitionGrid would need.
class SparseEvaluator {
 public:
  explicit SparseEvaluator(FieldContext ctx) : ctx_(std::move(ctx)) {}
  explicit SparseEvaluator(const FieldId& f) : SparseEvaluator(build_context(f)) {}

  const FieldContext& context() const { return ctx_; }
  const FieldId& field() const { return ctx_.field; }
  std::size_t cell_count() const { return memo_.size(); }

  const Integer& value(const QElement& e) {
    static const Integer one = 1;
    if (e.is_zero()) return one;
    if (!is_totally_positive(e, field())) throw InvalidArgument("p_K is only defined on totally positive elements");
    const std::int64_t x = to_i64(e.a), y = to_i64(e.b);
    if (auto it = memo_.find({x, y}); it != memo_.end()) return it->second;
    // Interval points in increasing x; each depends only on smaller x inside the same interval.
    for (std::int64_t u = 1; u <= x; ++u) {
      std::int64_t lo, hi;
      bounds(x, y, u, lo, hi);
      for (std::int64_t v = lo; v <= hi; ++v) {
        if (!memo_.contains({u, v})) memo_.emplace(Key{u, v}, compute(u, v));
      }
    }
    return memo_.at({x, y});
  }

 private:
  struct Key {
    std::int64_t x, y;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::int64_t>{}(k.x) * 0x9E3779B97F4A7C15ULL ^ std::hash<std::int64_t>{}(k.y);
    }
  };

  const Window& window(std::int64_t x) {
    while (static_cast<std::int64_t>(windows_.size()) <= x)
      windows_.push_back(column_window(static_cast<std::int64_t>(windows_.size()), field()));
    return windows_[static_cast<std::size_t>(x)];
  }

  // v-range of β = u + v·ω with 0 ≺ β ⪯ x + y·ω.
  void bounds(std::int64_t x, std::int64_t y, std::int64_t u, std::int64_t& lo, std::int64_t& hi) {
    const Window wu = window(u);
    if (u == x) {
      lo = std::max(wu.lo, y);
      hi = std::min(wu.hi, y);
    } else {
      const Window wr = window(x - u);
      lo = std::max(wu.lo, y - wr.hi);
      hi = std::min(wu.hi, y - wr.lo);
    }
  }

  Integer compute(std::int64_t x, std::int64_t y) {
    divisors_.reserve(x);
    Integer s0 = 0, s1 = 0;
    static const Integer one = 1;
    for (std::int64_t u = 1; u <= x; ++u) {
      std::int64_t lo, hi;
      bounds(x, y, u, lo, hi);
      for (std::int64_t v = lo; v <= hi; ++v) {
        const Integer* p_rest = &one;
        if (u < x) {
          auto it = memo_.find({x - u, y - v});
          if (it == memo_.end()) throw std::logic_error("SparseEvaluator: dependency computed out of order");
          p_rest = &it->second;
        }
        const std::int64_t av = v < 0 ? -v : v;
        const std::int64_t c = std::gcd(u, av);
        const unsigned long sc = static_cast<unsigned long>(divisors_.sigma_at(c));
        mpz_addmul_ui(s0.get_mpz_t(), p_rest->get_mpz_t(), static_cast<unsigned long>(u / c) * sc);
        if (v > 0) {
          mpz_addmul_ui(s1.get_mpz_t(), p_rest->get_mpz_t(), static_cast<unsigned long>(av / c) * sc);
        } else if (v < 0) {
          mpz_submul_ui(s1.get_mpz_t(), p_rest->get_mpz_t(), static_cast<unsigned long>(av / c) * sc);
        }
      }
    }
    auto fail = [&](const char* what) {
      return DivisibilityViolation(std::string("sparse p_K at (") + std::to_string(x) + ", " + std::to_string(y) +
                                   "): " + what + "; S = (" + s0.get_str() + ", " + s1.get_str() + ")");
    };
    if (y != 0) {
      const Integer Y = make_int(y);
      if (!divides(Y, s1)) throw fail("ω-coefficient not divisible by y");
      Integer p = s1 / Y;
      if (s0 != p * make_int(x)) throw fail("coefficients disagree");
      return p;
    }
    if (sgn(s1) != 0) throw fail("ω-coefficient of a rational α is non-zero");
    const Integer X = make_int(x);
    if (!divides(X, s0)) throw fail("rational coefficient not divisible by x");
    return s0 / X;
  }

  FieldContext ctx_;
  std::vector<Window> windows_;
  DivisorCache divisors_;
  std::unordered_map<Key, Integer, KeyHash> memo_;
};

/// Classical partition numbers p(0..n) via n·p(n) = Σ σ(k)·p(n-k).
inline std::vector<Integer> p_rational_table(std::int64_t n) {
  if (n < 0) throw InvalidArgument("p_rational: n must be non-negative");
  DivisorCache sigma(n);
  std::vector<Integer> p(static_cast<std::size_t>(n + 1));
  p[0] = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    Integer s = 0;
    for (std::int64_t k = 1; k <= m; ++k)
      mpz_addmul_ui(s.get_mpz_t(), p[static_cast<std::size_t>(m - k)].get_mpz_t(),
                    static_cast<unsigned long>(sigma.sigma(k)));
    const Integer M = make_int(m);
    if (!divides(M, s)) throw DivisibilityViolation("p_rational: sum not divisible by " + std::to_string(m));
    p[static_cast<std::size_t>(m)] = s / M;
  }
  return p;
}

inline Integer p_rational(std::int64_t n) { return p_rational_table(n).back(); }

/// Leading-order estimate of log p_K(α): 3·(ζ(3)·Nm(α)/√Δ_K)^{1/3}.
/// Diagnostic only; this is the one floating-point routine in the library.
inline double asymptotic_estimate(const QElement& alpha, const FieldContext& ctx) {
  if (!is_totally_positive(alpha, ctx.field)) throw InvalidArgument("asymptotic_estimate: α must be totally positive");
  const double nm = norm(alpha, ctx.field).get_d();
  const double disc = ctx.discriminant.get_d();
  return 3.0 * std::cbrt(std::riemann_zeta(3.0) * nm / std::sqrt(disc));
}

}  // namespace qpart
