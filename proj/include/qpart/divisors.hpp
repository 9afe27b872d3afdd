#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qpart {

// Sum-of-divisors table σ(n), grown on demand by a sieve. Not synchronised:
// grow it before handing it to worker threads, after which reads are safe.
class DivisorCache {
 public:
  explicit DivisorCache(std::int64_t bound = 64) { reserve(bound); }

  void reserve(std::int64_t bound) {
    if (bound < static_cast<std::int64_t>(sigma_.size())) return;
    const std::int64_t n = std::max<std::int64_t>(bound + 1, 2 * static_cast<std::int64_t>(sigma_.size()));
    sigma_.assign(static_cast<std::size_t>(n), 0);
    for (std::int64_t d = 1; d < n; ++d) {
      for (std::int64_t m = d; m < n; m += d) sigma_[static_cast<std::size_t>(m)] += static_cast<std::uint64_t>(d);
    }
  }

  std::int64_t bound() const { return static_cast<std::int64_t>(sigma_.size()) - 1; }

  std::uint64_t sigma(std::int64_t n) {
    if (n < 1) throw std::domain_error("sigma: argument must be positive");
    reserve(n);
    return sigma_[static_cast<std::size_t>(n)];
  }

  // Read-only access; n must be within bound().
  std::uint64_t sigma_at(std::int64_t n) const { return sigma_[static_cast<std::size_t>(n)]; }

  static std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> lo, hi;
    for (std::int64_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
  }

 private:
  std::vector<std::uint64_t> sigma_{0};
};

}  // namespace qpart
