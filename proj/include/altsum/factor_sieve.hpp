#pragma once

// Smallest-prime-factor sieve, factorization and prime enumeration.
//
// Memory: SpfTable stores one 32-bit word per integer, so the default cap of
// 10^8 costs about 400 MB. A segmented variant would lift this.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "altsum/errors.hpp"

namespace altsum {

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

/// Hard cap for sieve sizes. ALTSUM_SIEVE_CAP overrides the default.
inline std::uint64_t default_sieve_cap() {
  if (const char* env = std::getenv("ALTSUM_SIEVE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) return v;
  }
  return kDefaultSieveCap;
}

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
/// The factorization of 1 is empty.
using Factorization = std::vector<PrimePower>;

inline std::uint64_t reconstruct(const Factorization& fac) {
  std::uint64_t n = 1;
  for (const auto& [p, e] : fac)
    for (unsigned i = 0; i < e; ++i) n *= p;
  return n;
}

class SpfTable {
 public:
  std::uint64_t limit() const { return limit_; }

  /// Smallest prime factor of n, 2 <= n <= limit.
  std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }

  bool is_prime(std::uint64_t n) const { return n >= 2 && n <= limit_ && spf_[n] == n; }

  const std::vector<std::uint32_t>& primes() const { return primes_; }

  friend SpfTable build_spf(std::uint64_t limit, std::uint64_t cap);

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

/// Linear (Euler) sieve: every composite is crossed out exactly once, by its
/// smallest prime factor.
inline SpfTable build_spf(std::uint64_t limit, std::uint64_t cap = default_sieve_cap()) {
  if (limit < 2 || limit > cap || limit > 0xFFFFFFFFull)
    throw CapacityError("build_spf: limit " + std::to_string(limit) + " outside [2, " +
                        std::to_string(cap) + "]");
  SpfTable t;
  t.limit_ = limit;
  t.spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = static_cast<std::uint32_t>(i);
      t.primes_.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t si = t.spf_[i];
    for (std::uint32_t p : t.primes_) {
      if (p > si || i * p > limit) break;
      t.spf_[i * p] = p;
    }
  }
  return t;
}

inline Factorization factorize(std::uint64_t n, const SpfTable& table) {
  if (n == 0 || n > table.limit())
    throw CapacityError("factorize: " + std::to_string(n) + " outside [1, " +
                        std::to_string(table.limit()) + "]");
  Factorization fac;
  while (n > 1) {
    const std::uint64_t p = table.spf(n);
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    fac.push_back({p, e});
  }
  return fac;
}

/// Trial-division factorization, for single values without a table.
inline Factorization factorize(std::uint64_t n, std::uint64_t cap = default_sieve_cap()) {
  if (n == 0 || n > cap)
    throw CapacityError("factorize: " + std::to_string(n) + " outside [1, " + std::to_string(cap) +
                        "]");
  Factorization fac;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    fac.push_back({p, e});
  }
  if (n > 1) fac.push_back({n, 1});
  return fac;
}

/// All primes <= limit, ascending (sieve of Eratosthenes, odd numbers only).
inline std::vector<std::uint32_t> primes_up_to(std::uint64_t limit,
                                               std::uint64_t cap = default_sieve_cap()) {
  if (limit < 2) return {};
  if (limit > cap || limit > 0xFFFFFFFFull)
    throw CapacityError("primes_up_to: limit " + std::to_string(limit) + " exceeds cap " +
                        std::to_string(cap));
  // composite[i] describes 2i+1
  std::vector<bool> composite(limit / 2 + 1, false);
  for (std::uint64_t i = 3; i * i <= limit; i += 2) {
    if (composite[i / 2]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j / 2] = true;
  }
  std::vector<std::uint32_t> out{2};
  for (std::uint64_t i = 3; i <= limit; i += 2)
    if (!composite[i / 2]) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

}  // namespace altsum
