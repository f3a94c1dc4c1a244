#pragma once

// Sums and products over primes with a geometric tail estimate.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "altsum/errors.hpp"
#include "altsum/factor_sieve.hpp"
#include "altsum/value.hpp"
#include "altsum/zeta.hpp"

namespace altsum {

inline constexpr std::uint64_t kDefaultPrimeLimit = 1'000'000;

/// Rounding floor for reported tails, relative to the value.
inline constexpr Real kRelativeFloor = 1e-15L;

inline const std::vector<std::uint32_t>& cached_primes(std::uint64_t limit) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<std::uint32_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(limit);
  if (it == cache.end())
    it = cache.emplace(limit, primes_up_to(limit, std::max<std::uint64_t>(limit, default_sieve_cap()))).first;
  return it->second;
}

enum class TailModel { geometric_estimate, none };

struct PrimeSeriesResult {
  Real value = 0;  // includes the extrapolated tail under geometric_estimate
  Real tail = 0;   // magnitude of the estimated tail
};

/// sum_{p <= limit} term(p), with the tail beyond `limit` extrapolated from the
/// last two decades (L/100, L/10] and (L/10, L]. Throws DomainError when the
/// terms do not decay faster than 1/p.
inline PrimeSeriesResult prime_series(const std::function<Real(std::uint64_t)>& term,
                                      std::uint64_t limit,
                                      TailModel model = TailModel::geometric_estimate) {
  if (limit < 1000) throw CapacityError("prime_series: prime limit below 1000");
  const auto& primes = cached_primes(limit);
  CompensatedSum acc;
  Real s1 = 0, s2 = 0;
  bool mark1 = false, mark2 = false;
  Real far_scaled = 0, near_scaled = 0;
  const std::uint64_t c1 = limit / 100, c2 = limit / 10;
  for (std::uint32_t p : primes) {
    if (!mark1 && p > c1) {
      s1 = acc.value();
      mark1 = true;
    }
    if (!mark2 && p > c2) {
      s2 = acc.value();
      mark2 = true;
    }
    const Real t = term(p);
    if (!std::isfinite(t)) throw DomainError("prime_series: non-finite term at p=" + std::to_string(p));
    acc += t;
    if (p <= c1) near_scaled = std::fabs(t) * p;
    far_scaled = std::fabs(t) * p;
  }
  if (far_scaled > 1e-12L && far_scaled >= 0.5L * near_scaled)
    throw DomainError("prime_series: terms do not decay faster than 1/p (divergent)");
  PrimeSeriesResult r;
  const Real s3 = acc.value();
  const Real d1 = s2 - s1, d2 = s3 - s2;
  r.value = s3;
  if (model == TailModel::none) {
    r.tail = std::fabs(d2);
    return r;
  }
  const Real ratio = d1 != 0 ? d2 / d1 : 0;
  if (ratio > 0 && ratio < 1) {
    const Real extra = d2 * ratio / (1 - ratio);
    r.value += extra;
    r.tail = std::fabs(extra);
  } else {
    r.tail = std::fabs(d2);
  }
  return r;
}

struct ZetaFactor {
  Real s;
  Real power;
};

/// value = scale * prod_i zeta(s_i)^{e_i} * prod_p local(p) prod_i (1 - p^{-s_i})^{e_i}.
/// The zeta factors leave the value unchanged and only speed up convergence.
struct EulerProductSpec {
  std::function<Real(std::uint64_t)> local_factor;
  std::vector<ZetaFactor> zeta_prefactor;
  std::uint64_t prime_limit = kDefaultPrimeLimit;
  TailModel tail_model = TailModel::geometric_estimate;
  Real scale = 1;
};

struct ConstantResult {
  Real value = 0;
  Real tail_estimate = 0;
  std::uint64_t prime_limit_used = 0;
};

inline ConstantResult euler_product(const EulerProductSpec& spec) {
  auto log_term = [&](std::uint64_t p) -> Real {
    const Real local = spec.local_factor(p);
    if (!(local > 0)) throw DomainError("euler_product: non-positive local factor at p=" + std::to_string(p));
    Real t = std::log(local);
    for (const auto& z : spec.zeta_prefactor)
      t += z.power * std::log1p(-std::pow(static_cast<Real>(p), -z.s));
    return t;
  };
  const PrimeSeriesResult ps = prime_series(log_term, spec.prime_limit, spec.tail_model);
  Real log_value = ps.value;
  for (const auto& z : spec.zeta_prefactor) log_value += z.power * std::log1p(zeta_minus_one(z.s));
  ConstantResult r;
  r.value = spec.scale * std::exp(log_value);
  r.tail_estimate = std::fabs(r.value) * std::max(ps.tail, kRelativeFloor);
  r.prime_limit_used = spec.prime_limit;
  return r;
}

/// Sum of term(p) over all primes plus a known closed-form part.
inline ConstantResult prime_sum(const std::function<Real(std::uint64_t)>& term, Real known,
                                std::uint64_t prime_limit) {
  const PrimeSeriesResult ps = prime_series(term, prime_limit);
  ConstantResult r;
  r.value = known + ps.value;
  r.tail_estimate = std::max(ps.tail, kRelativeFloor * std::fabs(r.value));
  r.prime_limit_used = prime_limit;
  return r;
}

/// sum_{k >= k0} term(k), stopped once |term| < 1e-30 (relative to the sum).
inline Real convergent_series(const std::function<Real(unsigned)>& term, unsigned k0 = 0,
                              unsigned max_terms = 100000) {
  CompensatedSum acc;
  for (unsigned k = k0; k < k0 + max_terms; ++k) {
    const Real t = term(k);
    acc += t;
    if (k > k0 + 2 && std::fabs(t) <= 1e-30L * std::max<Real>(1, std::fabs(acc.value()))) return acc.value();
  }
  throw DomainError("convergent_series: terms do not decay");
}

}  // namespace altsum
