#pragma once

// Registry of multiplicative functions defined by their values at prime
// powers, exact evaluation, and sieving of f(1..x).

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altsum/errors.hpp"
#include "altsum/factor_sieve.hpp"
#include "altsum/value.hpp"

namespace altsum {

enum class Fn {
  phi,
  psi,
  sigma,
  tau,
  gcd_sum,
  kappa,
  mu_sq,
  abelian,
  sigma_star,
  phi_star,
  kappa_star,
  pow,
  sigma_bi,
  beta,
  tau_e,
  wintner_demo,
};

struct FunctionInfo {
  Fn fn;
  std::string_view id;
  std::string_view summary;
  bool vanishes;  // some f(p^nu) is zero, so 1/f is undefined
};

inline constexpr std::array<FunctionInfo, 16> kRegistry{{
    {Fn::phi, "phi", "Euler totient", false},
    {Fn::psi, "psi", "Dedekind psi", false},
    {Fn::sigma, "sigma", "sum of divisors", false},
    {Fn::tau, "tau", "number of divisors", false},
    {Fn::gcd_sum, "gcd_sum", "gcd-sum (Pillai) function", false},
    {Fn::kappa, "kappa", "squarefree kernel", false},
    {Fn::mu_sq, "mu_sq", "squarefree indicator", true},
    {Fn::abelian, "abelian", "number of abelian groups of order n", false},
    {Fn::sigma_star, "sigma_star", "sum of unitary divisors", false},
    {Fn::phi_star, "phi_star", "unitary totient", false},
    {Fn::kappa_star, "kappa_star", "greatest squarefree unitary divisor", false},
    {Fn::pow, "pow", "powerful part", false},
    {Fn::sigma_bi, "sigma_bi", "sum of bi-unitary divisors", false},
    {Fn::beta, "beta", "alternating sum of divisors", false},
    {Fn::tau_e, "tau_e", "exponential divisor function", false},
    {Fn::wintner_demo, "wintner_demo", "f(p)=1, f(p^2)=-6, f(p^k)=0 for k>=3", true},
}};

inline const FunctionInfo& info(Fn fn) {
  return kRegistry[static_cast<std::size_t>(fn)];
}

struct FunctionDescriptor {
  Fn base = Fn::phi;
  bool reciprocal = false;  // represents 1/base

  std::string id() const {
    return reciprocal ? "1/" + std::string(info(base).id) : std::string(info(base).id);
  }
  ValueKind value_kind() const { return reciprocal ? ValueKind::rational : ValueKind::integer; }
  friend bool operator==(const FunctionDescriptor&, const FunctionDescriptor&) = default;
};

inline FunctionDescriptor fn(Fn base) { return {base, false}; }
inline FunctionDescriptor inv(Fn base) { return {base, true}; }

/// Accepts "name" or "1/name"; sigma_star_star is an alias of sigma_bi.
inline std::optional<FunctionDescriptor> parse_function(std::string_view id) {
  bool recip = false;
  if (id.substr(0, 2) == "1/") {
    recip = true;
    id.remove_prefix(2);
  }
  if (id == "sigma_star_star") id = "sigma_bi";
  for (const auto& e : kRegistry)
    if (e.id == id) return FunctionDescriptor{e.fn, recip};
  return std::nullopt;
}

/// Every registered descriptor: the 16 functions, then the non-vanishing reciprocals.
inline std::vector<FunctionDescriptor> all_descriptors(bool with_reciprocals = true) {
  std::vector<FunctionDescriptor> out;
  for (const auto& e : kRegistry) out.push_back({e.fn, false});
  if (with_reciprocals)
    for (const auto& e : kRegistry)
      if (!e.vanishes) out.push_back({e.fn, true});
  return out;
}

/// Unrestricted partition count via the pentagonal number recurrence.
inline mpz_class partition_count(unsigned k) {
  if (k > 10000) throw CapacityError("partition_count: k > 10000");
  static std::mutex mu;
  static std::vector<mpz_class> memo{1};
  std::lock_guard<std::mutex> lock(mu);
  while (memo.size() <= k) {
    const long n = static_cast<long>(memo.size());
    mpz_class acc = 0;
    for (long j = 1;; ++j) {
      const long g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const bool plus = (j % 2) == 1;
      const long g2 = j * (3 * j + 1) / 2;
      if (plus) {
        acc += memo[n - g1];
        if (g2 <= n) acc += memo[n - g2];
      } else {
        acc -= memo[n - g1];
        if (g2 <= n) acc -= memo[n - g2];
      }
    }
    memo.push_back(acc);
  }
  return memo[k];
}

namespace detail {

inline unsigned divisor_count(unsigned n) {
  unsigned c = 0;
  for (unsigned d = 1; d * d <= n; ++d)
    if (n % d == 0) c += (d * d == n) ? 1 : 2;
  return c;
}

template <class T>
T power(std::uint64_t p, unsigned e);

template <>
inline mpz_class power<mpz_class>(std::uint64_t p, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), e);
  return r;
}

template <>
inline __int128 power<__int128>(std::uint64_t p, unsigned e) {
  constexpr __int128 limit = static_cast<__int128>(1) << 100;
  __int128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= static_cast<__int128>(p);
    if (r > limit) throw CapacityError("prime power exceeds 128-bit fast path");
  }
  return r;
}

template <>
inline Real power<Real>(std::uint64_t p, unsigned e) {
  return std::pow(static_cast<Real>(p), static_cast<Real>(e));
}

template <class T>
T from_mpz(const mpz_class& z);
template <>
inline mpz_class from_mpz<mpz_class>(const mpz_class& z) {
  return z;
}
template <>
inline __int128 from_mpz<__int128>(const mpz_class& z) {
  if (!z.fits_slong_p()) throw CapacityError("value exceeds 64-bit fast path");
  return z.get_si();
}
template <>
inline Real from_mpz<Real>(const mpz_class& z) {
  return to_real(z);
}

}  // namespace detail

/// f(p^nu) for the base function. T is mpz_class, __int128 or Real.
template <class T>
T prime_power(Fn f, std::uint64_t p, unsigned nu) {
  using detail::power;
  if (nu == 0) return T(1);
  const T P = T(static_cast<long>(p));
  switch (f) {
    case Fn::phi:
      return power<T>(p, nu) - power<T>(p, nu - 1);
    case Fn::psi:
      return power<T>(p, nu) + power<T>(p, nu - 1);
    case Fn::sigma:
      return (power<T>(p, nu + 1) - T(1)) / (P - T(1));
    case Fn::tau:
      return T(static_cast<long>(nu) + 1);
    case Fn::gcd_sum:
      return power<T>(p, nu - 1) * (P * T(static_cast<long>(nu) + 1) - T(static_cast<long>(nu)));
    case Fn::kappa:
      return P;
    case Fn::mu_sq:
      return T(nu == 1 ? 1 : 0);
    case Fn::abelian:
      return detail::from_mpz<T>(partition_count(nu));
    case Fn::sigma_star:
      return power<T>(p, nu) + T(1);
    case Fn::phi_star:
      return power<T>(p, nu) - T(1);
    case Fn::kappa_star:
      return nu == 1 ? P : T(1);
    case Fn::pow:
      return nu >= 2 ? power<T>(p, nu) : T(1);
    case Fn::sigma_bi: {
      T s = (power<T>(p, nu + 1) - T(1)) / (P - T(1));
      if (nu % 2 == 0) s = s - power<T>(p, nu / 2);
      return s;
    }
    case Fn::beta:
      return (power<T>(p, nu + 1) + T(nu % 2 == 0 ? 1 : -1)) / (P + T(1));
    case Fn::tau_e:
      return T(static_cast<long>(detail::divisor_count(nu)));
    case Fn::wintner_demo:
      return T(nu == 1 ? 1 : (nu == 2 ? -6 : 0));
  }
  return T(0);
}

/// Base function value over a factorization.
inline mpz_class eval_base(Fn f, const Factorization& fac) {
  mpz_class r = 1;
  for (const auto& [p, e] : fac) {
    r *= prime_power<mpz_class>(f, p, e);
    if (r == 0) break;
  }
  return r;
}

inline Value eval(const FunctionDescriptor& f, const Factorization& fac) {
  mpz_class g = eval_base(f.base, fac);
  if (!f.reciprocal) return g;
  if (g == 0)
    throw DomainError("eval: " + f.id() + " undefined at n=" + std::to_string(reconstruct(fac)) +
                      " (" + std::string(info(f.base).id) + " vanishes)");
  return normalize(mpq_class(mpz_class(1), g));
}

inline Value eval(const FunctionDescriptor& f, std::uint64_t n,
                  std::uint64_t cap = default_sieve_cap()) {
  return eval(f, factorize(n, cap));
}

/// f(1..x) for one descriptor. Base values g(n) are stored as 64-bit
/// integers; for a reciprocal descriptor at(n) returns 1/g(n).
class ValueTable {
 public:
  ValueTable() = default;
  ValueTable(FunctionDescriptor f, std::vector<std::int64_t> g) : f_(f), g_(std::move(g)) {}

  const FunctionDescriptor& function() const { return f_; }
  std::uint64_t size() const { return g_.empty() ? 0 : g_.size() - 1; }
  bool reciprocal() const { return f_.reciprocal; }

  /// Base function value g(n), 1 <= n <= size().
  std::int64_t base(std::uint64_t n) const { return g_[n]; }
  const std::vector<std::int64_t>& base_values() const { return g_; }

  Value at(std::uint64_t n) const {
    if (!f_.reciprocal) return mpz_class(static_cast<long>(g_[n]));
    return normalize(mpq_class(1, static_cast<long>(g_[n])));
  }

  Real real_at(std::uint64_t n) const {
    const Real g = static_cast<Real>(g_[n]);
    return f_.reciprocal ? 1.0L / g : g;
  }

 private:
  FunctionDescriptor f_;
  std::vector<std::int64_t> g_;  // index 0 unused
};

inline ValueTable sieve_values(const FunctionDescriptor& f, const SpfTable& table,
                               std::uint64_t x) {
  if (x > table.limit() && x >= 2)
    throw CapacityError("sieve_values: x exceeds sieve table limit");
  std::vector<std::int64_t> g(x + 1, 0);
  if (x >= 1) g[1] = 1;
  for (std::uint64_t n = 2; n <= x; ++n) {
    const std::uint64_t p = table.spf(n);
    std::uint64_t m = n;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (m == 1) {
      const __int128 v = prime_power<__int128>(f.base, p, e);
      if (v > INT64_MAX || v < INT64_MIN) throw CapacityError("sieve_values: value overflow");
      g[n] = static_cast<std::int64_t>(v);
    } else {
      const __int128 v = static_cast<__int128>(g[m]) * g[n / m];
      if (v > INT64_MAX || v < INT64_MIN) throw CapacityError("sieve_values: value overflow");
      g[n] = static_cast<std::int64_t>(v);
    }
  }
  if (f.reciprocal) {
    for (std::uint64_t n = 1; n <= x; ++n)
      if (g[n] == 0)
        throw DomainError("sieve_values: " + f.id() + " undefined at n=" + std::to_string(n));
  }
  return ValueTable(f, std::move(g));
}

inline ValueTable sieve_values(const FunctionDescriptor& f, std::uint64_t x,
                               std::uint64_t cap = default_sieve_cap()) {
  if (x > cap) throw CapacityError("sieve_values: x exceeds sieve cap " + std::to_string(cap));
  if (x < 2) return ValueTable(f, x == 1 ? std::vector<std::int64_t>{0, 1} : std::vector<std::int64_t>{0});
  return sieve_values(f, build_spf(x, cap), x);
}

}  // namespace altsum
