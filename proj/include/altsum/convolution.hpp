#pragma once

// Convolution kernel h_f supported on powers of two, with
// (-1)^(n-1) f(n) = sum_{dj=n} h_f(d) f(j), and the partial sums built on it.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altsum/bell_series.hpp"
#include "altsum/errors.hpp"
#include "altsum/exact_sum.hpp"
#include "altsum/mult_functions.hpp"

namespace altsum {

struct Kernel {
  FunctionDescriptor source;
  CoefficientSeries values;  // values[nu] = h_f(2^nu)

  std::size_t size() const { return values.size(); }
  const mpq_class& operator[](std::size_t nu) const { return values[nu]; }
};

/// h_f(1) = 2 b_0 - 1 = 1, h_f(2^nu) = 2 b_nu.
inline Kernel kernel_of(const FunctionDescriptor& f, std::size_t N) {
  CoefficientSeries b = reciprocal_coeffs(bell_coeffs(f, N));
  Kernel k{f, {}};
  k.values.origin = SeriesOrigin::kernel;
  k.values.coeffs.reserve(b.size());
  for (std::size_t nu = 0; nu < b.size(); ++nu)
    k.values.coeffs.push_back(nu == 0 ? mpq_class(2 * b[0] - 1) : mpq_class(2 * b[nu]));
  return k;
}

inline unsigned floor_log2(std::uint64_t x) { return x == 0 ? 0 : 63 - static_cast<unsigned>(__builtin_clzll(x)); }

/// sum_nu h(2^nu) 2^(-nu s) over the computed prefix.
inline Real kernel_dirichlet_sum(const Kernel& k, Real s) {
  CompensatedSum acc;
  for (std::size_t nu = 0; nu < k.size(); ++nu)
    acc += to_real(k[nu]) * std::exp2(-static_cast<Real>(nu) * s);
  return acc.value();
}

/// sum_nu h(2^nu) log(2^nu) 2^(-nu s) over the computed prefix.
inline Real kernel_log_sum(const Kernel& k, Real s) {
  CompensatedSum acc;
  const Real ln2 = std::numbers::ln2_v<Real>;
  for (std::size_t nu = 1; nu < k.size(); ++nu)
    acc += to_real(k[nu]) * static_cast<Real>(nu) * ln2 * std::exp2(-static_cast<Real>(nu) * s);
  return acc.value();
}

struct ConvolutionReport {
  bool holds = true;
  std::optional<std::uint64_t> first_failure;
};

/// Checks the convolution identity for every n <= table.size(), both sides
/// evaluated independently from the table.
inline ConvolutionReport verify_convolution_report(const ValueTable& t) {
  const std::uint64_t x = t.size();
  ConvolutionReport r;
  if (x == 0) return r;
  const Kernel k = kernel_of(t.function(), floor_log2(x));

  bool integral = !t.reciprocal();
  std::vector<__int128> hi(k.size());
  for (std::size_t nu = 0; nu < k.size() && integral; ++nu) {
    if (k[nu].get_den() != 1 || !k[nu].get_num().fits_slong_p()) integral = false;
    else hi[nu] = k[nu].get_num().get_si();
  }

  for (std::uint64_t n = 1; n <= x; ++n) {
    const int sign = (n & 1) ? 1 : -1;
    bool ok;
    if (integral) {
      __int128 rhs = 0;
      std::uint64_t d = 1;
      for (std::size_t nu = 0; n % d == 0; ++nu, d <<= 1) rhs += hi[nu] * t.base(n / d);
      ok = rhs == static_cast<__int128>(sign) * t.base(n);
    } else {
      mpq_class rhs = 0;
      std::uint64_t d = 1;
      for (std::size_t nu = 0; n % d == 0; ++nu, d <<= 1) {
        if (t.reciprocal()) {
          mpq_class term(k[nu].get_num(), k[nu].get_den() * t.base(n / d));
          term.canonicalize();
          rhs += term;
        } else {
          rhs += k[nu] * t.base(n / d);
        }
      }
      mpq_class lhs = t.reciprocal() ? mpq_class(sign, t.base(n)) : mpq_class(sign * t.base(n));
      lhs.canonicalize();
      ok = rhs == lhs;
    }
    if (!ok) {
      r.holds = false;
      r.first_failure = n;
      return r;
    }
  }
  return r;
}

inline bool verify_convolution(const FunctionDescriptor& f, std::uint64_t x) {
  return verify_convolution_report(sieve_values(f, x)).holds;
}

inline Value alternating_sum_direct(const ValueTable& t, std::uint64_t x) {
  return partial_sum(t, x, Sign::alternating());
}

inline Value alternating_sum_direct(const FunctionDescriptor& f, std::uint64_t x) {
  return alternating_sum_direct(sieve_values(f, x), x);
}

/// sum_{d<=x} h_f(d) sum_{j<=x/d} f(j), evaluated at every checkpoint at once.
inline std::vector<Value> alternating_sums_via_kernel(const ValueTable& t,
                                                      const std::vector<std::uint64_t>& xs) {
  std::uint64_t xmax = 0;
  for (auto x : xs) xmax = std::max(xmax, x);
  const Kernel k = kernel_of(t.function(), floor_log2(std::max<std::uint64_t>(xmax, 1)));
  std::vector<std::uint64_t> cps;
  for (auto x : xs)
    for (std::uint64_t y = x; y > 0; y >>= 1) cps.push_back(y);
  const std::vector<Value> sums = prefix_sums(t, cps, Sign::plain());
  std::vector<Value> out;
  std::size_t idx = 0;
  for (auto x : xs) {
    mpq_class acc = 0;
    std::size_t nu = 0;
    for (std::uint64_t y = x; y > 0; y >>= 1, ++nu, ++idx)
      if (sgn(k[nu]) != 0) acc += k[nu] * to_mpq(sums[idx]);
    out.push_back(normalize(acc));
  }
  return out;
}

inline Value alternating_sum_via_kernel(const ValueTable& t, std::uint64_t x) {
  return alternating_sums_via_kernel(t, {x}).front();
}

inline Value alternating_sum_via_kernel(const FunctionDescriptor& f, std::uint64_t x) {
  return alternating_sum_via_kernel(sieve_values(f, x), x);
}

struct QSet {
  std::vector<std::uint64_t> primes;  // ascending

  static QSet of(std::vector<std::uint64_t> q) {
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    for (auto p : q)
      if (factorize(p).size() != 1 || factorize(p)[0].exponent != 1)
        throw DomainError("QSet: " + std::to_string(p) + " is not prime");
    return QSet{std::move(q)};
  }
};

inline int tq_sign(const QSet& q, std::uint64_t n) { return Sign::tq(q.primes)(n); }

/// sum_{n<=x} t_Q(n) f(n), directly.
inline Value tq_sum(const ValueTable& t, const QSet& q, std::uint64_t x) {
  return partial_sum(t, x, Sign::tq(q.primes));
}

inline Value tq_sum(const FunctionDescriptor& f, const QSet& q, std::uint64_t x) {
  return tq_sum(sieve_values(f, x), q, x);
}

/// sum_{n<=x} t_Q(n) sigma(n) = -sum sigma + 2 sum_d h_Q(d) sum_{j<=x/d} sigma(j), where
/// h_Q(q) = -(q+1), h_Q(q^2) = q for q in Q and h_Q vanishes elsewhere.
inline Value tq_sum_sigma_kernel(const ValueTable& sigma_table, const QSet& q, std::uint64_t x) {
  if (sigma_table.function() != fn(Fn::sigma))
    throw DomainError("tq_sum_sigma_kernel: table must hold sigma");
  std::vector<std::pair<std::uint64_t, mpz_class>> terms{{1, mpz_class(1)}};
  for (auto p : q.primes) {
    std::vector<std::pair<std::uint64_t, mpz_class>> next;
    for (const auto& [d, h] : terms) {
      next.push_back({d, h});
      if (d <= x / p) next.push_back({d * p, h * -static_cast<long>(p + 1)});
      if (d <= x / p / p) next.push_back({d * p * p, h * static_cast<long>(p)});
    }
    terms = std::move(next);
  }
  std::vector<std::uint64_t> cps{x};
  for (const auto& [d, h] : terms) cps.push_back(x / d);
  const std::vector<Value> sums = prefix_sums(sigma_table, cps, Sign::plain());
  mpz_class acc = -std::get<mpz_class>(sums[0]);
  for (std::size_t i = 0; i < terms.size(); ++i) acc += 2 * terms[i].second * std::get<mpz_class>(sums[i + 1]);
  return acc;
}

struct MultiplicativityProbe {
  bool multiplicative = true;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

/// Brute-force multiplicativity of n -> t_Q(n) over coprime pairs m < n <= limit.
inline MultiplicativityProbe tq_multiplicativity_probe(const QSet& q, std::uint64_t limit = 1000) {
  MultiplicativityProbe r;
  for (std::uint64_t m = 1; m <= limit; ++m)
    for (std::uint64_t n = m + 1; n <= limit; ++n) {
      if (std::gcd(m, n) != 1) continue;
      if (tq_sign(q, m * n) != tq_sign(q, m) * tq_sign(q, n)) {
        r.multiplicative = false;
        r.witness = {m, n};
        return r;
      }
    }
  return r;
}

}  // namespace altsum
