#pragma once

// Bell series at p = 2, reciprocal power series, and coefficient bounds.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altsum/errors.hpp"
#include "altsum/mult_functions.hpp"

namespace altsum {

enum class SeriesOrigin { bell, reciprocal, kernel };

struct CoefficientSeries {
  std::vector<mpq_class> coeffs;  // index 0..N
  SeriesOrigin origin = SeriesOrigin::bell;

  std::size_t size() const { return coeffs.size(); }
  const mpq_class& operator[](std::size_t i) const { return coeffs[i]; }
};

inline constexpr std::size_t kMaxBellLength = 256;

/// a_nu = f(2^nu), nu = 0..N.
inline CoefficientSeries bell_coeffs(const FunctionDescriptor& f, std::size_t N,
                                     std::size_t cap = kMaxBellLength) {
  if (N > cap) throw CapacityError("bell_coeffs: N=" + std::to_string(N) + " exceeds " + std::to_string(cap));
  CoefficientSeries s;
  s.origin = SeriesOrigin::bell;
  s.coeffs.reserve(N + 1);
  for (std::size_t nu = 0; nu <= N; ++nu) {
    mpz_class g = prime_power<mpz_class>(f.base, 2, static_cast<unsigned>(nu));
    if (!f.reciprocal) {
      s.coeffs.emplace_back(g);
      continue;
    }
    if (g == 0)
      throw DomainError("bell_coeffs: " + f.id() + " undefined at 2^" + std::to_string(nu));
    mpq_class q(mpz_class(1), g);
    q.canonicalize();
    s.coeffs.push_back(q);
  }
  return s;
}

/// b with sum_{j<=nu} a_j b_{nu-j} = [nu == 0].
inline CoefficientSeries reciprocal_coeffs(const CoefficientSeries& a) {
  CoefficientSeries b;
  b.origin = SeriesOrigin::reciprocal;
  if (a.coeffs.empty()) return b;
  if (a[0] == 0) throw DomainError("reciprocal_coeffs: a_0 = 0");
  const mpq_class inv0 = 1 / a[0];
  b.coeffs.reserve(a.size());
  b.coeffs.push_back(inv0);
  for (std::size_t nu = 1; nu < a.size(); ++nu) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= nu; ++j)
      if (sgn(a[j]) != 0) acc += a[j] * b[nu - j];
    b.coeffs.push_back(-acc * inv0);
  }
  return b;
}

/// Cauchy product truncated to the shorter length.
inline std::vector<mpq_class> series_product(const CoefficientSeries& a, const CoefficientSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<mpq_class> c(n, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline constexpr std::size_t kMaxMultinomialLength = 16;

/// Reciprocal coefficients summed directly over compositions:
/// b_nu = sum_k (-1)^k sum_{j_1+...+j_k = nu} a_{j_1} ... a_{j_k}.
/// A composition of nu is encoded by its set of cut points in {1, ..., nu-1}.
inline CoefficientSeries reciprocal_coeffs_multinomial(const CoefficientSeries& a, std::size_t N) {
  if (N > kMaxMultinomialLength)
    throw CapacityError("reciprocal_coeffs_multinomial: N > " + std::to_string(kMaxMultinomialLength));
  if (a.size() <= N) throw DomainError("reciprocal_coeffs_multinomial: series shorter than N+1");
  if (a[0] != 1) throw DomainError("reciprocal_coeffs_multinomial: requires a_0 = 1");
  CoefficientSeries b;
  b.origin = SeriesOrigin::reciprocal;
  b.coeffs.push_back(mpq_class(1));
  for (std::size_t nu = 1; nu <= N; ++nu) {
    mpq_class total = 0;
    const std::uint32_t masks = 1u << (nu - 1);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      mpq_class prod = 1;
      int parts = 0;
      std::size_t start = 0;
      for (std::size_t cut = 1; cut <= nu; ++cut) {
        if (cut == nu || (mask >> (cut - 1)) & 1u) {
          prod *= a[cut - start];
          ++parts;
          start = cut;
        }
      }
      if (parts % 2) total -= prod;
      else total += prod;
    }
    b.coeffs.push_back(total);
  }
  return b;
}

/// Number of compositions of nu into exactly k positive parts, by enumeration.
inline std::uint64_t composition_count(unsigned nu, unsigned k) {
  if (nu == 0) return k == 0 ? 1 : 0;
  std::uint64_t c = 0;
  for (std::uint32_t mask = 0; mask < (1u << (nu - 1)); ++mask)
    if (static_cast<unsigned>(__builtin_popcount(mask)) + 1 == k) ++c;
  return c;
}

struct KaluzaReport {
  bool is_log_convex = true;
  bool bounds_hold = true;
  std::optional<std::size_t> first_violation;        // first nu with a_nu^2 > a_{nu-1} a_{nu+1}
  std::optional<std::size_t> first_bound_violation;  // first nu outside -a_nu/a_0^2 <= b_nu <= 0
};

/// Log-convexity of a positive sequence and the sign/size bounds it forces on
/// the reciprocal coefficients. Throws InternalError if the sequence is
/// log-convex but the bounds fail.
inline KaluzaReport check_kaluza(const CoefficientSeries& a) {
  KaluzaReport r;
  for (std::size_t nu = 0; nu < a.size(); ++nu)
    if (sgn(a[nu]) <= 0)
      throw DomainError("check_kaluza: a_" + std::to_string(nu) + " is not positive");
  for (std::size_t nu = 1; nu + 1 < a.size(); ++nu)
    if (a[nu] * a[nu] > a[nu - 1] * a[nu + 1]) {
      r.is_log_convex = false;
      r.first_violation = nu;
      break;
    }
  const CoefficientSeries b = reciprocal_coeffs(a);
  const mpq_class a0sq = a[0] * a[0];
  for (std::size_t nu = 1; nu < b.size(); ++nu)
    if (b[nu] > 0 || b[nu] < -a[nu] / a0sq) {
      r.bounds_hold = false;
      r.first_bound_violation = nu;
      break;
    }
  if (r.is_log_convex && !r.bounds_hold)
    throw InternalError("check_kaluza: log-convex input violates the reciprocal bounds at nu=" +
                        std::to_string(*r.first_bound_violation));
  return r;
}

struct KendallReport {
  bool hypothesis_holds = true;  // |a_nu| <= A q^nu for nu >= 1
  bool bound_holds = true;       // |b_nu| <= A q^nu (A+1)^(nu-1) for nu >= 1
  std::vector<mpq_class> margin;  // bound minus |b_nu|, index nu (margin[0] = 0)
  mpq_class M;                    // q (A+1)
};

/// Explicit geometric bound for reciprocal coefficients. Throws InternalError
/// if the hypothesis holds and the bound fails.
inline KendallReport kendall_explicit_bound(const CoefficientSeries& a, const mpq_class& A,
                                            const mpq_class& q) {
  if (a.coeffs.empty() || a[0] != 1) throw DomainError("kendall_explicit_bound: requires a_0 = 1");
  KendallReport r;
  r.M = q * (A + 1);
  const CoefficientSeries b = reciprocal_coeffs(a);
  r.margin.assign(a.size(), mpq_class(0));
  mpq_class qpow = 1;
  mpq_class growth = 1;  // (A+1)^(nu-1)
  for (std::size_t nu = 1; nu < a.size(); ++nu) {
    qpow *= q;
    if (nu >= 2) growth *= (A + 1);
    if (abs(a[nu]) > A * qpow) r.hypothesis_holds = false;
    const mpq_class bound = A * qpow * growth;
    r.margin[nu] = bound - abs(b[nu]);
    if (r.margin[nu] < 0) r.bound_holds = false;
  }
  if (r.hypothesis_holds && !r.bound_holds)
    throw InternalError("kendall_explicit_bound: bound violated under its hypothesis");
  return r;
}

/// Ids with a known closed form for the reciprocal coefficients.
inline const std::vector<std::string>& closed_form_ids() {
  static const std::vector<std::string> ids{"phi", "psi", "sigma", "1/phi", "1/psi", "1/kappa", "1/kappa_star"};
  return ids;
}

/// Reciprocal coefficients b_0..b_N from their closed forms.
inline CoefficientSeries closed_form_series(const std::string& id, std::size_t N) {
  CoefficientSeries b;
  b.origin = SeriesOrigin::reciprocal;
  mpz_class two_pow = 1;  // 2^nu
  mpz_class six_pow = 1;  // 6^nu
  mpz_class u = 1, v = 1;  // (1 + i sqrt 7)^(nu+1) = u + v i sqrt 7
  for (std::size_t nu = 0; nu <= N; ++nu) {
    const int alt = (nu % 2) ? -1 : 1;
    mpq_class c;
    if (id == "phi") {
      c = nu == 0 ? 1 : -1;
    } else if (id == "psi") {
      c = nu == 0 ? 1 : 3 * alt;
    } else if (id == "sigma") {
      c = nu == 0 ? 1 : nu == 1 ? -3 : nu == 2 ? 2 : 0;
    } else if (id == "1/phi") {
      c = nu == 0 ? mpq_class(1) : mpq_class(mpz_class(2 * alt), two_pow);
    } else if (id == "1/psi") {
      c = nu == 0 ? mpq_class(1) : mpq_class(mpz_class(-2), six_pow);
    } else if (id == "1/kappa") {
      c = nu == 0 ? mpq_class(1) : mpq_class(mpz_class(-1), two_pow);
    } else if (id == "1/kappa_star") {
      mpz_class four_pow = two_pow * two_pow * 4;  // 4^(nu+1)
      c = mpq_class(2 * (u + v), four_pow);
      mpz_class next_u = u - 7 * v;
      v = u + v;
      u = next_u;
    } else {
      throw DomainError("closed_form_series: no closed form for '" + id + "'");
    }
    c.canonicalize();
    b.coeffs.push_back(c);
    two_pow *= 2;
    six_pow *= 6;
  }
  return b;
}

/// Recurrence coefficients equal the closed form for nu <= N; for 1/kappa_star
/// also |b_nu| <= 4 / (sqrt(7) 2^(nu/2)), checked as 7 2^nu b_nu^2 <= 16.
inline bool closed_form_check(const std::string& id, std::size_t N = 64) {
  const CoefficientSeries expected = closed_form_series(id, N);
  const auto f = parse_function(id);
  if (!f) throw DomainError("closed_form_check: unknown id '" + id + "'");
  const CoefficientSeries b = reciprocal_coeffs(bell_coeffs(*f, N));
  for (std::size_t nu = 0; nu <= N; ++nu)
    if (b[nu] != expected[nu]) return false;
  if (id == "1/kappa_star") {
    mpz_class two_pow = 2;
    for (std::size_t nu = 1; nu <= N; ++nu, two_pow *= 2)
      if (7 * two_pow * b[nu] * b[nu] > 16) return false;
  }
  return true;
}

}  // namespace altsum
