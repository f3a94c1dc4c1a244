#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <variant>

namespace altsum {

/// Working real type: x87 extended precision, 64-bit significand.
using Real = long double;

inline constexpr int kRealBits = 64;

using Value = std::variant<mpz_class, mpq_class, Real>;

enum class ValueKind { integer, rational, real };

inline mpz_class to_mpz(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

inline mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

/// Truncating conversion; error below one unit in the last place.
inline Real to_real(const mpz_class& z) {
  const int sgn = mpz_sgn(z.get_mpz_t());
  if (sgn == 0) return 0.0L;
  const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  mpz_class a = abs(z);
  long shift = 0;
  if (bits > 64) {
    shift = static_cast<long>(bits) - 64;
    a >>= static_cast<mp_bitcnt_t>(shift);
  }
  const std::uint64_t limb = mpz_getlimbn(a.get_mpz_t(), 0);
  const Real r = std::ldexp(static_cast<Real>(limb), static_cast<int>(shift));
  return sgn < 0 ? -r : r;
}

inline Real to_real(const mpq_class& q) {
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (sgn(num) == 0) return 0.0L;
  const long a = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  const long b = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  const long shift = 66 - (a - b);
  mpz_class quo;
  if (shift >= 0)
    quo = (num << static_cast<mp_bitcnt_t>(shift)) / den;
  else
    quo = num / (den << static_cast<mp_bitcnt_t>(-shift));
  return std::ldexp(to_real(quo), static_cast<int>(-shift));
}

inline Real to_real(const Value& v) {
  return std::visit(
      [](const auto& x) -> Real {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Real>)
          return x;
        else
          return to_real(x);
      },
      v);
}

/// Real rendered with the given number of significant digits.
inline std::string format_real(Real x, int digits = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
  return buf;
}

/// Exact values use GMP's canonical form ("-11", "-2/63").
inline std::string to_string(const Value& v) {
  if (auto z = std::get_if<mpz_class>(&v)) return z->get_str();
  if (auto q = std::get_if<mpq_class>(&v)) return q->get_str();
  return format_real(std::get<Real>(v), 21);
}

/// Demotes a rational with unit denominator to an integer.
inline Value normalize(mpq_class q) {
  q.canonicalize();
  if (q.get_den() == 1) return mpz_class(q.get_num());
  return q;
}

inline mpq_class to_mpq(const Value& v) {
  if (auto z = std::get_if<mpz_class>(&v)) return mpq_class(*z);
  if (auto q = std::get_if<mpq_class>(&v)) return *q;
  return mpq_class(static_cast<double>(std::get<Real>(v)));
}

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(Real x) {
    const Real t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(Real x) {
    add(x);
    return *this;
  }
  Real value() const { return sum_ + comp_; }

 private:
  Real sum_ = 0.0L;
  Real comp_ = 0.0L;
};

}  // namespace altsum
