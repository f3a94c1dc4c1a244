#pragma once

// Riemann zeta on the real line: Euler-Maclaurin for s > 1, and the
// alternating (eta) series with Cohen-Villegas-Zagier acceleration for 0 < s < 1.

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "altsum/errors.hpp"
#include "altsum/value.hpp"

namespace altsum {

namespace detail {

// B_2, B_4, ..., B_24 divided by (2k)!
inline constexpr std::array<long double, 12> kBernoulliOverFactorial{
    1.0L / 6 / 2,
    -1.0L / 30 / 24,
    1.0L / 42 / 720,
    -1.0L / 30 / 40320,
    5.0L / 66 / 3628800,
    -691.0L / 2730 / 479001600,
    7.0L / 6 / 87178291200.0L,
    -3617.0L / 510 / 20922789888000.0L,
    43867.0L / 798 / 6402373705728000.0L,
    -174611.0L / 330 / 2432902008176640000.0L,
    854513.0L / 138 / 1124000727777607680000.0L,
    -236364091.0L / 2730 / 620448401733239439360000.0L,
};

inline constexpr int kEulerMaclaurinN = 20;

}  // namespace detail

/// zeta(s) - 1 for s > 1, accurate in relative terms even when tiny.
inline Real zeta_minus_one(Real s) {
  if (!(s > 1)) throw DomainError("zeta: s must exceed 1 (got " + format_real(s) + ")");
  if (s > 40) {
    CompensatedSum acc;
    for (int n = 2; n < 64; ++n) {
      const Real t = std::pow(static_cast<Real>(n), -s);
      acc += t;
      if (t < 1e-40L * acc.value()) break;
    }
    return acc.value();
  }
  const int N = detail::kEulerMaclaurinN;
  const Real NN = N;
  CompensatedSum acc;
  for (int n = N - 1; n >= 2; --n) acc += std::pow(static_cast<Real>(n), -s);
  acc += std::pow(NN, 1 - s) / (s - 1);
  acc += 0.5L * std::pow(NN, -s);
  Real rising = s;  // (s)_{2k-1}
  Real npow = std::pow(NN, -s - 1);
  for (std::size_t k = 0; k < detail::kBernoulliOverFactorial.size(); ++k) {
    acc += detail::kBernoulliOverFactorial[k] * rising * npow;
    rising *= (s + 2 * k + 1) * (s + 2 * k + 2);
    npow /= NN * NN;
  }
  return acc.value();
}

/// Dirichlet eta(s) = sum (-1)^(n-1) n^(-s), s > 0.
inline Real eta(Real s) {
  if (!(s > 0)) throw DomainError("eta: s must be positive");
  constexpr int n = 40;
  Real d = std::pow(3 + std::sqrt(8.0L), static_cast<Real>(n));
  d = (d + 1 / d) / 2;
  Real b = -1, c = -d;
  CompensatedSum acc;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    acc += c * std::pow(static_cast<Real>(k + 1), -s);
    b = static_cast<Real>(k + n) * static_cast<Real>(k - n) * b /
        ((static_cast<Real>(k) + 0.5L) * static_cast<Real>(k + 1));
  }
  return acc.value() / d;
}

/// zeta(s) for real s > 1.
inline Real zeta(Real s) { return 1 + zeta_minus_one(s); }

/// zeta(s) for real s > 0, s != 1; values in (0, 1) come from eta(s) / (1 - 2^(1-s)).
inline Real zeta_real(Real s) {
  if (s > 1) return zeta(s);
  if (!(s > 0) || s == 1) throw DomainError("zeta_real: s must be in (0,1) or above 1");
  return eta(s) / (1 - std::exp2(1 - s));
}

/// zeta'(s) for s > 1, by differentiating the Euler-Maclaurin expansion.
inline Real zeta_prime(Real s) {
  if (!(s > 1)) throw DomainError("zeta_prime: s must exceed 1");
  const int N = detail::kEulerMaclaurinN;
  const Real NN = N;
  const Real lnN = std::log(NN);
  CompensatedSum acc;
  for (int n = N - 1; n >= 2; --n) acc += -std::log(static_cast<Real>(n)) * std::pow(static_cast<Real>(n), -s);
  acc += -std::pow(NN, 1 - s) * (lnN / (s - 1) + 1 / ((s - 1) * (s - 1)));
  acc += -0.5L * lnN * std::pow(NN, -s);
  Real rising = s;
  Real dlog = 1 / s;  // sum of 1/(s+i) over the rising factorial
  Real npow = std::pow(NN, -s - 1);
  for (std::size_t k = 0; k < detail::kBernoulliOverFactorial.size(); ++k) {
    acc += detail::kBernoulliOverFactorial[k] * rising * npow * (dlog - lnN);
    rising *= (s + 2 * k + 1) * (s + 2 * k + 2);
    dlog += 1 / (s + 2 * k + 1) + 1 / (s + 2 * k + 2);
    npow /= NN * NN;
  }
  return acc.value();
}

inline constexpr Real kEulerGamma = std::numbers::egamma_v<long double>;
inline constexpr Real kPi = std::numbers::pi_v<long double>;
inline constexpr Real kLn2 = std::numbers::ln2_v<long double>;

}  // namespace altsum
