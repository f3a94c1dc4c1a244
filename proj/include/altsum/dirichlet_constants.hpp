#pragma once

// Dirichlet series (plain, alternating, t_Q-signed), Euler-product mean
// values, and the named constants of the main terms.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "altsum/convolution.hpp"
#include "altsum/errors.hpp"
#include "altsum/euler_product.hpp"
#include "altsum/mult_functions.hpp"
#include "altsum/value.hpp"
#include "altsum/zeta.hpp"

namespace altsum {

/// f(p^nu) as a real, for f or 1/f.
inline Real real_prime_power(const FunctionDescriptor& f, std::uint64_t p, unsigned nu) {
  const Real g = prime_power<Real>(f.base, p, nu);
  if (!f.reciprocal) return g;
  if (g == 0) throw DomainError(f.id() + " undefined at " + std::to_string(p) + "^" + std::to_string(nu));
  return 1 / g;
}

/// sum_nu f(p^nu) z^nu; DomainError if the terms do not go to zero.
inline Real local_series(const FunctionDescriptor& f, std::uint64_t p, Real z) {
  CompensatedSum acc;
  Real zpow = 1;
  for (unsigned nu = 0; nu < 4000; ++nu) {
    const Real t = real_prime_power(f, p, nu) * zpow;
    if (!std::isfinite(t)) break;
    acc += t;
    if (nu >= 3 && std::fabs(t) <= 1e-30L * std::max<Real>(1, std::fabs(acc.value()))) return acc.value();
    zpow *= z;
  }
  throw DomainError("local series of " + f.id() + " diverges at p=" + std::to_string(p));
}

/// Bell series S_f(z) = sum_nu f(2^nu) z^nu.
inline Real bell_value(const FunctionDescriptor& f, Real z) { return local_series(f, 2, z); }

/// S'_f(z).
inline Real bell_derivative(const FunctionDescriptor& f, Real z) {
  CompensatedSum acc;
  Real zpow = 1;
  for (unsigned nu = 1; nu < 4000; ++nu) {
    const Real t = nu * real_prime_power(f, 2, nu) * zpow;
    acc += t;
    if (nu >= 3 && std::fabs(t) <= 1e-30L * std::max<Real>(1, std::fabs(acc.value()))) return acc.value();
    zpow *= z;
  }
  throw DomainError("bell_derivative: series diverges");
}

namespace detail {

/// Zeta prefactor absorbing a c/p^2 leading term of log local(p), when the
/// largest primes show that decay.
inline std::vector<ZetaFactor> auto_prefactor(const std::function<Real(std::uint64_t)>& local,
                                              std::uint64_t limit) {
  const auto& primes = cached_primes(limit);
  if (primes.size() < 100) return {};
  std::uint64_t p_hi = primes.back(), p_lo = 0;
  for (auto it = primes.rbegin(); it != primes.rend(); ++it)
    if (*it <= limit / 100) {
      p_lo = *it;
      break;
    }
  const Real lhi = local(p_hi), llo = local(p_lo);
  if (!(lhi > 0) || !(llo > 0)) return {};
  const Real c_hi = std::log(lhi) * static_cast<Real>(p_hi) * static_cast<Real>(p_hi);
  const Real c_lo = std::log(llo) * static_cast<Real>(p_lo) * static_cast<Real>(p_lo);
  if (std::fabs(c_hi) < 1e-9L || std::fabs(c_hi - c_lo) > 1e-2L * std::fabs(c_hi)) return {};
  return {{2, c_hi}};
}

/// Euler product with local factors that may vanish or be negative.
inline ConstantResult signed_euler_product(const std::function<Real(std::uint64_t)>& local,
                                           std::uint64_t limit, bool accelerate = true,
                                           std::uint64_t skip_prime = 0) {
  bool zero = false;
  int sign = 1;
  auto wrapped = [&](std::uint64_t p) -> Real {
    if (p == skip_prime) return 1;
    const Real v = local(p);
    if (v == 0) {
      zero = true;
      return 1;
    }
    return std::fabs(v);
  };
  for (std::uint32_t p : cached_primes(std::min<std::uint64_t>(limit, 1000)))
    if (p != skip_prime && local(p) < 0) sign = -sign;
  EulerProductSpec spec;
  spec.local_factor = wrapped;
  spec.prime_limit = limit;
  if (accelerate) spec.zeta_prefactor = auto_prefactor(wrapped, limit);
  ConstantResult r = euler_product(spec);
  if (zero) return ConstantResult{0, 0, limit};
  r.value *= sign;
  return r;
}

inline ConstantResult scaled(ConstantResult r, Real factor) {
  r.value *= factor;
  r.tail_estimate *= std::fabs(factor);
  return r;
}

}  // namespace detail

/// M(f) = prod_p (1 - 1/p) sum_nu f(p^nu) / p^nu.
inline ConstantResult mean_value(const FunctionDescriptor& f, std::uint64_t prime_limit = kDefaultPrimeLimit) {
  auto local = [&](std::uint64_t p) {
    const Real u = 1 / static_cast<Real>(p);
    return (1 - u) * local_series(f, p, u);
  };
  return detail::signed_euler_product(local, prime_limit);
}

/// Mean value of (-1)^(n-1) f(n): M(f)(2/S_f(1/2) - 1), or the product over
/// odd primes when S_f(1/2) = 0.
inline ConstantResult mean_value_alternating(const FunctionDescriptor& f,
                                             std::uint64_t prime_limit = kDefaultPrimeLimit) {
  const Real t0 = bell_value(f, 0.5L);
  auto local = [&](std::uint64_t p) {
    const Real u = 1 / static_cast<Real>(p);
    return (1 - u) * local_series(f, p, u);
  };
  const ConstantResult odd = detail::signed_euler_product(local, prime_limit, true, 2);
  if (std::fabs(t0) < 1e-15L) return odd;
  return detail::scaled(odd, 1 - t0 / 2);
}

/// Logarithmic mean of 1/f: prod_p (1 - 1/p) sum_nu 1/f(p^nu).
inline ConstantResult log_mean_reciprocal(Fn f, std::uint64_t prime_limit = kDefaultPrimeLimit) {
  if (info(f).vanishes) throw DomainError("log_mean_reciprocal: " + std::string(info(f).id) + " vanishes");
  const FunctionDescriptor r = inv(f);
  auto local = [&](std::uint64_t p) { return (1 - 1 / static_cast<Real>(p)) * local_series(r, p, 1); };
  return detail::signed_euler_product(local, prime_limit);
}

inline ConstantResult log_mean_reciprocal_alternating(Fn f, std::uint64_t prime_limit = kDefaultPrimeLimit) {
  const ConstantResult m = log_mean_reciprocal(f, prime_limit);
  const Real t = bell_value(inv(f), 1);
  return detail::scaled(m, 2 / t - 1);
}

/// F_f in sum_{n<=x} 1/f(n) = E_f (log x + gamma + F_f) + o(1):
/// F_f = sum_p log p (1/(p-1) - sum_nu nu/f(p^nu) / sum_nu 1/f(p^nu)).
inline ConstantResult log_mean_constant(Fn f, std::uint64_t prime_limit = kDefaultPrimeLimit) {
  if (info(f).vanishes) throw DomainError("log_mean_constant: " + std::string(info(f).id) + " vanishes");
  const FunctionDescriptor r = inv(f);
  auto term = [&](std::uint64_t p) {
    CompensatedSum plain, weighted;
    for (unsigned nu = 0; nu < 4000; ++nu) {
      const Real g = real_prime_power(r, p, nu);
      plain += g;
      weighted += nu * g;
      if (nu >= 3 && nu * g < 1e-30L) break;
    }
    return std::log(static_cast<Real>(p)) * (1 / (static_cast<Real>(p) - 1) - weighted.value() / plain.value());
  };
  const auto& primes = cached_primes(prime_limit);
  const Real P = primes.back();
  if (std::fabs(term(primes.back())) * P > 1e-3L)
    throw DomainError("log_mean_constant: sum of 1/" + std::string(info(f).id) + " is not logarithmic");
  const Real c = term(primes.back()) * P * P / std::log(P);  // leading c log p / p^2
  auto accelerated = [&](std::uint64_t p) {
    const Real q = static_cast<Real>(p);
    return term(p) - c * std::log(q) / (q * q - 1);
  };
  return prime_sum(accelerated, -c * zeta_prime(2) / zeta(2), prime_limit);
}

/// D(f, s) = sum f(n) n^-s as an Euler product.
inline ConstantResult dirichlet_series(const FunctionDescriptor& f, Real s,
                                       std::uint64_t prime_limit = kDefaultPrimeLimit) {
  auto local = [&](std::uint64_t p) { return local_series(f, p, std::pow(static_cast<Real>(p), -s)); };
  return detail::signed_euler_product(local, prime_limit, false);
}

/// sum_{n<=N} sign(n) f(n) n^-s from sieved values.
inline Real dirichlet_partial(const ValueTable& t, Real s, std::uint64_t N, const Sign& sign) {
  if (N > t.size()) throw CapacityError("dirichlet_partial: N beyond table");
  CompensatedSum acc;
  for (std::uint64_t n = 1; n <= N; ++n) acc += sign(n) * t.real_at(n) * std::pow(static_cast<Real>(n), -s);
  return acc.value();
}

inline Real alternating_dirichlet_partial(const FunctionDescriptor& f, Real s, std::uint64_t N) {
  return dirichlet_partial(sieve_values(f, N), s, N, Sign::alternating());
}

/// D(f, s) (2 / S_f(2^-s) - 1).
inline Real prop1_closed_form(const FunctionDescriptor& f, Real s,
                              std::uint64_t prime_limit = kDefaultPrimeLimit) {
  const Real S = bell_value(f, std::exp2(-s));
  if (std::fabs(S) < 1e-15L) throw DomainError("prop1_closed_form: Bell factor vanishes for " + f.id());
  return dirichlet_series(f, s, prime_limit).value * (2 / S - 1);
}

/// sum t_Q(n) f(n) n^-s = D(f, s) (2 / prod_{q in Q} L_q(s) - 1).
inline Real dq_closed_form(const FunctionDescriptor& f, Real s, const QSet& q,
                           std::uint64_t prime_limit = kDefaultPrimeLimit) {
  Real prod = 1;
  for (auto p : q.primes) prod *= local_series(f, p, std::pow(static_cast<Real>(p), -s));
  if (std::fabs(prod) < 1e-15L) throw DomainError("dq_closed_form: local factor vanishes");
  return dirichlet_series(f, s, prime_limit).value * (2 / prod - 1);
}

inline Real dq_partial(const FunctionDescriptor& f, Real s, const QSet& q, std::uint64_t N) {
  return dirichlet_partial(sieve_values(f, N), s, N, Sign::tq(q.primes));
}

/// Ids with an explicit alternating Dirichlet series.
inline const std::vector<std::string>& stated_closed_form_ids() {
  static const std::vector<std::string> ids{"phi",  "psi",     "sigma",      "tau",       "gcd_sum", "kappa",
                                            "mu_sq", "abelian", "sigma_star", "phi_star", "beta"};
  return ids;
}

/// The explicit alternating Dirichlet series of each function in
/// stated_closed_form_ids(), written with zeta values and 2^-s.
inline Real stated_closed_form(Fn f, Real s, std::uint64_t prime_limit = kDefaultPrimeLimit) {
  const Real z = std::exp2(-s);
  switch (f) {
    case Fn::phi:
      return (1 - 3 * z) / (1 - z) * zeta(s - 1) / zeta(s);
    case Fn::psi:
      return (1 - 5 * z) / (1 + z) * zeta(s) * zeta(s - 1) / zeta(2 * s);
    case Fn::sigma:
      return (1 - 6 * z + 4 * z * z) * zeta(s) * zeta(s - 1);
    case Fn::tau:
      return (1 - 4 * z + 2 * z * z) * zeta(s) * zeta(s);
    case Fn::gcd_sum: {
      const Real w = 1 - 2 * z;
      return (2 * w * w / (1 - z) - 1) * zeta(s - 1) * zeta(s - 1) / zeta(s);
    }
    case Fn::kappa: {
      auto local = [&](std::uint64_t p) {
        const Real P = static_cast<Real>(p);
        return 1 + (P - 1) * std::pow(P, -s);
      };
      EulerProductSpec spec{local, {}, prime_limit};
      return (1 - 3 * z) / (1 + z) * zeta(s) * euler_product(spec).value;
    }
    case Fn::mu_sq:
      return (1 - z) / (1 + z) * zeta(s) / zeta(2 * s);
    case Fn::abelian: {
      Real prod_zeta = 1, prod_two = 1;
      for (int k = 1; k * s < 200; ++k) {
        prod_zeta *= zeta(k * s);
        prod_two *= 1 - std::exp2(-k * s);
      }
      return prod_zeta * (2 * prod_two - 1);
    }
    case Fn::sigma_star:
      return (2 * (1 - z) * (1 - 2 * z) / (1 - 2 * z * z) - 1) * zeta(s) * zeta(s - 1) / zeta(2 * s - 1);
    case Fn::phi_star: {
      auto local = [&](std::uint64_t p) {
        const Real P = static_cast<Real>(p);
        return 1 - 2 * std::pow(P, -s) + std::pow(P, 1 - 2 * s);
      };
      EulerProductSpec spec{local, {}, prime_limit};
      return (2 * (1 - 2 * z) * (1 - z) / (1 - 2 * z + 2 * z * z) - 1) * zeta(s) * zeta(s - 1) *
             euler_product(spec).value;
    }
    case Fn::beta:
      return (1 - 2 * z - 4 * z * z) * zeta(s - 1) * zeta(2 * s) / zeta(s);
    default:
      throw DomainError("stated_closed_form: no explicit series for " + std::string(info(f).id));
  }
}

// ---------------------------------------------------------------------------
// Named constants

struct NamedConstant {
  std::string_view id;
  std::string_view description;
};

inline const std::vector<NamedConstant>& constant_list() {
  static const std::vector<NamedConstant> list{
      {"gamma", "Euler's constant"},
      {"A", "zeta(2)zeta(3)/zeta(6) = prod (1 + 1/(p(p-1)))"},
      {"B", "sum log p / (p^2 - p + 1)"},
      {"C", "carefree constant prod (1 - 1/(p(p+1)))"},
      {"D", "sum log p / (p^2 + p - 1)"},
      {"E", "prod alpha(p), alpha(p) = (1 - 1/p) sum 1/sigma(p^nu)"},
      {"F", "sum (p-1)^2 beta(p) log p / (p alpha(p))"},
      {"K", "Erdos-Borwein constant sum 1/(2^j - 1)"},
      {"Kprime", "sum_j j/(2^(j+1) - 1)"},
      {"A1", "leading coefficient of sum 1/tau(n)"},
      {"B1", "A1 (1/log 2 - 1)"},
      {"K0", "leading coefficient of sum 1/P(n), P the gcd-sum function"},
      {"D0", "K0 (1/(2(2 log 2 - 1)) - 1)"},
      {"C1", "prod_{k>=2} zeta(k)"},
      {"C2", "prod_{k>=1, k!=2} zeta(k/2)"},
      {"C3", "prod_{k>=1, k!=3} zeta(k/3)"},
      {"K1", "2 prod (1 - 2^-k) - 1"},
      {"K2", "2 prod (1 - 2^(-k/2)) - 1"},
      {"K3", "2 prod (1 - 2^(-k/3)) - 1"},
      {"qprod", "prod (1 - 2^-k)"},
      {"D_abelian", "mean value of 1/a(n)"},
      {"D_abelian_alt", "mean value of (-1)^(n-1)/a(n)"},
      {"C_tilde", "prod (1 - (p^2 + p - 1)/(p^3 (p+1)))"},
      {"A_kappa_star", "prod (1 + (p^(1/2) - 1)/(p (p - p^(1/2) + 1)))"},
      {"B_kappa_star", "prod (1 + p^(-4/3)(1 - p^(-1/3))/(1 - p^(-1/3) + p^(-2/3)))"},
      {"A_star", "A_kappa_star (9 - 12 sqrt 2)/23"},
      {"B_star", "B_kappa_star times the 2-adic Bell factor"},
      {"c1", "prod (1 + 2/p^(3/2) - 1/p^(5/2))"},
      {"c2", "B_kappa_star zeta(2/3)/zeta(2)"},
      {"C_star_star", "zeta(2)zeta(3) prod (1 - 2/p^3 + 1/p^4 + 1/p^5 - 1/p^6)"},
      {"c_sigma_bi", "log(9/10)/log 2"},
      {"Bstar_sigma", "logarithmic mean of 1/sigma_star"},
      {"Estar_sigma", "alternating logarithmic mean of 1/sigma_star"},
      {"Lstar_phi", "logarithmic mean of 1/phi_star"},
      {"Tstar_phi", "alternating logarithmic mean of 1/phi_star"},
      {"A1_tau_e", "mean value of tau_e"},
      {"A1_tau_e_alt", "mean value of (-1)^(n-1) tau_e(n)"},
      {"wintner_alt", "prod_{p>2} (1 - 7/p^2 + 6/p^3)"},
  };
  return list;
}

namespace detail {

/// Sum of log p (term(p) - 1/(p^2 - 1)) plus -zeta'(2)/zeta(2).
inline ConstantResult log_weighted_prime_sum(const std::function<Real(std::uint64_t)>& term,
                                             std::uint64_t limit) {
  auto accelerated = [&](std::uint64_t p) {
    const Real P = static_cast<Real>(p);
    return std::log(P) * (term(p) - 1 / (P * P - 1));
  };
  return prime_sum(accelerated, -zeta_prime(2) / zeta(2), limit);
}

inline Real sigma_alpha(std::uint64_t p) {
  const Real P = static_cast<Real>(p);
  const Real s = convergent_series(
      [&](unsigned j) { return 1 / ((std::pow(P, j) - 1) * (std::pow(P, j + 1) - 1)); }, 1);
  return 1 - (P - 1) * (P - 1) / P * s;
}

inline Real sigma_beta(std::uint64_t p) {
  const Real P = static_cast<Real>(p);
  return convergent_series(
      [&](unsigned j) { return j / ((std::pow(P, j) - 1) * (std::pow(P, j + 1) - 1)); }, 1);
}

/// prod_{k>=1, k != j} zeta(k/j); factors below 1 come from zeta_real.
inline Real abelian_C(unsigned j) {
  Real log_sum = 0;
  Real sign = 1;
  for (unsigned k = 1;; ++k) {
    if (k == j) continue;
    const Real s = static_cast<Real>(k) / j;
    if (s < 1) {
      const Real v = zeta_real(s);
      if (v < 0) sign = -sign;
      log_sum += std::log(std::fabs(v));
      continue;
    }
    const Real zm1 = zeta_minus_one(s);
    log_sum += std::log1p(zm1);
    if (zm1 < 1e-30L) break;
  }
  return sign * std::exp(log_sum);
}

/// 2 prod_{k>=1} (1 - 2^(-k/j)) - 1.
inline Real abelian_K(unsigned j) {
  Real log_sum = 0;
  for (unsigned k = 1;; ++k) {
    const Real t = std::exp2(-static_cast<Real>(k) / j);
    log_sum += std::log1p(-t);
    if (t < 1e-30L) break;
  }
  return 2 * std::exp(log_sum) - 1;
}

inline ConstantResult exact_constant(Real v) { return ConstantResult{v, std::fabs(v) * 1e-18L, 0}; }

inline ConstantResult times(const ConstantResult& a, const ConstantResult& b) {
  ConstantResult r;
  r.value = a.value * b.value;
  r.tail_estimate = std::fabs(a.tail_estimate * b.value) + std::fabs(a.value * b.tail_estimate);
  r.prime_limit_used = std::max(a.prime_limit_used, b.prime_limit_used);
  return r;
}

inline ConstantResult compute_constant(std::string_view id, std::uint64_t L);

}  // namespace detail

/// Evaluates a registered constant (see constant_list()) with primes up to
/// `prime_limit`. Results are cached per (id, prime_limit).
inline ConstantResult named_constant(std::string_view id, std::uint64_t prime_limit = kDefaultPrimeLimit) {
  bool known = false;
  for (const auto& c : constant_list()) known = known || c.id == id;
  if (!known) throw DomainError("unknown constant id '" + std::string(id) + "'");
  static std::mutex mu;
  static std::map<std::pair<std::string, std::uint64_t>, ConstantResult> cache;
  const auto key = std::make_pair(std::string(id), prime_limit);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const ConstantResult r = detail::compute_constant(id, prime_limit);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, r);
  return r;
}

/// Significant digits of `r` not swamped by its tail estimate.
inline int reliable_digits(const ConstantResult& r) {
  if (r.value == 0) return 1;
  const Real tail = std::max(r.tail_estimate, std::fabs(r.value) * 1e-18L);
  const int d = static_cast<int>(std::floor(std::log10(std::fabs(r.value) / tail)));
  return std::clamp(d, 1, 18);
}

/// "id value ±tail" with the value truncated at the tail estimate.
inline std::string format_constant(std::string_view id, const ConstantResult& r) {
  char tail[32];
  std::snprintf(tail, sizeof tail, "%.1Le", r.tail_estimate);
  return std::string(id) + " " + format_real(r.value, reliable_digits(r)) + " ±" + tail;
}

inline ConstantResult detail::compute_constant(std::string_view id, std::uint64_t L) {
  auto product = [L](std::function<Real(std::uint64_t)> local, std::vector<ZetaFactor> pre, Real scale = 1) {
    EulerProductSpec spec{std::move(local), std::move(pre), L};
    spec.scale = scale;
    return euler_product(spec);
  };
  auto inv_p = [](std::uint64_t p) { return 1 / static_cast<Real>(p); };

  if (id == "gamma") return exact_constant(kEulerGamma);
  if (id == "A")
    return product([&](std::uint64_t p) { const Real P = p; return 1 + 1 / (P * (P - 1)); }, {{2, 1}});
  if (id == "B")
    return log_weighted_prime_sum([](std::uint64_t p) { const Real P = p; return 1 / (P * P - P + 1); }, L);
  if (id == "C")
    return product([&](std::uint64_t p) { const Real P = p; return 1 - 1 / (P * (P + 1)); }, {{2, -1}, {3, 1}});
  if (id == "D")
    return log_weighted_prime_sum([](std::uint64_t p) { const Real P = p; return 1 / (P * P + P - 1); }, L);
  if (id == "E") return product(sigma_alpha, {{2, -1}, {3, 1}});
  if (id == "F")
    return log_weighted_prime_sum(
        [](std::uint64_t p) {
          const Real P = p;
          return (P - 1) * (P - 1) * sigma_beta(p) / (P * sigma_alpha(p));
        },
        L);
  if (id == "K")
    return exact_constant(convergent_series([](unsigned j) { return 1 / (std::exp2(static_cast<Real>(j)) - 1); }, 1));
  if (id == "Kprime")
    return exact_constant(
        convergent_series([](unsigned j) { return j / (std::exp2(static_cast<Real>(j + 1)) - 1); }, 1));
  if (id == "A1") {
    auto local = [](std::uint64_t p) {
      const Real u = 1 / static_cast<Real>(p);
      return std::sqrt(1 - u) * (-std::log1p(-u) / u);
    };
    return product(local, {{2, -1.0L / 24}, {3, -1.0L / 24}}, 1 / std::sqrt(kPi));
  }
  if (id == "B1") return scaled(named_constant("A1", L), 1 / kLn2 - 1);
  if (id == "K0") {
    const FunctionDescriptor rp = inv(Fn::gcd_sum);
    auto local = [rp](std::uint64_t p) { return std::sqrt(1 - 1 / static_cast<Real>(p)) * local_series(rp, p, 1); };
    return product(local, {{2, 5.0L / 24}}, 2 / std::sqrt(kPi));
  }
  if (id == "D0") return scaled(named_constant("K0", L), 1 / (2 * (2 * kLn2 - 1)) - 1);
  if (id == "C1") return exact_constant(abelian_C(1));
  if (id == "C2") return exact_constant(abelian_C(2));
  if (id == "C3") return exact_constant(abelian_C(3));
  if (id == "K1") return exact_constant(abelian_K(1));
  if (id == "K2") return exact_constant(abelian_K(2));
  if (id == "K3") return exact_constant(abelian_K(3));
  if (id == "qprod") return exact_constant((abelian_K(1) + 1) / 2);
  if (id == "D_abelian") {
    std::vector<Real> coef;  // 1/P(k) - 1/P(k-1)
    for (unsigned k = 0; k <= 120; ++k)
      coef.push_back(k == 0 ? 1 : 1 / to_real(partition_count(k)) - 1 / to_real(partition_count(k - 1)));
    auto local = [coef](std::uint64_t p) {
      const Real u = 1 / static_cast<Real>(p);
      CompensatedSum acc;
      Real upow = 1;
      for (std::size_t k = 0; k < coef.size() && upow > 1e-40L; ++k, upow *= u) acc += coef[k] * upow;
      return acc.value();
    };
    return product(local, {{2, -0.5L}, {3, -1.0L / 6}});
  }
  if (id == "D_abelian_alt") {
    const Real S = bell_value(inv(Fn::abelian), 0.5L);
    return scaled(named_constant("D_abelian", L), 2 / S - 1);
  }
  if (id == "C_tilde")
    return product([](std::uint64_t p) { const Real P = p; return 1 - (P * P + P - 1) / (P * P * P * (P + 1)); },
                   {{2, -1}});
  if (id == "A_kappa_star")
    return product(
        [](std::uint64_t p) {
          const Real P = p, r = std::sqrt(P);
          return 1 + (r - 1) / (P * (P - r + 1));
        },
        {{1.5L, 1}, {2.5L, -1}, {3, -2}});
  if (id == "B_kappa_star")
    return product(
        [](std::uint64_t p) {
          const Real w = std::cbrt(1 / static_cast<Real>(p));
          return 1 + w * w * w * w * (1 - w) / (1 - w + w * w);
        },
        {{4.0L / 3, 1}, {2, -1}, {7.0L / 3, -1}});
  if (id == "A_star") return scaled(named_constant("A_kappa_star", L), (9 - 12 * std::sqrt(2.0L)) / 23);
  if (id == "B_star") {
    const Real c = std::cbrt(2.0L), c2 = c * c;
    return scaled(named_constant("B_kappa_star", L), (2 * c2 - 3 * c - 1) / (2 * c2 - c + 1));
  }
  if (id == "c1")
    return product(
        [](std::uint64_t p) {
          const Real P = p, r = std::sqrt(P);
          return 1 + 2 / (P * r) - 1 / (P * P * r);
        },
        {{1.5L, 2}, {2.5L, -1}});
  if (id == "c2") return scaled(named_constant("B_kappa_star", L), zeta_real(2.0L / 3) / zeta(2));
  if (id == "C_star_star")
    return product(
        [&](std::uint64_t p) {
          const Real u = inv_p(p);
          const Real u3 = u * u * u;
          return 1 - 2 * u3 + u3 * u + u3 * u * u - u3 * u3;
        },
        {{3, -2}, {4, 1}}, zeta(2) * zeta(3));
  if (id == "c_sigma_bi") return exact_constant(std::log(0.9L) / kLn2);
  if (id == "Bstar_sigma") {
    const FunctionDescriptor r = inv(Fn::sigma_star);
    return product([&](std::uint64_t p) { return (1 - inv_p(p)) * local_series(r, p, 1); }, {{2, -1}, {3, 2}});
  }
  if (id == "Estar_sigma")
    return scaled(named_constant("Bstar_sigma", L), 2 / bell_value(inv(Fn::sigma_star), 1) - 1);
  if (id == "Lstar_phi") {
    const FunctionDescriptor r = inv(Fn::phi_star);
    return product([&](std::uint64_t p) { return (1 - inv_p(p)) * local_series(r, p, 1); }, {{2, 1}});
  }
  if (id == "Tstar_phi") return scaled(named_constant("Lstar_phi", L), 2 / bell_value(inv(Fn::phi_star), 1) - 1);
  if (id == "A1_tau_e") {
    const FunctionDescriptor t = fn(Fn::tau_e);
    return product([&](std::uint64_t p) { return (1 - inv_p(p)) * local_series(t, p, inv_p(p)); }, {{2, 1}});
  }
  if (id == "A1_tau_e_alt")
    return scaled(named_constant("A1_tau_e", L), 2 / bell_value(fn(Fn::tau_e), 0.5L) - 1);
  if (id == "wintner_alt")
    return product(
        [&](std::uint64_t p) {
          if (p == 2) return Real(1);
          const Real u = inv_p(p);
          return 1 - 7 * u * u + 6 * u * u * u;
        },
        {{2, -7}, {3, 6}});
  throw DomainError("unknown constant id '" + std::string(id) + "'");
}

}  // namespace altsum
