#pragma once

// Main-term models for plain and alternating summatory functions, residual
// reports against exact sums, exponent fits, and the K_altern identity.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altsum/convolution.hpp"
#include "altsum/dirichlet_constants.hpp"
#include "altsum/errors.hpp"
#include "altsum/exact_sum.hpp"
#include "altsum/mult_functions.hpp"
#include "altsum/value.hpp"
#include "altsum/zeta.hpp"

namespace altsum {

enum class SumMode { plain, alternating, tq };

inline std::string to_string(SumMode m) {
  switch (m) {
    case SumMode::plain:
      return "plain";
    case SumMode::alternating:
      return "alternating";
    case SumMode::tq:
      return "tq";
  }
  return "?";
}

inline std::optional<SumMode> parse_mode(std::string_view s) {
  if (s == "plain") return SumMode::plain;
  if (s == "alternating" || s == "alt") return SumMode::alternating;
  if (s == "tq") return SumMode::tq;
  return std::nullopt;
}

/// x^a (log x)^b (log log x)^c, times delta(x) = exp(-(log x)^(3/5) (log log x)^(-1/5))
/// when `delta` is set. Unknown positive constants are taken as 1.
struct ErrorShape {
  Real x_power = 0;
  Real log_power = 0;
  Real loglog_power = 0;
  bool delta = false;

  Real operator()(Real x) const {
    const Real lx = std::log(x);
    const Real llx = std::log(lx);
    Real v = std::pow(x, x_power) * std::pow(lx, log_power);
    if (loglog_power != 0) v *= std::pow(llx, loglog_power);
    if (delta) v *= std::exp(-std::pow(lx, 0.6L) * std::pow(llx, -0.2L));
    return v;
  }
};

enum class Shape { quadratic, quadratic_log, linear_log, linear, log_plus_const, power_sum, inverse_log_powers };

struct AsymptoticModel {
  std::string function;  // "phi", "1/phi", ...
  SumMode mode = SumMode::alternating;
  std::vector<std::uint64_t> q;  // for SumMode::tq
  Shape shape = Shape::quadratic;
  // quadratic, linear: {C}; quadratic_log: {C, c0}; linear_log: {c1, c0};
  // log_plus_const: {D, E}; inverse_log_powers: {x power, first t, B_t, B_t+1, ...}
  std::vector<Real> params;
  std::vector<std::pair<Real, Real>> terms;  // power_sum: (coefficient, exponent), exponents decreasing
  std::vector<std::string> constants;        // named constants the parameters come from
  ErrorShape error;
  std::string formula;
  bool asserted = true;  // false for exploratory models (undetermined error exponent)
};

inline Real predict(const AsymptoticModel& m, Real x) {
  const Real lx = std::log(x);
  const auto& c = m.params;
  switch (m.shape) {
    case Shape::quadratic:
      return c[0] * x * x;
    case Shape::quadratic_log:
      return c[0] * x * x * (lx + c[1]);
    case Shape::linear_log:
      return c[0] * x * lx + c[1] * x;
    case Shape::linear:
      return c[0] * x;
    case Shape::log_plus_const:
      return c[0] * lx + c[1];
    case Shape::power_sum: {
      CompensatedSum acc;
      for (const auto& [coef, e] : m.terms) acc += coef * std::pow(x, e);
      return acc.value();
    }
    case Shape::inverse_log_powers: {
      CompensatedSum acc;
      for (std::size_t i = 2; i < c.size(); ++i) {
        const Real t = c[1] + static_cast<Real>(i - 2);
        acc += c[i] * std::pow(lx, -t + 0.5L);
      }
      return std::pow(x, c[0]) * acc.value();
    }
  }
  return 0;
}

namespace detail {

inline Real cval(const char* id) { return named_constant(id).value; }

inline AsymptoticModel make(std::string f, SumMode mode, Shape shape, std::vector<Real> params,
                            std::vector<std::string> constants, ErrorShape err, std::string formula,
                            bool asserted = true) {
  AsymptoticModel m;
  m.function = std::move(f);
  m.mode = mode;
  m.shape = shape;
  m.params = std::move(params);
  m.constants = std::move(constants);
  m.error = err;
  m.formula = std::move(formula);
  m.asserted = asserted;
  return m;
}

inline AsymptoticModel make_power_sum(std::string f, SumMode mode, std::vector<std::pair<Real, Real>> terms,
                                      std::vector<std::string> constants, ErrorShape err, std::string formula) {
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (!(terms[i].second < terms[i - 1].second)) throw InternalError("power_sum: exponents must decrease");
  AsymptoticModel m = make(std::move(f), mode, Shape::power_sum, {}, std::move(constants), err, std::move(formula));
  m.terms = std::move(terms);
  return m;
}

/// Alternating version of sum 1/f(n) = E (log x + c): E((2/S - 1)(log x + c) + 2 log 2 S'/S^2),
/// S = S_{1/f}(1).
inline AsymptoticModel alternating_log_model(Fn f, Real E, Real c, std::vector<std::string> constants,
                                             ErrorShape err, std::string formula, bool asserted) {
  const Real S = bell_value(inv(f), 1), Sp = bell_derivative(inv(f), 1);
  const Real lead = E * (2 / S - 1);
  return make("1/" + std::string(info(f).id), SumMode::alternating, Shape::log_plus_const,
              {lead, lead * c + E * 2 * kLn2 * Sp / (S * S)}, std::move(constants), err, std::move(formula),
              asserted);
}

inline std::vector<AsymptoticModel> build_models() {
  using S = Shape;
  const SumMode P = SumMode::plain, A = SumMode::alternating;
  const Real pi2 = kPi * kPi, g = kEulerGamma, ln2 = kLn2;
  const Real theta = 131.0L / 416;
  const Real zp2 = zeta_prime(2) / zeta(2);
  const ErrorShape e_walfisz{1, 2.0L / 3, 4.0L / 3}, e_x_log23{1, 2.0L / 3}, e_delta32{1.5L, 0, 0, true},
      e_delta12{0.5L, 0, 0, true};

  std::vector<AsymptoticModel> v;
  // Plain baselines.
  v.push_back(make("phi", P, S::quadratic, {3 / pi2}, {}, e_walfisz, "3/pi^2 x^2"));
  v.push_back(make("psi", P, S::quadratic, {15 / (2 * pi2)}, {}, e_x_log23, "15/(2 pi^2) x^2"));
  v.push_back(make("sigma", P, S::quadratic, {pi2 / 12}, {}, e_x_log23, "pi^2/12 x^2"));
  v.push_back(make("tau", P, S::linear_log, {1, 2 * g - 1}, {"gamma"}, {theta}, "x log x + (2 gamma - 1) x"));
  v.push_back(make("gcd_sum", P, S::quadratic_log, {3 / pi2, 2 * g - 0.5L - zp2}, {"gamma"}, {1 + theta},
                   "3/pi^2 x^2 (log x + 2 gamma - 1/2 - zeta'(2)/zeta(2))"));
  v.push_back(make("kappa", P, S::quadratic, {cval("C") / 2}, {"C"}, e_delta32, "C/2 x^2"));
  v.push_back(make("mu_sq", P, S::linear, {6 / pi2}, {}, e_delta12, "6/pi^2 x"));
  v.push_back(make_power_sum("abelian", P, {{cval("C1"), 1}, {cval("C2"), 0.5L}, {cval("C3"), 1.0L / 3}},
                             {"C1", "C2", "C3"}, {0.25L}, "C1 x + C2 x^(1/2) + C3 x^(1/3)"));
  v.push_back(make("sigma_star", P, S::quadratic, {pi2 / (12 * zeta(3))}, {}, {1, 5.0L / 3},
                   "pi^2/(12 zeta(3)) x^2"));
  v.push_back(make("phi_star", P, S::quadratic, {cval("C") / 2}, {"C"}, {1, 5.0L / 3, 4.0L / 3}, "C/2 x^2"));
  v.push_back(make("kappa_star", P, S::quadratic, {cval("C_tilde") / 2}, {"C_tilde"}, e_delta32, "C~/2 x^2"));
  v.push_back(make_power_sum("pow", P, {{cval("c1") / 3, 1.5L}, {cval("c2") / 4, 4.0L / 3}}, {"c1", "c2"},
                             {1.2L}, "c1/3 x^(3/2) + c2/4 x^(4/3)"));
  v.push_back(make("sigma_bi", P, S::quadratic, {cval("C_star_star") / 2}, {"C_star_star"}, {1, 3},
                   "C**/2 x^2"));
  v.push_back(make("beta", P, S::quadratic, {pi2 / 30}, {}, e_walfisz, "pi^2/30 x^2"));
  v.push_back(make("tau_e", P, S::linear, {cval("A1_tau_e")}, {"A1_tau_e"}, {0.5L}, "A1 x", false));
  v.push_back(make("1/phi", P, S::log_plus_const, {cval("A"), cval("A") * (g - cval("B"))}, {"A", "B"},
                   {-1, 2.0L / 3}, "A (log x + gamma - B)"));
  v.push_back(make("1/psi", P, S::log_plus_const, {cval("C"), cval("C") * (g + cval("D"))}, {"C", "D"},
                   {-1, 2.0L / 3, 4.0L / 3}, "C (log x + gamma + D)"));
  v.push_back(make("1/sigma", P, S::log_plus_const, {cval("E"), cval("E") * (g + cval("F"))}, {"E", "F"},
                   {-1, 2.0L / 3, 4.0L / 3}, "E (log x + gamma + F)"));
  v.push_back(make("1/tau", P, S::inverse_log_powers, {1, 1, cval("A1")}, {"A1"}, {1, -1.5L},
                   "A1 x (log x)^(-1/2)"));
  v.push_back(make("1/gcd_sum", P, S::inverse_log_powers, {0, 0, cval("K0")}, {"K0"}, {0, -0.5L},
                   "K0 (log x)^(1/2)"));
  v.push_back(make_power_sum(
      "1/kappa_star", P,
      {{cval("A_kappa_star") * zeta(1.5L) / zeta(3), 0.5L}, {cval("B_kappa_star") * zeta_real(2.0L / 3) / zeta(2), 1.0L / 3}},
      {"A_kappa_star", "B_kappa_star"}, {0.2L}, "A zeta(3/2)/zeta(3) x^(1/2) + B zeta(2/3)/zeta(2) x^(1/3)"));
  v.push_back(make("1/pow", P, S::linear, {cval("C_tilde")}, {"C_tilde"}, e_delta12, "C~ x"));
  v.push_back(make("1/abelian", P, S::linear, {cval("D_abelian")}, {"D_abelian"}, {0.5L, -0.5L},
                   "D x"));

  // Alternating sums.
  v.push_back(make("phi", A, S::quadratic, {1 / pi2}, {}, e_walfisz, "1/pi^2 x^2"));
  v.push_back(make("1/phi", A, S::log_plus_const,
                   {-cval("A") / 3, -cval("A") / 3 * (g - cval("B") - 8 * ln2 / 3)}, {"A", "B"}, {-1, 5.0L / 3},
                   "-(A/3)(log x + gamma - B - (8/3) log 2)"));
  v.push_back(make("psi", A, S::quadratic, {-3 / (2 * pi2)}, {}, e_x_log23, "-3/(2 pi^2) x^2"));
  v.push_back(make("1/psi", A, S::log_plus_const,
                   {cval("C") / 5, cval("C") / 5 * (g + cval("D") + 24 * ln2 / 5)}, {"C", "D"},
                   {-1, 2.0L / 3, 4.0L / 3}, "(C/5)(log x + gamma + D + (24/5) log 2)"));
  v.push_back(make("sigma", A, S::quadratic, {-pi2 / 48}, {}, e_x_log23, "-pi^2/48 x^2"));
  {
    const Real E = cval("E"), F = cval("F"), K = cval("K"), Kp = cval("Kprime");
    v.push_back(make("1/sigma", A, S::log_plus_const,
                     {E * (2 / K - 1), E * ((2 / K - 1) * (g + F) + 2 * ln2 * Kp / (K * K))},
                     {"E", "F", "K", "Kprime"}, {-1, 5.0L / 3, 4.0L / 3},
                     "E((2/K - 1)(log x + gamma + F) + 2 log 2 K'/K^2)"));
  }
  v.push_back(make("tau", A, S::linear_log, {-0.5L, 0.5L - g + ln2}, {"gamma"}, {theta},
                   "-(1/2) x log x + (1/2 - gamma + log 2) x"));
  v.push_back(make("1/tau", A, S::inverse_log_powers, {1, 1, cval("B1")}, {"B1"}, {1, -1.5L},
                   "B1 x (log x)^(-1/2), B1 = A1 (1/log 2 - 1)"));
  v.push_back(make("gcd_sum", A, S::quadratic_log, {-1 / pi2, 2 * g - 0.5L - zp2 - 10 * ln2 / 3}, {"gamma"},
                   {1 + theta}, "-(1/pi^2) x^2 (log x + 2 gamma - 1/2 - zeta'(2)/zeta(2) - (10/3) log 2)"));
  v.push_back(make("1/gcd_sum", A, S::inverse_log_powers, {0, 0, cval("D0")}, {"D0"}, {0, -0.5L},
                   "D0 (log x)^(1/2), D0 = K0 (1/(2(2 log 2 - 1)) - 1)"));
  v.push_back(make("kappa", A, S::quadratic, {cval("C") / 10}, {"C"}, e_delta32, "C/10 x^2"));
  v.push_back(make("mu_sq", A, S::linear, {2 / pi2}, {}, e_delta12, "2/pi^2 x"));
  v.push_back(make_power_sum("abelian", A,
                             {{cval("C1") * cval("K1"), 1}, {cval("C2") * cval("K2"), 0.5L},
                              {cval("C3") * cval("K3"), 1.0L / 3}},
                             {"C1", "C2", "C3", "K1", "K2", "K3"}, {0.25L},
                             "C1 K1 x + C2 K2 x^(1/2) + C3 K3 x^(1/3)"));
  v.push_back(make("1/abelian", A, S::linear, {cval("D_abelian_alt")}, {"D_abelian_alt"}, {0.5L, -0.5L},
                   "D (2/(1 + sum 1/(P(nu) 2^nu)) - 1) x", false));
  v.push_back(make("sigma_star", A, S::quadratic, {-pi2 / (84 * zeta(3))}, {}, {1, 5.0L / 3},
                   "-pi^2/(84 zeta(3)) x^2"));
  v.push_back(make("phi_star", A, S::quadratic, {cval("C") / 10}, {"C"}, {1, 5.0L / 3, 4.0L / 3}, "C/10 x^2"));
  v.push_back(make("kappa_star", A, S::quadratic, {5 * cval("C_tilde") / 38}, {"C_tilde"}, e_delta32,
                   "(5/38) C~ x^2"));
  v.push_back(make_power_sum("1/kappa_star", A,
                             {{cval("A_star") * zeta(1.5L) / zeta(3), 0.5L},
                              {cval("B_star") * zeta_real(2.0L / 3) / zeta(2), 1.0L / 3}},
                             {"A_star", "B_star"}, {0.2L},
                             "A* zeta(3/2)/zeta(3) x^(1/2) + B* zeta(2/3)/zeta(2) x^(1/3)"));
  v.push_back(make_power_sum("pow", A,
                             {{cval("A_star") * zeta(1.5L) / (3 * zeta(3)), 1.5L},
                              {cval("B_star") * zeta_real(2.0L / 3) / (4 * zeta(2)), 4.0L / 3}},
                             {"A_star", "B_star"}, {1.2L},
                             "A* zeta(3/2)/(3 zeta(3)) x^(3/2) + B* zeta(2/3)/(4 zeta(2)) x^(4/3)"));
  v.push_back(make("1/pow", A, S::linear, {5 * cval("C_tilde") / 19}, {"C_tilde"}, e_delta12, "(5/19) C~ x"));
  v.push_back(make("sigma_bi", A, S::quadratic, {-11 * cval("C_star_star") / 106}, {"C_star_star"}, {1, 3},
                   "-(11/106) C** x^2"));
  v.push_back(make("beta", A, S::quadratic, {pi2 / 120}, {}, e_walfisz, "pi^2/120 x^2"));
  v.push_back(make("tau_e", A, S::linear, {cval("A1_tau_e_alt")}, {"A1_tau_e_alt"}, {0.5L},
                   "A1 (2/(1+K) - 1) x", false));
  // Log-type alternating sums whose error exponent is not determined.
  for (Fn f : {Fn::sigma_star, Fn::phi_star, Fn::beta}) {
    const ConstantResult E = log_mean_reciprocal(f);
    const Real c = g + log_mean_constant(f).value;
    v.push_back(alternating_log_model(f, E.value, c, {}, {-1, 5.0L / 3},
                                      "E (2/S - 1)(log x + gamma + F) + 2 log 2 E S'/S^2", false));
  }
  return v;
}

}  // namespace detail

/// Every registered model. Constants are evaluated on first use.
inline const std::vector<AsymptoticModel>& models() {
  static const std::vector<AsymptoticModel> v = detail::build_models();
  return v;
}

inline const AsymptoticModel* find_model(std::string_view function, SumMode mode) {
  std::string id(function);
  if (auto f = parse_function(function)) id = f->id();
  for (const auto& m : models())
    if (m.function == id && m.mode == mode) return &m;
  return nullptr;
}

/// sum_{n<=x} t_Q(n) sigma(n) ~ (pi^2/12)(2 prod_{p in Q}(1 - 1/p)(1 - 1/p^2) - 1) x^2.
inline AsymptoticModel sigma_q_model(const QSet& q) {
  Real prod = 1;
  for (auto p : q.primes) {
    const Real u = 1 / static_cast<Real>(p);
    prod *= (1 - u) * (1 - u * u);
  }
  AsymptoticModel m = detail::make("sigma", SumMode::tq, Shape::quadratic, {kPi * kPi / 12 * (2 * prod - 1)}, {},
                                   {1, 2.0L / 3}, "(pi^2/12)(2 prod_Q (1 - 1/p)(1 - 1/p^2) - 1) x^2");
  m.q = q.primes;
  return m;
}

struct SumReport {
  std::string function;
  SumMode mode = SumMode::alternating;
  std::vector<std::uint64_t> grid;
  std::vector<Value> exact;
  std::vector<Real> predicted;
  std::vector<Real> residual;
  std::vector<Real> normalized;
  std::optional<Real> fitted_exponent;
};

/// Least-squares slope of log|r| against log x; zero residuals are skipped.
/// Undefined (nullopt) with fewer than 4 usable points.
inline std::optional<Real> fit_exponent(const std::vector<Real>& xs, const std::vector<Real>& residuals) {
  std::vector<std::pair<Real, Real>> pts;
  for (std::size_t i = 0; i < xs.size() && i < residuals.size(); ++i)
    if (residuals[i] != 0 && xs[i] > 0) pts.push_back({std::log(xs[i]), std::log(std::fabs(residuals[i]))});
  if (pts.size() < 4) return std::nullopt;
  Real mx = 0, my = 0;
  for (const auto& [a, b] : pts) {
    mx += a;
    my += b;
  }
  mx /= pts.size();
  my /= pts.size();
  Real sxx = 0, sxy = 0;
  for (const auto& [a, b] : pts) {
    sxx += (a - mx) * (a - mx);
    sxy += (a - mx) * (b - my);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

inline std::optional<Real> fit_error_exponent(const SumReport& r) {
  std::vector<Real> xs(r.grid.begin(), r.grid.end());
  return fit_exponent(xs, r.residual);
}

namespace detail {

/// exact - predicted, with the integer part of the prediction subtracted exactly.
inline Real residual_of(const Value& exact, Real predicted) {
  const Real whole = std::nearbyint(predicted);
  if (std::fabs(whole) > 1e30L) return to_real(exact) - predicted;
  mpz_class w = to_mpz(static_cast<__int128>(whole));
  return to_real(normalize(to_mpq(exact) - w)) - (predicted - whole);
}

inline Sign sign_for(const AsymptoticModel& m) {
  switch (m.mode) {
    case SumMode::plain:
      return Sign::plain();
    case SumMode::alternating:
      return Sign::alternating();
    case SumMode::tq:
      return Sign::tq(m.q);
  }
  return Sign::plain();
}

}  // namespace detail

/// Exact sums of the model's function over `grid` from a shared table, compared
/// with the model.
inline SumReport run_report(const AsymptoticModel& m, const ValueTable& table, std::vector<std::uint64_t> grid) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (!grid.empty() && grid.front() < 2) throw DomainError("run_report: grid values must be at least 2");
  SumReport r;
  r.function = m.function;
  r.mode = m.mode;
  r.grid = grid;
  r.exact = prefix_sums(table, grid, detail::sign_for(m));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Real x = static_cast<Real>(grid[i]);
    const Real p = predict(m, x);
    r.predicted.push_back(p);
    r.residual.push_back(detail::residual_of(r.exact[i], p));
    r.normalized.push_back(r.residual.back() / m.error(x));
  }
  r.fitted_exponent = fit_error_exponent(r);
  return r;
}

inline SumReport run_report(const AsymptoticModel& m, const std::vector<std::uint64_t>& grid) {
  const auto f = parse_function(m.function);
  if (!f) throw DomainError("run_report: unknown function " + m.function);
  std::uint64_t xmax = 0;
  for (auto x : grid) xmax = std::max(xmax, x);
  if (xmax > default_sieve_cap()) throw CapacityError("run_report: grid exceeds the sieve cap");
  return run_report(m, sieve_values(*f, xmax), grid);
}

/// x = 2^k for k = lo..hi.
inline std::vector<std::uint64_t> power_of_two_grid(unsigned lo = 10, unsigned hi = 20) {
  std::vector<std::uint64_t> g;
  for (unsigned k = lo; k <= hi; ++k) g.push_back(std::uint64_t{1} << k);
  return g;
}

enum class ExponentVerdict { ok, warning, failure, undefined };

/// Fitted exponent against the error shape's power of x: more than 0.2 above is
/// a warning, more than 0.5 a failure.
inline ExponentVerdict check_exponent(const AsymptoticModel& m, const SumReport& r) {
  if (!r.fitted_exponent) return ExponentVerdict::undefined;
  const Real excess = *r.fitted_exponent - m.error.x_power;
  if (excess > 0.5L) return ExponentVerdict::failure;
  if (excess > 0.2L) return ExponentVerdict::warning;
  return ExponentVerdict::ok;
}

/// K_altern(x) = K(x) - 2 sum_{1<=nu, 2^nu<=x} 2^-nu K(x/2^nu), K(x) = sum_{n<=x} 1/kappa(n),
/// with both sides exact.
inline bool kk_identity_check(const ValueTable& recip_kappa, std::uint64_t x) {
  if (recip_kappa.function() != inv(Fn::kappa)) throw DomainError("kk_identity_check: table must hold 1/kappa");
  std::vector<std::uint64_t> cps;
  for (std::uint64_t y = x; y > 0; y >>= 1) cps.push_back(y);
  const std::vector<Value> plain = prefix_sums(recip_kappa, cps, Sign::plain());
  const mpq_class lhs = to_mpq(partial_sum(recip_kappa, x, Sign::alternating()));
  mpq_class rhs = to_mpq(plain[0]);
  mpz_class two_pow = 1;
  for (std::size_t nu = 1; nu < cps.size(); ++nu) {
    two_pow *= 2;
    rhs -= 2 * to_mpq(plain[nu]) / two_pow;
  }
  return lhs == rhs;
}

inline bool kk_identity_check(std::uint64_t x) {
  if (x > default_sieve_cap()) throw CapacityError("kk_identity_check: x exceeds the sieve cap");
  return kk_identity_check(sieve_values(inv(Fn::kappa), x), x);
}

struct KKPoint {
  std::uint64_t x;
  Value altern;
  Value plain;
  Real ratio;
};

/// K_altern(x) / K(x) along the grid (trend data only).
inline std::vector<KKPoint> kk_sign_probe(const std::vector<std::uint64_t>& grid) {
  std::uint64_t xmax = 1;
  for (auto x : grid) {
    if (x == 0) throw DomainError("kk_sign_probe: grid values must be positive");
    xmax = std::max(xmax, x);
  }
  const ValueTable t = sieve_values(inv(Fn::kappa), xmax);
  const auto alt = prefix_sums(t, grid, Sign::alternating());
  const auto pl = prefix_sums(t, grid, Sign::plain());
  std::vector<KKPoint> out;
  for (std::size_t i = 0; i < grid.size(); ++i)
    out.push_back({grid[i], alt[i], pl[i], to_real(normalize(to_mpq(alt[i]) / to_mpq(pl[i])))});
  return out;
}

}  // namespace altsum
