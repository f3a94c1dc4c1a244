#include <gtest/gtest.h>

#include <random>

#include "altsum/asymptotics.hpp"

using namespace altsum;

namespace {

const AsymptoticModel& model(const char* f, SumMode m) {
  const AsymptoticModel* p = find_model(f, m);
  if (!p) throw std::runtime_error(std::string("no model for ") + f);
  return *p;
}

Real residual_at(const AsymptoticModel& m, std::uint64_t x) { return run_report(m, {x}).residual.front(); }

}  // namespace

TEST(Asymptotics, PredictSimpleShapes) {
  EXPECT_NEAR(static_cast<double>(predict(model("phi", SumMode::alternating), 1000)), 1e6 / (M_PI * M_PI), 1e-6);
  EXPECT_NEAR(static_cast<double>(predict(model("sigma", SumMode::alternating), 100)), -1e4 * M_PI * M_PI / 48, 1e-9);
  const Real x = 1e4L;
  EXPECT_NEAR(static_cast<double>(predict(model("tau", SumMode::alternating), x)),
              static_cast<double>(-0.5L * x * std::log(x) + (0.5L - kEulerGamma + kLn2) * x), 1e-6);
}

TEST(Asymptotics, SigmaQModelWithTwoMatchesAlternating) {
  const Real a = sigma_q_model(QSet::of({2})).params[0];
  const Real b = model("sigma", SumMode::alternating).params[0];
  EXPECT_NEAR(static_cast<double>(a - b), 0.0, 1e-12);
}

TEST(Asymptotics, SigmaQModelAgainstExactSums) {
  const AsymptoticModel m = sigma_q_model(QSet::of({2, 3}));
  const SumReport r = run_report(m, power_of_two_grid(10, 18));
  EXPECT_NEAR(static_cast<double>(to_real(r.exact.back()) / r.predicted.back()), 1.0, 1e-4);
}

TEST(Asymptotics, FitExponentOnSyntheticData) {
  std::vector<Real> xs, lin, half, zero(8, 0);
  for (int k = 10; k < 18; ++k) {
    const Real x = std::ldexp(1.0L, k);
    xs.push_back(x);
    lin.push_back(-3 * x);
    half.push_back(0.7L * std::sqrt(x) * ((k % 2) ? 1 : -1));
  }
  EXPECT_NEAR(static_cast<double>(*fit_exponent(xs, lin)), 1.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(*fit_exponent(xs, half)), 0.5, 1e-12);
  EXPECT_FALSE(fit_exponent(xs, zero));
  EXPECT_FALSE((fit_exponent({10, 20, 30}, {1, 2, 3})));
}

TEST(Asymptotics, ModelInvariants) {
  for (const auto& m : models()) {
    for (Real p : m.params) EXPECT_TRUE(std::isfinite(p)) << m.function;
    for (std::size_t i = 1; i < m.terms.size(); ++i) EXPECT_LT(m.terms[i].second, m.terms[i - 1].second) << m.function;
    EXPECT_TRUE(parse_function(m.function)) << m.function;
    EXPECT_FALSE(m.formula.empty());
  }
  EXPECT_THROW((detail::make_power_sum("pow", SumMode::plain, {{1, 0.5L}, {1, 1}}, {}, {}, "")), InternalError);
}

TEST(Asymptotics, QuadraticRatiosAtTenToTheSix) {
  const std::uint64_t x = 1000000;
  for (const char* f : {"phi", "psi", "sigma", "kappa", "sigma_star", "phi_star", "kappa_star", "sigma_bi", "beta",
                        "gcd_sum"}) {
    const SumReport r = run_report(model(f, SumMode::alternating), {x});
    EXPECT_NEAR(static_cast<double>(to_real(r.exact[0]) / r.predicted[0]), 1.0, 1e-3) << f;
  }
}

TEST(Asymptotics, LogarithmicAlternatingResiduals) {
  for (const char* f : {"1/phi", "1/psi", "1/sigma"})
    EXPECT_LT(std::fabs(static_cast<double>(residual_at(model(f, SumMode::alternating), 1000000))), 1e-4) << f;
}

TEST(Asymptotics, PlainBaselines) {
  const std::uint64_t x = 1 << 20;
  for (const char* f : {"phi", "psi", "sigma", "kappa", "sigma_star", "phi_star", "kappa_star", "sigma_bi", "beta"}) {
    const SumReport r = run_report(model(f, SumMode::plain), {x});
    EXPECT_NEAR(static_cast<double>(to_real(r.exact[0]) / r.predicted[0]), 1.0, 1e-3) << f;
  }
  for (const char* f : {"1/phi", "1/psi", "1/sigma"})
    EXPECT_LT(std::fabs(static_cast<double>(residual_at(model(f, SumMode::plain), x))), 1e-4) << f;
  EXPECT_NEAR(static_cast<double>(residual_at(model("mu_sq", SumMode::plain), x)), 0.0, 50);
}

TEST(Asymptotics, ExponentFitsWithinTheory) {
  const auto grid = power_of_two_grid(10, 20);
  for (const auto& m : models()) {
    if (!m.asserted) continue;
    const SumReport r = run_report(m, grid);
    const ExponentVerdict v = check_exponent(m, r);
    EXPECT_NE(v, ExponentVerdict::failure) << m.function << " " << to_string(m.mode) << " fitted "
                                            << static_cast<double>(r.fitted_exponent.value_or(-99));
    if (v == ExponentVerdict::warning)
      std::cout << "[warning] " << m.function << " " << to_string(m.mode) << " fitted "
                << static_cast<double>(*r.fitted_exponent) << " theory " << static_cast<double>(m.error.x_power) << "\n";
  }
}

TEST(Asymptotics, DivisorResidualScaledByPowerBounded) {
  const SumReport r = run_report(model("tau", SumMode::alternating), power_of_two_grid(10, 20));
  for (std::size_t i = 0; i < r.grid.size(); ++i)
    EXPECT_LT(std::fabs(static_cast<double>(r.residual[i] / std::pow(static_cast<Real>(r.grid[i]), 0.4L))), 1.0)
        << r.grid[i];
}

TEST(Asymptotics, PowerfulPartSecondTermUsesZetaTwoThirds) {
  // Swapping zeta(2/3) for zeta(4/3) in the x^(4/3) term makes the residual far larger.
  const AsymptoticModel& m = model("pow", SumMode::alternating);
  AsymptoticModel swapped = m;
  swapped.terms[1].first *= zeta(4.0L / 3) / zeta_real(2.0L / 3);
  const std::uint64_t x = 1 << 20;
  const Real good = std::fabs(residual_at(m, x)), bad = std::fabs(residual_at(swapped, x));
  EXPECT_LT(good * 10, bad);
  EXPECT_LT(good, std::pow(static_cast<Real>(x), 1.25L));
}

TEST(Asymptotics, GcdSumReciprocalLeadingConstantMatchesData) {
  // exact sum at 2^20 is about 1.527; the (log 2 - 1) variant of the constant predicts about -12.
  const AsymptoticModel& m = model("1/gcd_sum", SumMode::alternating);
  const std::uint64_t x = 1 << 20;
  const SumReport r = run_report(m, {x});
  EXPECT_NEAR(static_cast<double>(to_real(r.exact[0])), 1.527, 0.01);
  EXPECT_LT(std::fabs(static_cast<double>(r.residual[0])), 0.3);
  const Real K0 = named_constant("K0").value;
  const Real variant = K0 * (1 / (2 * (kLn2 - 1)) - 1) * std::sqrt(std::log(static_cast<Real>(x)));
  EXPECT_GT(std::fabs(static_cast<double>(to_real(r.exact[0]) - variant)), 5.0);
}

TEST(Asymptotics, ResidualSubtractsIntegerPartExactly) {
  // long double spacing near 1e18 is 1/8; a double would round the fraction away
  const Value big = mpz_class("1000000000000000001");
  const Real pred = 1000000000000000000.25L;
  EXPECT_NEAR(static_cast<double>(detail::residual_of(big, pred)), 0.75, 1e-3);
}

TEST(KKIdentity, ExactAtFixedAndRandomPoints) {
  const ValueTable t = sieve_values(inv(Fn::kappa), 100000);
  for (std::uint64_t x : {1ull, 2ull, 10ull, 100000ull}) EXPECT_TRUE(kk_identity_check(t, x)) << x;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> pick(1, 100000);
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t x = pick(rng);
    ASSERT_TRUE(kk_identity_check(t, x)) << x;
  }
  EXPECT_THROW(kk_identity_check(sieve_values(fn(Fn::kappa), 10), 10), DomainError);
}

TEST(KKIdentity, SignProbe) {
  const auto pts = kk_sign_probe({1, 2, 1000});
  EXPECT_EQ(to_mpq(pts[0].altern), 1);
  EXPECT_EQ(to_mpq(pts[1].altern), mpq_class(1, 2));
  EXPECT_EQ(to_mpq(pts[1].plain), mpq_class(3, 2));
  EXPECT_NEAR(static_cast<double>(pts[1].ratio), 1.0 / 3, 1e-18);
  EXPECT_THROW(kk_sign_probe({0}), DomainError);
}

TEST(Asymptotics, ParseMode) {
  EXPECT_EQ(parse_mode("alt"), SumMode::alternating);
  EXPECT_EQ(parse_mode("tq"), SumMode::tq);
  EXPECT_FALSE(parse_mode("odd"));
  EXPECT_THROW(run_report(model("phi", SumMode::plain), {1}), DomainError);
}
