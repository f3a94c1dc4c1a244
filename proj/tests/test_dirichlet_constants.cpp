#include <gtest/gtest.h>

#include <boost/math/special_functions/zeta.hpp>

#include "altsum/dirichlet_constants.hpp"

using namespace altsum;

namespace {

double c(const char* id, std::uint64_t L = kDefaultPrimeLimit) { return static_cast<double>(named_constant(id, L).value); }
double tail(const char* id) { return static_cast<double>(named_constant(id).tail_estimate); }

// Erdos-Borwein constant by direct summation.
long double erdos_borwein() {
  long double s = 0;
  for (int j = 1; j < 80; ++j) s += 1 / (std::ldexp(1.0L, j) - 1);
  return s;
}

}  // namespace

TEST(Constants, PublishedValues) {
  EXPECT_NEAR(c("C"), 0.704442, 2e-6);
  EXPECT_NEAR(c("K"), 1.606695, 1e-6);
  EXPECT_NEAR(c("K1"), -0.422423, 2e-6);
  EXPECT_NEAR(c("qprod"), 0.288788, 1e-6);
  EXPECT_NEAR(c("c_sigma_bi"), -0.152003, 1e-6);
  EXPECT_NEAR(c("B"), 0.6083817, 1e-6);
  EXPECT_NEAR(c("D"), 0.4187575, 1e-6);
  EXPECT_NEAR(c("E"), 0.6727383, 1e-6);
  EXPECT_NEAR(c("F"), 0.5073388, 1e-6);
  EXPECT_NEAR(c("C1"), 2.294856591673313, 1e-12);
  EXPECT_NEAR(c("C2"), -14.6475663016, 1e-9);
  EXPECT_NEAR(c("C3"), 118.69246197, 1e-7);
}

TEST(Constants, ClosedFormCrossChecks) {
  const long double z3 = boost::math::zeta(3.0L);
  EXPECT_NEAR(c("A"), static_cast<double>(315 * z3 / (2 * std::pow(kPi, 4))), 1e-11);
  EXPECT_NEAR(c("K"), static_cast<double>(erdos_borwein()), 1e-15);
  EXPECT_NEAR(c("c_sigma_bi"), std::log(0.9) / std::log(2.0), 1e-15);
  long double q = 1;
  for (int k = 1; k < 80; ++k) q *= 1 - std::ldexp(1.0L, -k);
  EXPECT_NEAR(c("qprod"), static_cast<double>(q), 1e-15);
  EXPECT_NEAR(c("K1"), static_cast<double>(2 * q - 1), 1e-15);
  EXPECT_NEAR(c("gamma"), 0.57721566490153286, 1e-17);
  EXPECT_NEAR(c("B1"), c("A1") * (1 / std::log(2.0) - 1), 1e-12);
  EXPECT_NEAR(c("D0"), c("K0") * (1 / (2 * (2 * std::log(2.0) - 1)) - 1), 1e-12);
  EXPECT_NEAR(c("c1"), c("A_kappa_star") * static_cast<double>(boost::math::zeta(1.5L) / z3), 1e-9);
  EXPECT_NEAR(c("c2"), c("B_kappa_star") * static_cast<double>(boost::math::zeta(2.0L / 3) / boost::math::zeta(2.0L)),
              1e-8);
  EXPECT_NEAR(c("A_star"), c("A_kappa_star") * (9 - 12 * std::sqrt(2.0)) / 23, 1e-12);
}

TEST(Constants, RawProductsAgreeWithAccelerated) {
  // Unaccelerated Euler products to 10^6 against the reported values.
  const auto& ps = cached_primes(1000000);
  long double C = 1, Ct = 1;
  for (long double p : ps) {
    C *= 1 - 1 / (p * (p + 1));
    Ct *= 1 - (p * p + p - 1) / (p * p * p * (p + 1));
  }
  EXPECT_NEAR(c("C"), static_cast<double>(C), 2e-7);
  EXPECT_NEAR(c("C_tilde"), static_cast<double>(Ct), 2e-7);
}

TEST(Constants, StableUnderTenfoldPrimeLimit) {
  for (const auto& nc : constant_list()) {
    const std::string id(nc.id);
    const ConstantResult lo = named_constant(id, 100000), hi = named_constant(id, 1000000);
    EXPECT_LE(std::fabs(static_cast<double>(hi.value - lo.value)), static_cast<double>(std::max(lo.tail_estimate, hi.tail_estimate)) + 1e-15) << id;
  }
}

TEST(Constants, TailEstimatesSmall) {
  for (const auto& nc : constant_list()) EXPECT_LT(static_cast<double>(named_constant(nc.id).tail_estimate), 1e-8) << nc.id;
  EXPECT_LT(tail("C"), 2e-6);
}

TEST(Constants, UnknownIdAndLimit) {
  EXPECT_THROW(named_constant("nope"), DomainError);
  EXPECT_THROW(named_constant("C", 999), CapacityError);
}

TEST(Constants, Formatting) {
  const std::string s = format_constant("K", named_constant("K"));
  EXPECT_EQ(s.rfind("K 1.606695152415291", 0), 0u) << s;
  EXPECT_NE(s.find("±"), std::string::npos);
  const ConstantResult loose{1.23456789L, 1e-4L, 0};
  EXPECT_EQ(reliable_digits(loose), 4);
}

TEST(MeanValues, SquarefreeAndWintner) {
  EXPECT_NEAR(static_cast<double>(mean_value(fn(Fn::mu_sq)).value), static_cast<double>(6 / (kPi * kPi)), 1e-12);
  EXPECT_NEAR(static_cast<double>(mean_value_alternating(fn(Fn::mu_sq)).value), static_cast<double>(2 / (kPi * kPi)),
              1e-12);
  EXPECT_NEAR(static_cast<double>(mean_value(fn(Fn::wintner_demo)).value), 0.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(mean_value_alternating(fn(Fn::wintner_demo)).value), c("wintner_alt"), 1e-12);
  EXPECT_NEAR(c("wintner_alt"), 0.242694589285874, 1e-12);
}

TEST(MeanValues, ExponentialDivisorRatio) {
  const double m = static_cast<double>(mean_value(fn(Fn::tau_e)).value);
  const double ma = static_cast<double>(mean_value_alternating(fn(Fn::tau_e)).value);
  EXPECT_NEAR(m, c("A1_tau_e"), 1e-12);
  EXPECT_NEAR(ma / m, 2 / (1 + c("K")) - 1, 1e-12);
  EXPECT_NEAR(ma, c("A1_tau_e_alt"), 1e-12);
}

TEST(MeanValues, DivergentMeanValue) { EXPECT_THROW(mean_value(fn(Fn::phi)), DomainError); }

TEST(LogMeans, ReciprocalProducts) {
  EXPECT_NEAR(static_cast<double>(log_mean_reciprocal(Fn::phi).value), c("A"), 1e-12);
  EXPECT_NEAR(static_cast<double>(log_mean_reciprocal(Fn::psi).value), c("C"), 1e-12);
  EXPECT_NEAR(static_cast<double>(log_mean_reciprocal(Fn::sigma).value), c("E"), 1e-12);
  EXPECT_NEAR(static_cast<double>(log_mean_reciprocal_alternating(Fn::phi).value), -c("A") / 3, 1e-12);
  EXPECT_NEAR(static_cast<double>(log_mean_reciprocal(Fn::sigma_star).value), c("Bstar_sigma"), 1e-12);
  EXPECT_NEAR(static_cast<double>(log_mean_reciprocal_alternating(Fn::sigma_star).value), c("Estar_sigma"), 1e-12);
  EXPECT_NEAR(static_cast<double>(log_mean_reciprocal(Fn::phi_star).value), c("Lstar_phi"), 1e-12);
  EXPECT_NEAR(c("Tstar_phi") / c("Lstar_phi"), 2 / (1 + c("K")) - 1, 1e-12);
  EXPECT_NEAR(c("Lstar_phi"), c("A1_tau_e"), 1e-12);
  EXPECT_THROW(log_mean_reciprocal(Fn::mu_sq), DomainError);
}

TEST(LogMeans, GenericConstantReproducesNamedOnes) {
  EXPECT_NEAR(static_cast<double>(log_mean_constant(Fn::phi).value), -c("B"), 1e-11);
  EXPECT_NEAR(static_cast<double>(log_mean_constant(Fn::psi).value), c("D"), 1e-11);
  EXPECT_NEAR(static_cast<double>(log_mean_constant(Fn::sigma).value), c("F"), 1e-10);
  EXPECT_THROW(log_mean_constant(Fn::tau), DomainError);
  EXPECT_THROW(log_mean_constant(Fn::gcd_sum), DomainError);
}

TEST(Dirichlet, EulerProductAgainstZetaIdentities) {
  const long double z2 = boost::math::zeta(2.0L), z3 = boost::math::zeta(3.0L), z4 = boost::math::zeta(4.0L);
  struct Case {
    Fn f;
    Real s;
    long double want;
  };
  for (const Case& c : {Case{Fn::phi, 3, z2 / z3}, Case{Fn::sigma, 3, z2 * z3}, Case{Fn::mu_sq, 2, z2 / z4},
                        Case{Fn::tau, 2, z2 * z2}}) {
    const ConstantResult r = dirichlet_series(fn(c.f), c.s);
    EXPECT_LE(std::fabs(static_cast<double>(r.value - c.want)), static_cast<double>(r.tail_estimate)) << info(c.f).id;
    EXPECT_LT(static_cast<double>(r.tail_estimate), 1e-6);
  }
}

TEST(Dirichlet, StatedFormsMatchGeneralForm) {
  for (const auto& id : stated_closed_form_ids()) {
    const Fn f = parse_function(id)->base;
    const double stated = static_cast<double>(stated_closed_form(f, 3));
    EXPECT_NEAR(stated, static_cast<double>(prop1_closed_form(fn(f), 3)), 1e-8) << id;
  }
  for (Fn f : {Fn::mu_sq, Fn::tau, Fn::abelian})
    EXPECT_NEAR(static_cast<double>(stated_closed_form(f, 2)), static_cast<double>(prop1_closed_form(fn(f), 2)), 1e-8)
        << info(f).id;
}

TEST(Dirichlet, TotientTwoFactor) {
  const Real z = 0.125L;
  EXPECT_NEAR(static_cast<double>(prop1_closed_form(fn(Fn::phi), 3) / dirichlet_series(fn(Fn::phi), 3).value),
              static_cast<double>((1 - 3 * z) / (1 - z)), 1e-15);
}

TEST(Dirichlet, PartialSumsApproachClosedForms) {
  for (const auto& id : stated_closed_form_ids()) {
    const Fn f = parse_function(id)->base;
    const ValueTable t = sieve_values(fn(f), 100000);
    const Real closed = stated_closed_form(f, 3);
    const Real err4 = std::fabs(dirichlet_partial(t, 3, 10000, Sign::alternating()) - closed);
    const Real err5 = std::fabs(dirichlet_partial(t, 3, 100000, Sign::alternating()) - closed);
    EXPECT_LT(static_cast<double>(err5), 1e-4) << id;
    EXPECT_LT(static_cast<double>(err5), static_cast<double>(err4) + 1e-9) << id;
  }
}

TEST(Dirichlet, TqSeries) {
  const QSet q23 = QSet::of({2, 3});
  for (Fn f : {Fn::phi, Fn::sigma, Fn::tau, Fn::kappa}) {
    EXPECT_NEAR(static_cast<double>(dq_closed_form(fn(f), 3, QSet::of({2}))),
                static_cast<double>(prop1_closed_form(fn(f), 3)), 1e-12);
    EXPECT_NEAR(static_cast<double>(dq_partial(fn(f), 3, q23, 100000)), static_cast<double>(dq_closed_form(fn(f), 3, q23)),
                1e-4)
        << info(f).id;
  }
}

TEST(Dirichlet, VanishingBellFactor) {
  // S(1/2) = 1 + 1/2 - 6/4
  EXPECT_THROW(prop1_closed_form(fn(Fn::wintner_demo), 1), DomainError);
}
