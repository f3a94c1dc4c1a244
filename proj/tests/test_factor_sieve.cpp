#include <gtest/gtest.h>

#include <cstdlib>

#include "altsum/factor_sieve.hpp"

using namespace altsum;

namespace {

// Trial division, independent of the sieve.
Factorization trial_factor(std::uint64_t n) {
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

}  // namespace

TEST(FactorSieve, SpfMatchesTrialDivision) {
  const SpfTable t = build_spf(100000);
  for (std::uint64_t n = 2; n <= 100000; ++n) {
    const auto f = trial_factor(n);
    ASSERT_EQ(t.spf(n), f.front().prime) << n;
    ASSERT_EQ(t.is_prime(n), f.size() == 1 && f[0].exponent == 1) << n;
  }
}

TEST(FactorSieve, FactorizeAgreesWithTrialDivision) {
  const SpfTable t = build_spf(50000);
  for (std::uint64_t n = 1; n <= 50000; ++n) {
    ASSERT_EQ(factorize(n, t), trial_factor(n)) << n;
    ASSERT_EQ(reconstruct(factorize(n, t)), n);
  }
}

TEST(FactorSieve, FactorizeWithoutTableLargeN) {
  for (std::uint64_t n : {999983ull, 1000000ull, 99999989ull, 98304000ull, 99460729ull})
    EXPECT_EQ(factorize(n), trial_factor(n)) << n;
}

TEST(FactorSieve, OneHasEmptyFactorization) {
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(reconstruct({}), 1u);
}

TEST(FactorSieve, PrimeCounts) {
  EXPECT_EQ(primes_up_to(100).size(), 25u);
  EXPECT_EQ(primes_up_to(1000000).size(), 78498u);
  const SpfTable t = build_spf(1000000);
  EXPECT_EQ(t.primes().size(), 78498u);
  EXPECT_EQ(t.primes(), primes_up_to(1000000));
}

TEST(FactorSieve, PrimesAscendingAndPrime) {
  const auto ps = primes_up_to(20000);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) ASSERT_LT(ps[i - 1], ps[i]);
    const auto f = trial_factor(ps[i]);
    ASSERT_TRUE(f.size() == 1 && f[0].exponent == 1);
  }
}

TEST(FactorSieve, CapacityErrors) {
  EXPECT_THROW(build_spf(1001, 1000), CapacityError);
  EXPECT_THROW(build_spf(1), CapacityError);
  EXPECT_THROW(factorize(0), CapacityError);
  EXPECT_THROW(factorize(10, build_spf(5)), CapacityError);
  EXPECT_NO_THROW(build_spf(1000, 1000));
}

TEST(FactorSieve, EnvironmentOverridesCap) {
  ::setenv("ALTSUM_SIEVE_CAP", "5000", 1);
  EXPECT_EQ(default_sieve_cap(), 5000u);
  EXPECT_THROW(build_spf(6000), CapacityError);
  ::setenv("ALTSUM_SIEVE_CAP", "junk", 1);
  EXPECT_EQ(default_sieve_cap(), kDefaultSieveCap);
  ::unsetenv("ALTSUM_SIEVE_CAP");
  EXPECT_EQ(default_sieve_cap(), kDefaultSieveCap);
}
