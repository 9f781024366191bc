#include <gtest/gtest.h>

#include <algorithm>

#include <powerchord/ntheory.hpp>

using namespace powerchord;
using namespace powerchord::ntheory;

TEST(Ntheory, IsPrimeSmallValues) {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (std::uint64_t n = 0; n < 50; ++n)
    EXPECT_EQ(is_prime(n), std::count(primes.begin(), primes.end(), n) == 1) << n;
}

TEST(Ntheory, FactorizeRoundTrips) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto f = factorize(n);
    EXPECT_EQ(f.value(), n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      EXPECT_TRUE(is_prime(f.factors[i].prime));
      if (i)
        EXPECT_LT(f.factors[i - 1].prime, f.factors[i].prime);
    }
  }
  EXPECT_EQ(factorize(360).factors, (std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}}));
}

TEST(Ntheory, TotientMatchesCoprimeCount) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
      count += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_totient(n), count) << n;
  }
}

TEST(Ntheory, PrimePowerDetection) {
  EXPECT_FALSE(is_prime_power(1));
  EXPECT_EQ(is_prime_power(32), (PrimePower{2, 5}));
  EXPECT_EQ(is_prime_power(49), (PrimePower{7, 2}));
  EXPECT_FALSE(is_prime_power(12));
}

TEST(Ntheory, ChordalCyclicOrders) {
  EXPECT_TRUE(is_chordal_cyclic_order(1));
  EXPECT_TRUE(is_chordal_cyclic_order(12));
  EXPECT_TRUE(is_chordal_cyclic_order(20));
  EXPECT_FALSE(is_chordal_cyclic_order(30));
  EXPECT_FALSE(is_chordal_cyclic_order(36));
  EXPECT_FALSE(is_chordal_cyclic_order(42));
  EXPECT_THROW(is_chordal_cyclic_order(0), InvalidInput);
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    const auto f = factorize(n);
    const bool shape = f.distinct_primes() <= 1 ||
                       (f.distinct_primes() == 2 && (f.factors[0].exponent == 1 || f.factors[1].exponent == 1));
    EXPECT_EQ(is_chordal_cyclic_order(n), shape) << n;
  }
}

TEST(Ntheory, Psl2Criterion) {
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13})
    EXPECT_TRUE(psl2_criterion(q)) << q;
  EXPECT_FALSE(psl2_criterion(61));
  EXPECT_THROW(psl2_criterion(6), InvalidInput);
  EXPECT_THROW(psl2_criterion(3), InvalidInput);
}

TEST(Ntheory, SuzukiAndReePredicates) {
  EXPECT_TRUE(suzuki_criterion(8));
  EXPECT_THROW(suzuki_criterion(16), InvalidInput);
  EXPECT_THROW(suzuki_criterion(2), InvalidInput);
  EXPECT_THROW(ree_sufficient(9), InvalidInput);
  EXPECT_NO_THROW(ree_sufficient(27));
}
