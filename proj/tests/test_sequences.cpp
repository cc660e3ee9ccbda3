#include <gtest/gtest.h>

#include <vector>

#include "cookie/sequences.hpp"
#include "oracle.hpp"

using namespace cookie;

TEST(NacciTerm, TribonacciPrefix) {
  const std::vector<count_t> expect{0, 0, 1, 1, 2, 4, 7, 13, 24, 44};
  EXPECT_EQ(NacciFamily(3).terms(10), expect);
}

TEST(NacciTerm, TetranacciPrefix) {
  const std::vector<count_t> expect{0, 0, 0, 1, 1, 2, 4, 8, 15, 29, 56, 108};
  EXPECT_EQ(NacciFamily(4).terms(12), expect);
}

TEST(NacciTerm, FibonacciSeeds) {
  EXPECT_EQ(nacci_term(2, 0), 0u);
  EXPECT_EQ(nacci_term(2, 1), 1u);
  EXPECT_EQ(nacci_term(2, 10), 55u);
  EXPECT_EQ(nacci_term(2, 93), 12200160415121876738ull);  // largest in 64 bits
  EXPECT_THROW(nacci_term(2, 94), OverflowError);
}

TEST(NacciTerm, RejectsOrderBelowTwo) {
  EXPECT_THROW(NacciFamily(1), Error);
  EXPECT_THROW(nacci_term(0, 3), Error);
}

TEST(NacciTerm, MatchesReferenceRecurrence) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(NacciFamily(n).terms(40), oracle::nacci_terms(n, 40)) << n;
}

TEST(NacciJarSet, Examples) {
  EXPECT_EQ(nacci_jar_set(2, 4), JarState::from_counts({1, 2, 3, 5}));
  EXPECT_EQ(nacci_jar_set(3, 5), JarState::from_counts({1, 2, 4, 7, 13}));
  EXPECT_TRUE(nacci_jar_set(5, 0).empty());
  EXPECT_EQ(nacci_jar_set(4, 5), JarState::from_counts({1, 2, 4, 8, 15}));
}

TEST(NacciJarSet, FibonacciAndTribonacciIndexing) {
  const auto f = NacciFamily(2).terms(40);
  const auto t = NacciFamily(3).terms(40);
  for (std::size_t k = 1; k <= 30; ++k) {
    // {F_2..F_{k+1}} and {T_3..T_{k+2}}
    std::vector<count_t> fib(f.begin() + 2, f.begin() + static_cast<long>(k) + 2);
    std::vector<count_t> trib(t.begin() + 3, t.begin() + static_cast<long>(k) + 3);
    EXPECT_EQ(nacci_jar_set(2, k).vector(), fib);
    EXPECT_EQ(nacci_jar_set(3, k).vector(), trib);
  }
}

TEST(Superincreasing, Examples) {
  EXPECT_TRUE(is_superincreasing(JarState::from_counts({2, 4, 8})));
  EXPECT_FALSE(is_superincreasing(JarState::from_counts({1, 2, 3})));
  EXPECT_TRUE(is_superincreasing(JarState{}));
  EXPECT_TRUE(is_superincreasing(JarState::from_counts({1, 2, 4, 8, 16, 32, 64})));
  EXPECT_FALSE(is_superincreasing(JarState::from_counts({1, 2, 4, 7})));
}

TEST(FibonacciIdentity, Examples) {
  EXPECT_TRUE(fibonacci_identity_holds(5));
  EXPECT_TRUE(fibonacci_identity_holds(1));
  for (std::size_t k = 2; k <= 60; ++k) EXPECT_TRUE(fibonacci_identity_holds(k)) << k;
  EXPECT_THROW(fibonacci_identity_holds(0), Error);
}

TEST(TribonacciInequalities, Examples) {
  EXPECT_EQ(tribonacci_inequalities_hold(2), std::make_pair(true, true));
  // the second inequality reads 0 > 0 at k = 1
  EXPECT_EQ(tribonacci_inequalities_hold(1), std::make_pair(true, false));
  for (std::size_t k = 3; k <= 40; ++k) EXPECT_EQ(tribonacci_inequalities_hold(k), std::make_pair(true, true)) << k;
}

TEST(TribonacciInequalities, FirstFailureRange) {
  EXPECT_EQ(tribonacci_first_failure(kTribonacciClaimedBase, 40), 1u);
  EXPECT_EQ(tribonacci_first_failure(kTribonacciTrueBase, 40), 0u);
}

// n_i = n_{i-1} + ... + n_{i-n} for every i >= n
TEST(Properties, WindowIdentity) {
  for (int n = 2; n <= 10; ++n) {
    const auto t = NacciFamily(n).terms(50);
    for (std::size_t i = static_cast<std::size_t>(n); i < t.size(); ++i) {
      count_t sum = 0;
      for (int j = 1; j <= n; ++j) sum += t[i - static_cast<std::size_t>(j)];
      ASSERT_EQ(t[i], sum) << "n=" << n << " i=" << i;
    }
  }
}

TEST(Properties, DoublingPrefixAndSuperincreasingUpToN) {
  for (int n = 2; n <= 10; ++n) {
    const auto order = static_cast<std::size_t>(n);
    const auto t = NacciFamily(n).terms(3 * order);
    for (std::size_t j = 0; j + 2 <= order; ++j) EXPECT_EQ(t[order + j], count_t{1} << j);
    for (std::size_t k = 0; k <= order; ++k) EXPECT_TRUE(is_superincreasing(nacci_jar_set(n, k))) << n << "," << k;
    EXPECT_FALSE(is_superincreasing(nacci_jar_set(n, order + 1))) << n;
  }
}

TEST(Properties, StrictGrowthAfterSeeds) {
  for (int n = 2; n <= 10; ++n) {
    const auto t = NacciFamily(n).terms(45);
    // the last seed and the first jar value are both 1
    EXPECT_EQ(t[static_cast<std::size_t>(n) - 1], t[static_cast<std::size_t>(n)]);
    for (std::size_t i = static_cast<std::size_t>(n); i + 1 < t.size(); ++i) ASSERT_LT(t[i], t[i + 1]);
    EXPECT_EQ(nacci_jar_set(n, 30).size(), 30u);
  }
}

TEST(Overflow, JarSetOverflowIsReported) {
  EXPECT_NO_THROW(nacci_jar_set(2, 92));
  EXPECT_THROW(nacci_jar_set(2, 93), OverflowError);
}
