#include <gtest/gtest.h>

#include <chrono>

#include "qseries/errors.hpp"
#include "qseries/kr.hpp"
#include "qseries/reflect.hpp"
#include "test_util.hpp"

using namespace qseries;
using testutil::poly;

TEST(Reflect, NormalizationMatchesDegree) {
  for (int i = 1; i <= 5; ++i) {
    for (int N = 1; N <= 36; ++N) {
      auto p = kr_finite(i, N);
      EXPECT_EQ(p.degree(), normalization_exponent(i, N)) << i << " " << N;
      auto r = rk_finite(i, N);
      EXPECT_GE(r.low(), 0) << i << " " << N;
    }
  }
  EXPECT_EQ(rk_finite(4, 0), LaurentSeries::one());
  EXPECT_EQ(normalization_exponent(1, 3), 6);
}

TEST(Reflect, TermwiseTruncationMatchesExact) {
  for (int i = 1; i <= 5; ++i) {
    for (int N = 0; N <= 20; ++N) {
      for (int T : {0, 9, 40}) {
        EXPECT_TRUE(agree_to_order(rk_finite(i, N, Precision::up_to(T)), rk_finite(i, N).truncate(T), T))
            << i << " " << N << " " << T;
      }
    }
  }
}

TEST(Reflect, AbFinitePathMatchesReflection) {
  for (int i : {4, 5}) {
    for (int l = 0; l < 3; ++l) {
      auto f = ab_form(i, l);
      ASSERT_TRUE(f.has_finite_form());
      for (int M = 0; M <= 6; ++M) EXPECT_EQ(f.finite(M), rk_finite(i, 3 * M + l)) << i << " " << l << " " << M;
    }
  }
  EXPECT_FALSE(ab_form(1, 0).has_finite_form());
  EXPECT_THROW(ab_form(2, 1).finite(3), DomainError);
}

TEST(Reflect, StabilizedLimitExamples) {
  auto s = stabilized_limit([](int M, int T) { return rk_finite(4, 3 * M, Precision::up_to(T)); }, 4);
  EXPECT_EQ(s.series, poly(0, {1, 0, 1, 1, 1}).truncate(4));
  EXPECT_GE(s.m, 2);
  auto one = stabilized_limit([](int, int T) { return LaurentSeries::one().truncate(T); }, 9);
  EXPECT_EQ(one.series, LaurentSeries::one().truncate(9));
  EXPECT_EQ(one.m, 3);
  auto kr = stabilized_limit([](int M, int T) { return kr_finite(4, M, Precision::up_to(T)); }, 5);
  EXPECT_EQ(kr.series, kr_infinite(4, 5));
}

TEST(Reflect, NonConvergenceIsReported) {
  // M -> q^0 + ... + M q^0 never settles
  auto bad = [](int M, int T) { return LaurentSeries::monomial(0, M).truncate(T); };
  try {
    stabilized_limit(bad, 10, StabilizeOptions{64});
    FAIL() << "expected NonConvergenceError";
  } catch (const NonConvergenceError& e) {
    EXPECT_EQ(e.last_discrepancy(), 0);
    EXPECT_LE(e.last_m(), 64);
  }
}

TEST(Reflect, LimitsMatchAbSumsAndProducts) {
  const int T = 30;
  for (int i = 1; i <= 5; ++i) {
    for (int l = 0; l < 3; ++l) {
      auto lim = rk_limit(i, l, T);
      EXPECT_TRUE(agree_to_order(lim.series, ab_form(i, l).limit(T), T)) << i << " " << l;
    }
  }
  for (auto [i, l] : {std::pair{4, 0}, {4, 1}, {5, 1}, {5, 2}}) {
    EXPECT_TRUE(agree_to_order(rk_limit(i, l, T).series, expand_product(rk_product_spec(i, l), T), T)) << i << l;
  }
  EXPECT_EQ(ab_form(4, 0).limit(4), poly(0, {1, 0, 1, 1, 1}).truncate(4));
  EXPECT_EQ(expand_product(rk_product_spec(4, 0), 4), poly(0, {1, 0, 1, 1, 1}).truncate(4));
}

TEST(Reflect, BracketCombinations) {
  const int T = 30;
  for (int i = 1; i <= 3; ++i) {
    for (int l : {0, 2}) {
      auto lim = rk_limit(i, l, T).series;
      for (int form = 0; form < 2; ++form) {
        EXPECT_TRUE(agree_to_order(lim, expand_combination(rk_bracket_form(i, l, form), T), T)) << i << l << form;
      }
    }
  }
  EXPECT_EQ(to_string(rk_bracket_form(2, 0, 1)), "q^-3*br(1,5,8,13) - q^-3*br(2,5,8,11) - q^-2*br(4,5,7,13)");
}

TEST(Reflect, LinearRelations) {
  const int T = 40;
  auto L = [&](int i, int l) { return rk_limit(i, l, T).series; };
  EXPECT_TRUE(agree_to_order(L(1, 1), L(1, 0).shift(1) + L(1, 2), T));
  EXPECT_TRUE(agree_to_order(L(2, 1), L(2, 0) + L(2, 2), T));
  EXPECT_TRUE(agree_to_order(L(4, 2), L(4, 0) + L(4, 1).shift(2), T));
  EXPECT_TRUE(agree_to_order(L(5, 0), L(5, 1) + L(5, 2).shift(2), T));
  EXPECT_TRUE(agree_to_order(L(3, 1), L(3, 0) + L(3, 2).shift(2), T));
  EXPECT_EQ(first_discrepancy(L(3, 1), L(2, 0) + L(2, 2).shift(2), T), 3);
}

TEST(Reflect, PositivityScan) {
  EXPECT_EQ(positivity_scan(LaurentSeries(), ProductSpec{}, 10), std::nullopt);
  EXPECT_EQ(positivity_scan(poly(0, {1, -1}), ProductSpec{}, 10), 1);
  auto rk4 = expand_product(rk_product_spec(4, 0), 80);
  EXPECT_EQ(positivity_scan(rk4, positivity_multiplier(), 80), std::nullopt);
  for (const auto& c : positivity_cases()) {
    EXPECT_EQ(positivity_scan(expand_case(c, 80, positivity_multiplier()), ProductSpec{}, 80), std::nullopt) << c.name;
    // multiplying before or after expansion gives the same series
    EXPECT_TRUE(agree_to_order(expand_case(c, 40, positivity_multiplier()),
                               expand_case(c, 40) * expand_product(positivity_multiplier(), 40), 40));
  }
  EXPECT_EQ(positivity_cases().size(), 15u);
}

TEST(Reflect, LimitAtTwoHundredIsFast) {
  auto t0 = std::chrono::steady_clock::now();
  auto s = rk_limit(2, 0, 200);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "rk_limit(2,0,200): M=" << s.m << " in " << ms << " ms\n";
  EXPECT_TRUE(agree_to_order(s.series, ab_form(2, 0).limit(200), 200));
}
