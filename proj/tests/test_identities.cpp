#include <gtest/gtest.h>

#include "qseries/classical.hpp"
#include "qseries/kr.hpp"
#include "qseries/partition.hpp"
#include "qseries/pochhammer.hpp"
#include "qseries/qbinomial.hpp"
#include "test_util.hpp"

using namespace qseries;
using testutil::poly;

TEST(Kr, Examples) {
  EXPECT_EQ(kr_finite(4, 0), LaurentSeries::one());
  EXPECT_EQ(kr_finite(4, 3), poly(0, {1, 0, 1, 1, 0, 1}));
  EXPECT_EQ(kr_finite(1, 0), LaurentSeries::one());
  EXPECT_EQ(kr_infinite(1, 0), LaurentSeries::one().truncate(0));
  EXPECT_EQ(kr_infinite(4, 5), poly(0, {1, 0, 1, 1, 1, 2}).truncate(5));
  EXPECT_EQ(kr_product(4, 5), poly(0, {1, 0, 1, 1, 1, 2}).truncate(5));
  EXPECT_EQ(kr_product(1, 3).coefficient(0), 1);
  EXPECT_EQ(kr_product(3, 3).coefficient(3), 1);
}

TEST(Kr, SRecursionExamples) {
  EXPECT_EQ(s_recursion(0), LaurentSeries::one());
  EXPECT_EQ(s_recursion(2), poly(0, {1, 0, 1}));
  EXPECT_EQ(s_recursion(3), poly(0, {1, 0, 1, 1, 0, 1}));
  EXPECT_TRUE(s_recursion(-1).is_zero());
}

TEST(Kr, Kr4MatchesRecursionAndEnumeration) {
  for (int N = 0; N <= 25; ++N) EXPECT_EQ(kr_finite(4, N), s_recursion(N)) << N;
  for (int N = 0; N <= 10; ++N) {
    EXPECT_TRUE(agree_to_order(kr_finite(4, N), generating_polynomial(ConstraintProfile::i4(N), 40), 40)) << N;
  }
}

TEST(Kr, TruncatedMatchesExact) {
  for (int i = 1; i <= 5; ++i) {
    for (int N = 0; N <= 14; ++N) {
      for (int T : {0, 5, 30}) {
        auto t = kr_finite(i, N, Precision::up_to(T));
        EXPECT_TRUE(agree_to_order(t, kr_finite(i, N).truncate(T), T)) << i << " " << N << " " << T;
      }
    }
  }
}

TEST(Kr, XRefinementCountsParts) {
  auto b = kr_finite_x(4, 3);
  EXPECT_EQ(b.slice(2).coefficient(5), 1);
  for (int i = 1; i <= 4; ++i) {
    EXPECT_EQ(kr_finite_x(i, 0).slice(0), LaurentSeries::one());
    EXPECT_EQ(kr_finite_x(i, 0).x_degree(), 0);
  }
  for (int i = 1; i <= 5; ++i) {
    for (int N = 0; N <= 8; ++N) EXPECT_EQ(kr_finite_x(i, N).total(), kr_finite(i, N));
  }
  for (int N = 0; N <= 9; ++N) {
    auto x = kr_finite_x(4, N);
    auto profile = ConstraintProfile::i4(N);
    for (int j = 0; j <= x.x_degree(); ++j) {
      for (int n = 0; n <= 30; ++n) {
        EXPECT_EQ(x.slice(j).coefficient(n), static_cast<long>(count_by_parts(profile, n, j))) << N << j << n;
      }
    }
  }
}

TEST(Kr, Kr5AtZeroIsZero) {
  // every summand carries [-1 - ... choose m]; nothing survives at N = 0
  EXPECT_TRUE(kr_finite(5, 0).is_zero());
  EXPECT_EQ(kr_finite(5, 1), poly(0, {1, 1}));
}

TEST(Kr, FiniteFamiliesStabilize) {
  for (int i = 1; i <= 5; ++i) {
    for (int N = 1; N <= 20; ++N) {
      auto a = kr_finite(i, N), b = kr_finite(i, N + 1);
      auto d = first_difference_exact(a, b);
      // KR3 has no parts below 3, so small N may agree entirely
      if (d) EXPECT_GE(*d, N + 1) << i << " " << N;
      if (N >= 3) EXPECT_TRUE(d.has_value()) << i << " " << N;
    }
  }
}

TEST(Kr, LimitsMatchFiniteAndProducts) {
  const int T = 40;
  for (int i = 1; i <= 5; ++i) {
    EXPECT_TRUE(agree_to_order(kr_finite(i, T, Precision::up_to(T)), kr_infinite(i, T), T)) << i;
    EXPECT_TRUE(agree_to_order(kr_infinite(i, T), kr_product(i, T), T)) << i;
  }
}

TEST(Kr, Kr5ReadingsDiffer) {
  for (int N = 0; N <= 5; ++N) EXPECT_EQ(kr_finite(5, N), kr_finite(5, N, Precision::exact(), Kr5Reading::Literal));
  EXPECT_NE(kr_finite(5, 6), kr_finite(5, 6, Precision::exact(), Kr5Reading::Literal));
  // both readings share the limit
  EXPECT_TRUE(agree_to_order(kr_finite(5, 30, Precision::up_to(25), Kr5Reading::Literal), kr_product(5, 25), 25));
}

TEST(Kr, FRecurrence) {
  for (int N = 1; N <= 18; ++N) {
    if (N % 3 == 0) continue;
    for (int M = -1; M <= 12; ++M) {
      EXPECT_EQ(f_sum(N, M), f_sum(N - 1, M) + f_sum(N - 2, M - 1).shift(N - 1)) << N << " " << M;
    }
  }
  for (int N = 0; N <= 15; ++N) EXPECT_EQ(kr_finite(1, N), f_sum(N + 1, floor_two_thirds(N) + 1));
}

TEST(Classical, RogersRamanujan) {
  EXPECT_EQ(bressoud_lhs(1), poly(0, {1, 1}));
  EXPECT_EQ(bressoud_rhs(1), poly(0, {1, 1}));
  for (int N = 0; N <= 15; ++N) {
    EXPECT_EQ(bressoud_lhs(N), bressoud_rhs(N)) << N;
    EXPECT_EQ(bressoud_reflected_lhs(N), bressoud_reflected_rhs(N)) << N;
    EXPECT_EQ(bressoud_reflected_lhs(N), reflect(bressoud_lhs(N), 0).shift(0)) << N;
  }
  EXPECT_TRUE(agree_to_order(rr_sum(80), rr_product(80), 80));
  EXPECT_TRUE(agree_to_order(rr_theta(80), rr_product(80), 80));
}

TEST(Classical, SchurAndAndrews) {
  for (int N = 0; N <= 20; ++N) EXPECT_EQ(schur_lhs(N), schur_rhs(N)) << N;
  for (int M = 0; M <= 12; ++M) {
    EXPECT_EQ(andrews_even_lhs(M), andrews_even_rhs(M)) << M;
    EXPECT_EQ(andrews_odd_lhs(M), andrews_odd_rhs(M)) << M;
    EXPECT_EQ(reflect(schur_lhs(2 * M), M * M), andrews_even_lhs(M));
    EXPECT_EQ(reflect(schur_lhs(2 * M + 1), M * M + M), andrews_odd_lhs(M));
  }
  EXPECT_TRUE(agree_to_order(rogers_even_sum(80), rogers_even_product(80), 80));
  EXPECT_TRUE(agree_to_order(rogers_odd_sum(80), rogers_odd_product(80), 80));
}

TEST(Classical, CapparelliFinite) {
  EXPECT_TRUE(agree_to_order(capparelli_analytic_sum(80), capparelli_analytic_product(80), 80));
  for (int N = 0; N <= 10; ++N) EXPECT_EQ(capparelli43_lhs(N), capparelli43_rhs(N)) << N;
  for (int M = 0; M <= 6; ++M) {
    EXPECT_EQ(capparelli_reflected_even_lhs(M), capparelli_reflected_even_rhs(M)) << M;
    EXPECT_EQ(capparelli_reflected_odd_lhs(M), capparelli_reflected_odd_rhs(M)) << M;
    EXPECT_EQ(reflect(capparelli43_lhs(2 * M), capparelli_reflection_exponent(2 * M)),
              capparelli_reflected_even_lhs(M));
    if (M >= 1) {
      EXPECT_EQ(reflect(capparelli43_lhs(2 * M - 1), capparelli_reflection_exponent(2 * M - 1)),
                capparelli_reflected_odd_lhs(M));
      EXPECT_NE(capparelli_reflected_odd_lhs(M), capparelli_reflected_odd_rhs_as_printed(M)) << M;
    }
  }
}

TEST(Classical, CapparelliLimits) {
  const int T = 60;
  auto pe = capparelli_reflected_even_limit_product(T), po = capparelli_reflected_odd_limit_product(T);
  EXPECT_TRUE(agree_to_order(capparelli_reflected_even_limit_sum(T), pe, T));
  EXPECT_TRUE(agree_to_order(capparelli_reflected_even_limit_series(T), pe, T));
  EXPECT_TRUE(agree_to_order(capparelli_reflected_odd_limit_sum(T), po, T));
  EXPECT_TRUE(agree_to_order(capparelli_reflected_odd_limit_series(T), po, T));
  // the finite reflected sums approach the a,b limit sums
  EXPECT_TRUE(agree_to_order(capparelli_reflected_even_lhs(8).truncate(20), pe, 20));
}

TEST(Classical, Capparelli71) {
  for (int N = 0; N <= 7; ++N) {
    for (int n = 0; 2 * n <= N; ++n) {
      for (int m = 0; m + 2 * n <= N; ++m) {
        // multiply back by the denominator
        auto p = capparelli_multinomial(N, m, n) * pochhammer_finite(1, 1, 1, m) * pochhammer_finite(1, 3, 3, n) *
                 pochhammer_finite(1, 3, 3, N - m - 2 * n);
        EXPECT_EQ(p, pochhammer_finite(1, 3, 3, N));
      }
    }
  }
  for (int N = 0; N <= 9; ++N) {
    EXPECT_EQ(capparelli71_lhs(N), capparelli71_rhs(N)) << N;
    EXPECT_EQ(capparelli71_reflected_lhs(N), capparelli71_reflected_rhs(N)) << N;
    EXPECT_EQ(reflect(capparelli71_lhs(N), N * (3 * N + 1)), capparelli71_reflected_lhs(N)) << N;
  }
  EXPECT_TRUE(agree_to_order(capparelli71_reflected_rhs(31, 60), capparelli71_limit_product(60), 60));
  EXPECT_TRUE(agree_to_order(capparelli71_reflected_rhs(12, 24), capparelli71_reflected_rhs(12).truncate(24), 24));
}

TEST(Classical, EqId) {
  for (int L = 0; L <= 20; ++L) EXPECT_TRUE(eqid(L).is_zero()) << L;
  int seen = 0;
  eqid_sweep(60, [&](int L, const LaurentSeries& s) {
    EXPECT_EQ(L, seen++);
    EXPECT_TRUE(s.is_zero()) << L;
  });
  EXPECT_EQ(seen, 61);
}

TEST(Classical, Bressoud79) {
  EXPECT_TRUE(agree_to_order(bressoud79_a_sum(80), bressoud79_a_product(80), 80));
  EXPECT_TRUE(agree_to_order(bressoud79_b_sum(80), bressoud79_b_product(80), 80));
}
