#include <gtest/gtest.h>

#include <map>
#include <thread>

#include "qseries/laurent_series.hpp"
#include "qseries/qbinomial.hpp"

#include "test_util.hpp"

using namespace qseries;
using testutil::poly;

namespace {

// Independent oracle: Pascal recurrence on plain coefficient vectors.
std::vector<Integer> pascal(int N, int n) {
  static std::map<std::pair<int, int>, std::vector<Integer>> memo;
  if (n < 0 || n > N) return {};
  if (n == 0 || n == N) return {1};
  auto key = std::make_pair(N, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  auto a = pascal(N - 1, n - 1), b = pascal(N - 1, n);
  std::vector<Integer> r(std::max(a.size(), b.size() + n));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i + n] += b[i];
  memo[key] = r;
  return r;
}

Integer binom(int n, int k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

}  // namespace

TEST(QBinomial, Examples) {
  EXPECT_EQ(qbinomial(4, 2, 1), poly(0, {1, 1, 2, 1, 1}));
  EXPECT_TRUE(qbinomial(-1, 0, 1).is_zero());
  for (int N = 0; N < 10; ++N) EXPECT_EQ(qbinomial(N, 0, 3), LaurentSeries::one());
  EXPECT_TRUE(qbinomial(3, 4).is_zero());
  EXPECT_TRUE(qbinomial(3, -1).is_zero());
}

TEST(QBinomial, StarConvention) {
  EXPECT_EQ(qbinomial_star(-1, 0, 1), LaurentSeries::one());
  EXPECT_TRUE(qbinomial_star(-2, 0, 1).is_zero());
  EXPECT_EQ(qbinomial_star(4, 2, 1), qbinomial(4, 2, 1));
}

TEST(QBinomial, AgreesWithPascalOracle) {
  for (int N = 0; N <= 30; ++N) {
    for (int n = 0; n <= N; ++n) {
      EXPECT_EQ(qbinomial(N, n), LaurentSeries::polynomial(0, pascal(N, n))) << N << " " << n;
    }
  }
}

TEST(QBinomial, PascalConsistency) {
  for (int N = 1; N <= 30; ++N) {
    for (int n = 1; n <= N; ++n) {
      EXPECT_EQ(qbinomial(N, n), qbinomial(N - 1, n - 1) + qbinomial(N - 1, n).shift(n));
    }
  }
}

TEST(QBinomial, PalindromicPositiveAndBinomialAtOne) {
  for (int N = 0; N <= 30; ++N) {
    for (int n = 0; n <= N; ++n) {
      auto b = qbinomial(N, n);
      EXPECT_EQ(b.degree(), n * (N - n));
      EXPECT_EQ(reflect(b, n * (N - n)), b);
      for (const auto& c : b.coefficients()) EXPECT_GE(c, 0);
      EXPECT_EQ(evaluate_at_one(b), binom(N, n));
    }
  }
}

TEST(QBinomial, StepMatchesSubstitution) {
  EXPECT_EQ(substitute_power(poly(0, {1, 1}), 3), poly(0, {1, 0, 0, 1}));
  EXPECT_EQ(substitute_power(qbinomial(2, 1, 1), 3), qbinomial(2, 1, 3));
  EXPECT_TRUE(substitute_power(LaurentSeries(), 5).is_zero());
  for (int N = 0; N <= 12; ++N) {
    for (int n = 0; n <= N; ++n) {
      EXPECT_EQ(qbinomial(N, n, 3), substitute_power(qbinomial(N, n), 3));
    }
  }
}

TEST(QBinomial, SubstituteScalesWindow) {
  auto t = poly(0, {1, 1}).truncate(4);
  auto s = substitute_power(t, 3);
  EXPECT_EQ(s.valid_to(), 14);
  EXPECT_EQ(s.coefficient(3), 1);
  EXPECT_EQ(s.coefficient(14), 0);
}

TEST(QBinomial, TruncatedMatchesExact) {
  for (int N = 0; N <= 25; ++N) {
    for (int n = 0; n <= N; ++n) {
      for (int step : {1, 3}) {
        for (int T : {0, 7, 40}) {
          auto t = qbinomial(N, n, step, Precision::up_to(T));
          EXPECT_TRUE(agree_to_order(t, qbinomial(N, n, step).truncate(T), T)) << N << n << step << T;
          EXPECT_GE(t.valid_to(), T);
        }
      }
    }
  }
}

TEST(QBinomial, InverseFactorial) {
  for (int n = 0; n <= 10; ++n) {
    auto f = LaurentSeries::one();
    for (int j = 1; j <= n; ++j) f.mul_one_minus(1, 3 * j);
    EXPECT_TRUE(agree_to_order(f * inverse_qfactorial(n, 3, 50), LaurentSeries::one(), 50));
  }
}

TEST(QBinomial, ConcurrentMemoReadsAreConsistent) {
  std::vector<std::thread> threads;
  std::vector<int> ok(4, 1);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([t, &ok] {
      for (int N = 40 + t; N < 60; ++N) {
        for (int n = 0; n <= N; ++n) {
          if (evaluate_at_one(qbinomial(N, n)) != binom(N, n)) ok[t] = 0;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) EXPECT_EQ(v, 1);
}

TEST(DiagonalBinomials, RowsMatchDirectBinomials) {
  DiagonalBinomials d;
  for (int L = 0; L <= 40; ++L) {
    const auto& row = d.advance();
    EXPECT_EQ(d.last_row(), L);
    for (int a = 0; a <= L / 2; ++a) EXPECT_EQ(row[a], qbinomial(L - a, a)) << L << " " << a;
    EXPECT_TRUE(d.entry(L, L).is_zero() || L == 0);
    if (L >= 2) EXPECT_EQ(d.entry(L - 2, 1), qbinomial(L - 3, 1));
  }
}
