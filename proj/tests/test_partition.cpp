#include <gtest/gtest.h>

#include <map>

#include "qseries/errors.hpp"
#include "qseries/partition.hpp"
#include "test_util.hpp"

using namespace qseries;
using testutil::poly;

namespace {

Partition P(std::vector<int> v) { return Partition{std::move(v)}; }

// Independent check of the I4 conditions written against the definition.
bool i4_direct(const std::vector<int>& p, int N) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 1 || p[i] > N) return false;
    if (i + 1 < p.size() && p[i + 1] < p[i]) return false;
    if (i + 2 < p.size() && p[i + 2] - p[i] < 3) return false;
    if (i + 1 < p.size() && p[i + 1] - p[i] <= 1 && (p[i] + p[i + 1]) % 3 != 2) return false;
  }
  return true;
}

// All partitions of n into parts <= N (no conditions), by recursion.
void all_partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.emplace_back(cur.rbegin(), cur.rend());
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    all_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST(Partition, SpecExamples) {
  auto i4_3 = ConstraintProfile::i4(3);
  auto e = enumerate(5, i4_3);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], P({2, 3}));
  EXPECT_EQ(count(0, i4_3), 1);
  EXPECT_EQ(enumerate(0, ConstraintProfile{}).at(0), P({}));
  auto e4 = enumerate(4, ConstraintProfile::i4(10));
  ASSERT_EQ(e4.size(), 1u);
  EXPECT_EQ(e4[0], P({4}));
}

TEST(Partition, GeneratingPolynomialExamples) {
  EXPECT_EQ(generating_polynomial(ConstraintProfile::i4(3)), poly(0, {1, 0, 1, 1, 0, 1}));
  EXPECT_EQ(generating_polynomial(ConstraintProfile::i4(0)), LaurentSeries::one());
  EXPECT_EQ(generating_polynomial(ConstraintProfile::i4(2)), poly(0, {1, 0, 1}));
  EXPECT_THROW(generating_polynomial(ConstraintProfile::i4(std::nullopt)), DomainError);
  EXPECT_THROW(generating_polynomial(ConstraintProfile{}), DomainError);
  auto t = generating_polynomial(ConstraintProfile{}, 6);
  EXPECT_EQ(t, poly(0, {1, 1, 2, 3, 5, 7, 11}).truncate(6));
}

TEST(Partition, EnumerationMatchesFilteredBruteForce) {
  for (int N = 0; N <= 8; ++N) {
    auto profile = ConstraintProfile::i4(N);
    for (int n = 0; n <= 25; ++n) {
      std::vector<std::vector<int>> all;
      std::vector<int> cur;
      all_partitions(n, std::max(N, 1), cur, all);
      std::set<Partition> want;
      for (auto& p : all) {
        if (i4_direct(p, N)) want.insert(P(p));
      }
      auto got = enumerate(n, profile);
      EXPECT_EQ(std::set<Partition>(got.begin(), got.end()), want) << N << " " << n;
      EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST(Partition, CountByParts) {
  auto i4 = ConstraintProfile::i4(std::nullopt);
  EXPECT_EQ(count_by_parts(i4, 5, 2), 1);
  EXPECT_EQ(count_by_parts(ConstraintProfile{}, 0, 0), 1);
  EXPECT_EQ(count_by_parts(i4, 2, 1), 1);
  for (int n = 0; n <= 30; ++n) {
    long long s = 0;
    for (int j = 0; j <= n; ++j) s += count_by_parts(i4, n, j);
    EXPECT_EQ(s, count(n, i4));
  }
  auto b = generating_polynomial_by_parts(ConstraintProfile::i4(9));
  EXPECT_EQ(b.total(), generating_polynomial(ConstraintProfile::i4(9)));
  for (int j = 0; j <= b.x_degree(); ++j) {
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(b.slice(j).coefficient(n), static_cast<long>(count_by_parts(ConstraintProfile::i4(9), n, j)));
  }
}

TEST(Partition, ResidueProfile) {
  ConstraintProfile p;
  p.residues = ResidueFilter{9, {2, 3, 5, 8}};
  EXPECT_EQ(generating_polynomial(p, 5), poly(0, {1, 0, 1, 1, 1, 2}).truncate(5));
}

TEST(MinimalConfiguration, Examples) {
  EXPECT_EQ(minimal_configuration(1, 1), P({2, 3, 5}));
  EXPECT_EQ(minimal_configuration(1, 1).size(), 10);
  EXPECT_EQ(minimal_configuration(0, 0), P({}));
  EXPECT_EQ(minimal_configuration(2, 0), P({2, 4}));
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; m + n <= 4; ++n) {
      auto p = minimal_configuration(m, n);
      EXPECT_EQ(p.size(), m * m + 3 * m * n + 3 * n * n + m + 2 * n);
      EXPECT_TRUE(ConstraintProfile::i4(std::nullopt).admits(p));
      EXPECT_EQ(count_close_pairs(p), n);
      // smallest I4 partition with 2n+m parts and n close pairs
      for (int s = 0; s < p.size(); ++s) {
        for (const auto& q : enumerate(s, ConstraintProfile::i4(std::nullopt))) {
          if (q.length() == 2 * n + m && count_close_pairs(q) == n) ADD_FAILURE() << q.to_string();
        }
      }
    }
  }
}

TEST(Motions, Examples) {
  EXPECT_EQ(generate_by_motions(0, 1, 4), (std::set<Partition>{P({2, 3}), P({4, 4})}));
  EXPECT_EQ(generate_by_motions(1, 0, 4), (std::set<Partition>{P({2}), P({3}), P({4})}));
  EXPECT_EQ(generate_by_motions(0, 0, 7), (std::set<Partition>{P({})}));
}

TEST(Motions, ReproduceEnumerationUpToTen) {
  for (int N = 0; N <= 10; ++N) {
    auto profile = ConstraintProfile::i4(N);
    std::set<Partition> all;
    for (int n = 0; 3 * n <= N + 1; ++n) {
      for (int m = 0; 3 * n + 2 * m <= N + 1; ++m) {
        for (const auto& p : generate_by_motions(m, n, N)) {
          EXPECT_TRUE(profile.admits(p)) << p.to_string();
          EXPECT_EQ(p.length(), 2 * n + m);
          EXPECT_GE(p.size(), minimal_configuration(m, n).size());
          EXPECT_EQ(count_close_pairs(p), n);
          EXPECT_TRUE(all.insert(p).second) << "reached twice: " << p.to_string();
        }
      }
    }
    std::set<Partition> want;
    for (int s = 0; s <= 40; ++s) {
      for (auto& p : enumerate(s, profile)) want.insert(p);
    }
    std::set<Partition> all40;
    for (const auto& p : all) {
      if (p.size() <= 40) all40.insert(p);
    }
    EXPECT_EQ(all40, want) << "N=" << N;
  }
}
