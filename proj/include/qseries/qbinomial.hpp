#ifndef QSERIES_QBINOMIAL_HPP
#define QSERIES_QBINOMIAL_HPP

#include <array>
#include <vector>

#include "qseries/laurent_series.hpp"
#include "qseries/precision.hpp"

namespace qseries {

/// Gaussian binomial [N choose n] in the base q^step.  Zero unless 0 <= n <= N.
/// Exact values are memoized on (N, n); the memo is safe for concurrent use.
LaurentSeries qbinomial(int N, int n, int step = 1);
LaurentSeries qbinomial(int N, int n, int step, Precision precision);

/// As qbinomial, except that [-1 choose 0] is taken to be 1.
LaurentSeries qbinomial_star(int N, int n, int step = 1);
LaurentSeries qbinomial_star(int N, int n, int step, Precision precision);

/// 1/(q^step; q^step)_n known through `order`.
LaurentSeries inverse_qfactorial(int n, int step, int order);

/// a(q^e).
LaurentSeries substitute_power(const LaurentSeries& a, int e);

/// Rows of shifted-diagonal Gaussian binomials D_L[a] = [L - a choose a]_q,
/// produced one L at a time by D_L[a] = D_{L-2}[a-1] + q^a D_{L-1}[a].  The
/// three most recent rows stay available.
class DiagonalBinomials {
 public:
  // Computes and returns row L = last_row() + 1.
  const std::vector<LaurentSeries>& advance();
  int last_row() const { return last_; }
  // Row L for last_row() - 2 <= L <= last_row(); rows with L < 0 are empty.
  const std::vector<LaurentSeries>& row(int L) const;
  // Entry [L - a choose a]_q, zero outside the triangle.
  LaurentSeries entry(int L, int a) const;

 private:
  std::array<std::vector<LaurentSeries>, 3> rows_;
  int last_ = -1;
  static const std::vector<LaurentSeries> kEmpty;
};

}  // namespace qseries

#endif
