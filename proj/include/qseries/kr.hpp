#ifndef QSERIES_KR_HPP
#define QSERIES_KR_HPP

#include <vector>

#include "qseries/bivariate_series.hpp"
#include "qseries/laurent_series.hpp"
#include "qseries/pochhammer.hpp"
#include "qseries/precision.hpp"

namespace qseries {

// floor(2x/3), for any integer x
int floor_two_thirds(int x);

struct BinomialArgs {
  int top = 0;
  int bottom = 0;
  int step = 1;
  bool star = false;  // [-1 choose 0] read as 1

  bool vanishes() const;
  LaurentSeries evaluate(Precision precision) const;
};

/// One summand q^exponent x^x_weight [b1] [b2] of a finite KR sum.
struct KrTerm {
  int exponent = 0;
  int x_weight = 0;
  BinomialArgs b1;
  BinomialArgs b2;

  LaurentSeries evaluate(Precision precision) const;
};

// The second KR5 sub-sum: the top entry of its base-q^3 binomial as printed,
// or shifted down by 1 - delta so that the family has degree e(5, N).
enum class Kr5Reading { Corrected, Literal };

/// The nonvanishing summands of KR_i(q, N), i = 1..5.  The (1+q) factor of
/// KR5 is split into two terms.
std::vector<KrTerm> kr_terms(int i, int N, Kr5Reading reading = Kr5Reading::Corrected);

LaurentSeries kr_finite(int i, int N, Precision precision = Precision::exact(),
                        Kr5Reading reading = Kr5Reading::Corrected);
/// x marks the number of parts.
BivariateSeries kr_finite_x(int i, int N, Kr5Reading reading = Kr5Reading::Corrected);

/// The double sums with 1/((q;q)_m (q^3;q^3)_n), through q^order.
LaurentSeries kr_infinite(int i, int order);

ProductSpec kr_product_spec(int i);
LaurentSeries kr_product(int i, int order);

/// S_N from the three-branch recursion in N mod 3; S_0 = 1, S_N = 0 for N < 0.
LaurentSeries s_recursion(int N);

/// F(N, M) = sum q^{m^2+3mn+3n^2} [N-m-3n choose m] [M-m-n choose n]_{q^3}.
LaurentSeries f_sum(int N, int M);

}  // namespace qseries

#endif
