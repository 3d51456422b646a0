#ifndef QSERIES_REFLECT_HPP
#define QSERIES_REFLECT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qseries/bracket.hpp"
#include "qseries/kr.hpp"
#include "qseries/laurent_series.hpp"
#include "qseries/pochhammer.hpp"
#include "qseries/precision.hpp"

namespace qseries {

/// e(i, N) with RK_i(q, N) = q^e KR_i(1/q, N).
int normalization_exponent(int i, int N);

/// The reflected polynomial q^{e(i,N)} KR_i(1/q, N).  A truncated precision
/// reflects the summands one at a time (each binomial is palindromic) and
/// skips those starting above the order.
LaurentSeries rk_finite(int i, int N, Precision precision = Precision::exact());

/// One double sum over a, b >= 0 of
///   (1+q)^{one_plus_q} q^{a^2-3ab+3b^2 + la*a + lb*b + c} [3b-a+s choose a] W_b
/// with W_b = 1/(q^3;q^3)_b in the limit and [M+a-b+t choose b]_{q^3} at finite M.
struct AbSum {
  bool one_plus_q = false;
  int la = 0;
  int lb = 0;
  int c = 0;
  int s = 0;
  std::optional<int> t;  // finite form known only for some families
};

/// The a,b form of RK_i(q, 3M+l): a sum of AbSum pieces, plus 1 if `plus_one`.
struct AbForm {
  int i = 0;
  int l = 0;
  bool plus_one = false;
  std::vector<AbSum> pieces;

  bool has_finite_form() const;
  LaurentSeries limit(int order) const;
  LaurentSeries finite(int M) const;
};

AbForm ab_form(int i, int l);

struct StabilizeOptions {
  int max_m = 512;
};

struct StabilizedSeries {
  LaurentSeries series;  // known through the requested order
  int m = 0;             // family index at which stabilization was accepted
};

/// Family member at index M, computed through the given order.
using SeriesFamily = std::function<LaurentSeries(int M, int order)>;

/// Starting from M = max(start, ceil(sqrt(order))), accepts M once f(M),
/// f(M+1) and f(M+2) agree through q^order; otherwise doubles M.  Past
/// options.max_m throws NonConvergenceError.
StabilizedSeries stabilized_limit(const SeriesFamily& family, int order, const StabilizeOptions& options = {},
                                  int start = 0);

/// lim_M RK_i(q, 3M+l), cached per (i, l, order, max_m).
StabilizedSeries rk_limit(int i, int l, int order, const StabilizeOptions& options = {});

/// The mod-45 product for RK_4 (l = 0, 1) and RK_5 (l = 1, 2).
ProductSpec rk_product_spec(int i, int l);

struct BracketTerm {
  int sign = 1;
  int shift = 0;
  BracketSpec bracket;
};
using BracketCombination = std::vector<BracketTerm>;

/// The two displayed bracket combinations (form 0 or 1) for RK_i(q, 3inf+l),
/// i = 1..3, l = 0, 2.
BracketCombination rk_bracket_form(int i, int l, int form);
std::string to_string(const BracketCombination& c);

/// sum of sign * q^shift * <bracket> * multiplier, through q^order.
LaurentSeries expand_combination(const BracketCombination& c, int order, const ProductSpec& multiplier = {});

/// First exponent <= order with a negative coefficient in series * multiplier.
std::optional<int> positivity_scan(const LaurentSeries& series, const ProductSpec& multiplier, int order);

struct PositivityCase {
  std::string name;
  // q^{shift} * combination, summed
  std::vector<std::pair<int, BracketCombination>> parts;
};

/// Every bracket combination for RK_1..RK_3: both forms at l = 0, 2, and the
/// l = 1 combinations obtained from the linear relations.
std::vector<PositivityCase> positivity_cases();
LaurentSeries expand_case(const PositivityCase& c, int order, const ProductSpec& multiplier = {});
// (q^3;q^3)_inf / (q^45;q^45)_inf
ProductSpec positivity_multiplier();

}  // namespace qseries

#endif
