#ifndef QSERIES_CLASSICAL_HPP
#define QSERIES_CLASSICAL_HPP

#include <functional>

#include "qseries/laurent_series.hpp"

namespace qseries {

// Rogers-Ramanujan: finite version, its reflection, and the limit.
LaurentSeries bressoud_lhs(int N);
LaurentSeries bressoud_rhs(int N);
// Both sides carry the q^{-N^2} normalization.
LaurentSeries bressoud_reflected_lhs(int N);
LaurentSeries bressoud_reflected_rhs(int N);
LaurentSeries rr_sum(int order);
LaurentSeries rr_product(int order);
// (1/(q;q)) sum_k (-1)^k q^{k(5k+1)/2}
LaurentSeries rr_theta(int order);

LaurentSeries schur_lhs(int N);
LaurentSeries schur_rhs(int N);
LaurentSeries andrews_even_lhs(int M);
LaurentSeries andrews_even_rhs(int M);
LaurentSeries andrews_odd_lhs(int M);
LaurentSeries andrews_odd_rhs(int M);
LaurentSeries rogers_even_sum(int order);
LaurentSeries rogers_even_product(int order);
LaurentSeries rogers_odd_sum(int order);
LaurentSeries rogers_odd_product(int order);

// Capparelli
LaurentSeries capparelli_analytic_sum(int order);
LaurentSeries capparelli_analytic_product(int order);
LaurentSeries capparelli43_lhs(int N);
LaurentSeries capparelli43_rhs(int N);
// The reflected forms without their common q^{-6M^2} (even) normalization.
LaurentSeries capparelli_reflected_even_lhs(int M);
LaurentSeries capparelli_reflected_even_rhs(int M);
LaurentSeries capparelli_reflected_odd_lhs(int M);
// sum_c q^{3c} [2M-1 choose 2c+1]_{q^3} (-q^2,-q^4;q^6)_{M-1-c}
LaurentSeries capparelli_reflected_odd_rhs(int M);
// The right side as printed: [2M choose 2c+1]_{q^3} (-q^2,-q^4;q^6)_{M-c}.
LaurentSeries capparelli_reflected_odd_rhs_as_printed(int M);
// Exponent e with q^e * capparelli43_lhs(N)(1/q) equal to the reflected lhs.
int capparelli_reflection_exponent(int N);
LaurentSeries capparelli_reflected_even_limit_sum(int order);
LaurentSeries capparelli_reflected_even_limit_series(int order);
LaurentSeries capparelli_reflected_even_limit_product(int order);
LaurentSeries capparelli_reflected_odd_limit_sum(int order);
LaurentSeries capparelli_reflected_odd_limit_series(int order);
LaurentSeries capparelli_reflected_odd_limit_product(int order);

// (q^3;q^3)_N / ((q;q)_m (q^3;q^3)_n (q^3;q^3)_{N-m-2n}); zero if N-m-2n < 0.
LaurentSeries capparelli_multinomial(int N, int m, int n);
LaurentSeries capparelli71_lhs(int N);
LaurentSeries capparelli71_rhs(int N);
LaurentSeries capparelli71_reflected_lhs(int N);
LaurentSeries capparelli71_reflected_rhs(int N);
// The reflected right side at N, through q^order.
LaurentSeries capparelli71_reflected_rhs(int N, int order);
LaurentSeries capparelli71_limit_product(int order);

/// sum_{a=0}^{L+1} q^{a(a-L)} ([L-a-1 choose a] + [L-a choose a] - [L-a+1 choose a])
LaurentSeries eqid(int L);
/// eqid(L) for L = 0..max_L in one pass over diagonal binomial rows.
void eqid_sweep(int max_L, const std::function<void(int, const LaurentSeries&)>& visit);

LaurentSeries bressoud79_a_sum(int order);
LaurentSeries bressoud79_a_product(int order);
LaurentSeries bressoud79_b_sum(int order);
LaurentSeries bressoud79_b_product(int order);

}  // namespace qseries

#endif
