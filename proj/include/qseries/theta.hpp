#ifndef QSERIES_THETA_HPP
#define QSERIES_THETA_HPP

#include "qseries/laurent_series.hpp"

namespace qseries {

/// sum over all integers k of (-1)^k q^{(a k^2 + b k)/2}, through q^order.
/// Needs a > 0 and a + b even (so every exponent is an integer).
LaurentSeries alternating_theta(int a, int b, int order);

}  // namespace qseries

#endif
