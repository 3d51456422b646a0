#include "qseries/theta.hpp"

#include <algorithm>
#include <vector>

#include "qseries/errors.hpp"

namespace qseries {

LaurentSeries alternating_theta(int a, int b, int order) {
  if (a <= 0) throw DomainError("alternating_theta needs a positive quadratic coefficient");
  if ((a + b) % 2 != 0) throw DomainError("alternating_theta exponents (a k^2 + b k)/2 are not integral");
  auto exponent = [&](long long k) { return (a * k * k + b * k) / 2; };

  // Smallest exponent of the quadratic; nothing at or below it for order < it.
  long long k0 = 0;
  long long low = exponent(0);
  {
    // the vertex is at k = -b/(2a); check the integers around it
    long long kv = -b / (2LL * a);
    for (long long k = kv - 1; k <= kv + 1; ++k) {
      if (exponent(k) < low) {
        low = exponent(k);
        k0 = k;
      }
    }
  }
  const int base = static_cast<int>(std::min<long long>(low, 0));
  if (order < base) return LaurentSeries::zero_to(order);
  std::vector<Integer> c(static_cast<size_t>(order - base + 1));

  auto add = [&](long long k) {
    const long long e = exponent(k);
    if (e > order) return false;
    c[static_cast<size_t>(e - base)] += (k % 2 == 0) ? 1 : -1;
    return true;
  };
  // Walk outward from the vertex; the exponent is monotone on each side.
  if (add(k0)) {
    for (long long k = k0 + 1; add(k); ++k) {
    }
    for (long long k = k0 - 1; add(k); --k) {
    }
  }
  return LaurentSeries::truncated(base, std::move(c), order);
}

}  // namespace qseries
