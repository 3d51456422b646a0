#ifndef QSERIES_PRECISION_HPP
#define QSERIES_PRECISION_HPP

#include <optional>

#include "qseries/laurent_series.hpp"

namespace qseries {

/// How far a builder has to compute: the whole polynomial, or every
/// coefficient up to a truncation order T.
class Precision {
 public:
  static Precision exact() { return Precision(); }
  static Precision up_to(int order) { return Precision(order); }

  bool is_exact() const { return !order_; }
  int order() const { return order_.value_or(kExactOrder); }

  // True if a term starting at q^exponent cannot affect the result.
  bool drops(int exponent) const { return order_ && exponent > *order_; }

  // Precision left for a factor that will be multiplied by q^exponent.
  Precision after_shift(int exponent) const {
    return order_ ? Precision(*order_ - exponent) : Precision();
  }

  LaurentSeries apply(const LaurentSeries& s) const { return order_ ? s.truncate(*order_) : s; }

  // The additive identity at this precision.
  LaurentSeries zero() const { return order_ ? LaurentSeries::zero_to(*order_) : LaurentSeries(); }

 private:
  Precision() = default;
  explicit Precision(int order) : order_(order) {}

  std::optional<int> order_;
};

}  // namespace qseries

#endif
