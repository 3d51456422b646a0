#ifndef QSERIES_BIVARIATE_SERIES_HPP
#define QSERIES_BIVARIATE_SERIES_HPP

#include <vector>

#include "qseries/laurent_series.hpp"

namespace qseries {

// Polynomial in x with LaurentSeries coefficients; slice j is the
// coefficient of x^j.  Used for the number-of-parts refinement.
class BivariateSeries {
 public:
  BivariateSeries() = default;

  int x_degree() const { return static_cast<int>(slices_.size()) - 1; }
  // The coefficient of x^j (zero beyond the stored degree).
  LaurentSeries slice(int j) const;
  // Setting x = 1.
  LaurentSeries total() const;

  // this += x^j * term
  void add_term(int j, const LaurentSeries& term);

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  std::vector<LaurentSeries> slices_;
};

}  // namespace qseries

#endif
