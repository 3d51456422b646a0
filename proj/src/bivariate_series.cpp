#include "qseries/bivariate_series.hpp"

#include <stdexcept>

namespace qseries {

LaurentSeries BivariateSeries::slice(int j) const {
  if (j < 0) throw std::out_of_range("negative x-degree");
  if (j >= static_cast<int>(slices_.size())) return {};
  return slices_[static_cast<size_t>(j)];
}

LaurentSeries BivariateSeries::total() const {
  LaurentSeries sum;
  for (const auto& s : slices_) sum += s;
  return sum;
}

void BivariateSeries::add_term(int j, const LaurentSeries& term) {
  if (j < 0) throw std::out_of_range("negative x-degree");
  if (j >= static_cast<int>(slices_.size())) slices_.resize(static_cast<size_t>(j) + 1);
  slices_[static_cast<size_t>(j)] += term;
  while (!slices_.empty() && slices_.back().exact() && slices_.back().is_zero()) slices_.pop_back();
}

}  // namespace qseries
