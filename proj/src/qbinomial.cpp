#include "qseries/qbinomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

// Product formula: after step j the running value is [N - k + j choose j],
// so every division by (1 - q^j) is exact.
LaurentSeries qbinomial_exact_base(int N, int k) {
  LaurentSeries p = LaurentSeries::one();
  for (int j = 1; j <= k; ++j) {
    p.mul_one_minus(1, N - k + j);
    p.div_one_minus(1, j);
  }
  return p;
}

class ExactBinomialMemo {
 public:
  LaurentSeries get(int N, int k) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find({N, k});
      if (it != table_.end()) return it->second;
    }
    LaurentSeries value = qbinomial_exact_base(N, k);
    std::unique_lock lock(mutex_);
    return table_.try_emplace({N, k}, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, LaurentSeries> table_;
};

ExactBinomialMemo& exact_memo() {
  static ExactBinomialMemo memo;
  return memo;
}

// 1/(q;q)_m for m = 0..rows, all known through a common order.
class InverseFactorialTable {
 public:
  LaurentSeries get(int m, int order) {
    {
      std::shared_lock lock(mutex_);
      if (order <= order_ && m < static_cast<int>(table_.size())) return table_[static_cast<size_t>(m)].truncate(order);
    }
    std::unique_lock lock(mutex_);
    if (order > order_) {
      order_ = std::max(order, 2 * std::max(order_, 16));
      table_.clear();
    }
    if (table_.empty()) table_.push_back(LaurentSeries::one().truncate(order_));
    while (static_cast<int>(table_.size()) <= m) {
      LaurentSeries next = table_.back();
      next.div_one_minus(1, static_cast<int>(table_.size()));
      table_.push_back(std::move(next));
    }
    return table_[static_cast<size_t>(m)].truncate(order);
  }

 private:
  std::shared_mutex mutex_;
  std::vector<LaurentSeries> table_;
  int order_ = -1;
};

InverseFactorialTable& inverse_table() {
  static InverseFactorialTable table;
  return table;
}

LaurentSeries qbinomial_truncated_base(int N, int n, int order) {
  if (order < 0) return LaurentSeries::zero_to(order);
  const int k = std::min(n, N - n);
  // 1/(1 - q^j) is 1 modulo q^{order+1} once j > order.
  LaurentSeries p = inverse_table().get(std::min(k, order), order);
  for (int j = 1; j <= k && N - k + j <= order; ++j) p.mul_one_minus(1, N - k + j);
  return p;
}

}  // namespace

LaurentSeries substitute_power(const LaurentSeries& a, int e) {
  if (e < 1) throw DomainError("substitute_power requires a positive exponent");
  if (a.is_zero()) return a.exact() ? LaurentSeries() : LaurentSeries::zero_to(e * (a.valid_to() + 1) - 1);
  const auto c = a.coefficients();
  std::vector<Integer> out(static_cast<size_t>(e) * (c.size() - 1) + 1);
  for (size_t i = 0; i < c.size(); ++i) out[i * static_cast<size_t>(e)] = c[i];
  if (a.exact()) return LaurentSeries::polynomial(e * a.low(), std::move(out));
  return LaurentSeries::truncated(e * a.low(), std::move(out), e * (a.valid_to() + 1) - 1);
}

LaurentSeries qbinomial(int N, int n, int step) {
  if (step < 1) throw DomainError("q-binomial step must be positive");
  if (n < 0 || n > N) return {};
  const int k = std::min(n, N - n);
  if (k == 0) return LaurentSeries::one();
  LaurentSeries base = exact_memo().get(N, k);
  return step == 1 ? base : substitute_power(base, step);
}

LaurentSeries qbinomial(int N, int n, int step, Precision precision) {
  if (precision.is_exact()) return qbinomial(N, n, step);
  if (step < 1) throw DomainError("q-binomial step must be positive");
  const int order = precision.order();
  if (n < 0 || n > N) return LaurentSeries::zero_to(order);
  if (order < 0) return LaurentSeries::zero_to(order);
  LaurentSeries base = qbinomial_truncated_base(N, n, order / step);
  return step == 1 ? base : substitute_power(base, step).truncate(order);
}

LaurentSeries qbinomial_star(int N, int n, int step) {
  if (N == -1 && n == 0) return LaurentSeries::one();
  return qbinomial(N, n, step);
}

LaurentSeries qbinomial_star(int N, int n, int step, Precision precision) {
  if (N == -1 && n == 0) return precision.apply(LaurentSeries::one());
  return qbinomial(N, n, step, precision);
}

LaurentSeries inverse_qfactorial(int n, int step, int order) {
  if (n < 0) throw DomainError("negative q-factorial index");
  if (step < 1) throw DomainError("q-factorial step must be positive");
  if (order < 0) return LaurentSeries::zero_to(order);
  const int base_order = order / step;
  LaurentSeries base = inverse_table().get(std::min(n, base_order), base_order);
  return step == 1 ? base : substitute_power(base, step).truncate(order);
}

const std::vector<LaurentSeries> DiagonalBinomials::kEmpty;

const std::vector<LaurentSeries>& DiagonalBinomials::advance() {
  const int L = last_ + 1;
  const std::vector<LaurentSeries>& prev1 = row(L - 1);
  const std::vector<LaurentSeries>& prev2 = row(L - 2);
  std::vector<LaurentSeries> next(static_cast<size_t>(L / 2 + 1));
  next[0] = LaurentSeries::one();
  for (int a = 1; a <= L / 2; ++a) {
    LaurentSeries value = a - 1 < static_cast<int>(prev2.size()) ? prev2[static_cast<size_t>(a - 1)] : LaurentSeries();
    if (a < static_cast<int>(prev1.size())) value.add_shifted(prev1[static_cast<size_t>(a)], a);
    next[static_cast<size_t>(a)] = std::move(value);
  }
  rows_[static_cast<size_t>(L % 3)] = std::move(next);
  last_ = L;
  return rows_[static_cast<size_t>(L % 3)];
}

const std::vector<LaurentSeries>& DiagonalBinomials::row(int L) const {
  if (L < 0) return kEmpty;
  if (L > last_ || L < last_ - 2) throw std::out_of_range("diagonal binomial row not retained");
  return rows_[static_cast<size_t>(L % 3)];
}

LaurentSeries DiagonalBinomials::entry(int L, int a) const {
  if (L < 0 || a < 0) return {};
  const auto& r = row(L);
  return a < static_cast<int>(r.size()) ? r[static_cast<size_t>(a)] : LaurentSeries();
}

}  // namespace qseries
