#include "qseries/laurent_series.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

int64_t window_top(const LaurentSeries& s) {
  return s.exact() ? std::numeric_limits<int64_t>::max() / 4 : s.valid_to();
}

int clamp_top(int64_t v) {
  return static_cast<int>(std::min<int64_t>(v, kExactOrder - 1));
}

}  // namespace

LaurentSeries LaurentSeries::monomial(int exponent, const Integer& coefficient) {
  LaurentSeries s;
  if (coefficient != 0) {
    s.low_ = exponent;
    s.coeffs_.push_back(coefficient);
  }
  return s;
}

LaurentSeries LaurentSeries::polynomial(int low, std::vector<Integer> coefficients) {
  LaurentSeries s;
  s.low_ = low;
  s.coeffs_ = std::move(coefficients);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::truncated(int low, std::vector<Integer> coefficients, int valid_to) {
  LaurentSeries s;
  s.exact_ = false;
  s.valid_to_ = valid_to;
  s.low_ = std::min(low, valid_to + 1);
  s.coeffs_ = std::move(coefficients);
  s.coeffs_.resize(static_cast<size_t>(valid_to + 1 - s.low_));
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::zero_to(int valid_to) { return truncated(valid_to + 1, {}, valid_to); }

int LaurentSeries::degree() const {
  if (!exact_) throw DomainError("degree of a truncated series");
  if (coeffs_.empty()) throw DomainError("degree of the zero polynomial");
  return high();
}

std::optional<int> LaurentSeries::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return low_ + static_cast<int>(i);
  }
  return std::nullopt;
}

Integer LaurentSeries::coefficient(int k) const {
  if (!exact_ && k > valid_to_) {
    throw std::out_of_range("coefficient of q^" + std::to_string(k) +
                            " requested outside the validity window (valid to q^" +
                            std::to_string(valid_to_) + ")");
  }
  if (k < low_ || k > high()) return 0;
  return coeffs_[static_cast<size_t>(k - low_)];
}

void LaurentSeries::normalize() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = exact_ ? 0 : valid_to_ + 1;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (exact_) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
}

LaurentSeries LaurentSeries::truncate(int order) const {
  LaurentSeries r;
  r.exact_ = false;
  r.valid_to_ = exact_ ? order : std::min(order, valid_to_);
  r.low_ = std::min(low_, r.valid_to_ + 1);
  r.coeffs_.resize(static_cast<size_t>(r.valid_to_ + 1 - r.low_));
  for (int k = std::max(r.low_, low_); k <= std::min(r.valid_to_, high()); ++k) {
    r.coeffs_[static_cast<size_t>(k - r.low_)] = coeffs_[static_cast<size_t>(k - low_)];
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::shift(int k) const {
  LaurentSeries r = *this;
  r.low_ += k;
  if (!exact_) r.valid_to_ += k;
  if (exact_ && r.coeffs_.empty()) r.low_ = 0;
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries& LaurentSeries::add_shifted(const LaurentSeries& other, int shift, const Integer& scale) {
  if (&other == this) return add_shifted(LaurentSeries(other), shift, scale);
  const bool result_exact = exact_ && other.exact_;
  const int64_t top = std::min(window_top(*this), window_top(other) + shift);
  if (other.coeffs_.empty() && result_exact) return *this;

  int64_t new_low;
  int64_t new_high;
  if (coeffs_.empty() && other.coeffs_.empty()) {
    new_low = top + 1;
    new_high = top;
  } else if (coeffs_.empty()) {
    new_low = static_cast<int64_t>(other.low_) + shift;
    new_high = static_cast<int64_t>(other.high()) + shift;
  } else if (other.coeffs_.empty()) {
    new_low = low_;
    new_high = high();
  } else {
    new_low = std::min<int64_t>(low_, static_cast<int64_t>(other.low_) + shift);
    new_high = std::max<int64_t>(high(), static_cast<int64_t>(other.high()) + shift);
  }
  if (!result_exact) {
    new_high = top;
    new_low = std::min(new_low, top + 1);
  }

  const int64_t size = std::max<int64_t>(0, new_high - new_low + 1);
  if (size == 0 || coeffs_.empty() || low_ > new_high) {
    coeffs_.assign(static_cast<size_t>(size), Integer(0));
  } else {
    // new_low <= low_ here; grow (or cut) the stored range in place
    if (high() > new_high) coeffs_.resize(static_cast<size_t>(new_high - low_ + 1));
    coeffs_.insert(coeffs_.begin(), static_cast<size_t>(low_ - new_low), Integer(0));
    coeffs_.resize(static_cast<size_t>(size));
  }
  for (size_t i = 0; i < other.coeffs_.size(); ++i) {
    const int64_t k = static_cast<int64_t>(other.low_) + shift + static_cast<int64_t>(i);
    if (k > new_high) break;
    if (other.coeffs_[i] == 0) continue;
    Integer& slot = coeffs_[static_cast<size_t>(k - new_low)];
    if (scale == 1) {
      slot += other.coeffs_[i];
    } else if (scale == -1) {
      slot -= other.coeffs_[i];
    } else {
      mpz_addmul(slot.get_mpz_t(), other.coeffs_[i].get_mpz_t(), scale.get_mpz_t());
    }
  }
  low_ = static_cast<int>(new_low);
  exact_ = result_exact;
  if (!exact_) valid_to_ = static_cast<int>(top);
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) { return add_shifted(other, 0, 1); }

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& other) { return add_shifted(other, 0, -1); }

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& other) {
  *this = *this * other;
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if ((a.exact_ && a.coeffs_.empty()) || (b.exact_ && b.coeffs_.empty())) return {};
  LaurentSeries r;
  r.exact_ = a.exact_ && b.exact_;
  const int64_t low = static_cast<int64_t>(a.low_) + b.low_;
  int64_t high;
  if (r.exact_) {
    high = static_cast<int64_t>(a.high()) + b.high();
  } else {
    high = std::min(window_top(a) + b.low_, window_top(b) + a.low_);
    r.valid_to_ = clamp_top(high);
  }
  r.low_ = static_cast<int>(std::min(low, high + 1));
  r.coeffs_.resize(static_cast<size_t>(std::max<int64_t>(0, high - r.low_ + 1)));
  const int64_t span = high - low;
  for (size_t i = 0; i < a.coeffs_.size() && static_cast<int64_t>(i) <= span; ++i) {
    if (a.coeffs_[i] == 0) continue;
    const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
    const size_t jmax = std::min<size_t>(b.coeffs_.size(), static_cast<size_t>(span - static_cast<int64_t>(i) + 1));
    Integer* out = r.coeffs_.data() + i;
    for (size_t j = 0; j < jmax; ++j) {
      mpz_addmul(out[j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
    }
  }
  r.normalize();
  return r;
}

LaurentSeries& LaurentSeries::mul_one_minus(int sign, int c) {
  if (c < 1) throw DomainError("mul_one_minus requires a positive exponent");
  if (coeffs_.empty()) return *this;
  if (exact_) coeffs_.resize(coeffs_.size() + static_cast<size_t>(c));
  for (size_t k = coeffs_.size(); k-- > static_cast<size_t>(c);) {
    if (sign > 0) {
      coeffs_[k] -= coeffs_[k - static_cast<size_t>(c)];
    } else {
      coeffs_[k] += coeffs_[k - static_cast<size_t>(c)];
    }
  }
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::div_one_minus(int sign, int c) {
  if (c < 1) throw DomainError("div_one_minus requires a positive exponent");
  if (coeffs_.empty()) return *this;
  for (size_t k = static_cast<size_t>(c); k < coeffs_.size(); ++k) {
    if (sign > 0) {
      coeffs_[k] += coeffs_[k - static_cast<size_t>(c)];
    } else {
      coeffs_[k] -= coeffs_[k - static_cast<size_t>(c)];
    }
  }
  if (exact_) {
    if (coeffs_.size() < static_cast<size_t>(c)) throw DomainError("inexact division by (1 - q^c)");
    for (size_t k = coeffs_.size() - static_cast<size_t>(c); k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) throw DomainError("inexact division by (1 - q^c)");
    }
    coeffs_.resize(coeffs_.size() - static_cast<size_t>(c));
  }
  normalize();
  return *this;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.exact_ != b.exact_) return false;
  if (!a.exact_ && a.valid_to_ != b.valid_to_) return false;
  return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const int k = low_ + static_cast<int>(i);
    const bool negative = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << "q";
    if (k != 1) os << "^" << k;
  }
  if (first) os << "0";
  if (!exact_) os << " + O(q^" << (valid_to_ + 1) << ")";
  return os.str();
}

LaurentSeries monomial(int exponent, const Integer& coefficient) {
  return LaurentSeries::monomial(exponent, coefficient);
}

LaurentSeries negate(const LaurentSeries& a) { return -a; }

LaurentSeries invert(const LaurentSeries& a, int order) {
  const auto val = a.valuation();
  if (!val) throw DomainError("cannot invert the zero series");
  const Integer& lead = a.coefficient(*val);
  if (lead != 1 && lead != -1) {
    throw DomainError("invert requires a unit leading coefficient, got " + lead.get_str());
  }
  const int shift = *val;
  int top = order;
  if (!a.exact()) top = std::min<int64_t>(order, static_cast<int64_t>(a.valid_to()) - 2 * static_cast<int64_t>(shift));
  const int n = top + shift;  // number of terms beyond the constant, relative to q^{-shift}
  if (n < 0) return LaurentSeries::zero_to(top);

  const auto coeffs = a.coefficients();
  const size_t offset = static_cast<size_t>(shift - a.low());
  auto u = [&](int j) -> const Integer* {
    const size_t idx = offset + static_cast<size_t>(j);
    return idx < coeffs.size() ? &coeffs[idx] : nullptr;
  };
  std::vector<Integer> b(static_cast<size_t>(n + 1));
  b[0] = lead;
  Integer acc;
  for (int k = 1; k <= n; ++k) {
    acc = 0;
    for (int j = 1; j <= k; ++j) {
      const Integer* uj = u(j);
      if (!uj) break;
      if (*uj == 0) continue;
      mpz_addmul(acc.get_mpz_t(), uj->get_mpz_t(), b[static_cast<size_t>(k - j)].get_mpz_t());
    }
    b[static_cast<size_t>(k)] = lead > 0 ? Integer(-acc) : acc;
  }
  return LaurentSeries::truncated(-shift, std::move(b), top);
}

LaurentSeries reflect(const LaurentSeries& p, int e) {
  if (!p.exact()) throw DomainError("reflection q -> 1/q of a truncated series is undefined");
  if (p.is_zero()) return {};
  const auto c = p.coefficients();
  std::vector<Integer> out(c.rbegin(), c.rend());
  return LaurentSeries::polynomial(e - p.high(), std::move(out));
}

std::optional<int> first_discrepancy(const LaurentSeries& a, const LaurentSeries& b, int order) {
  if (a.valid_to() < order || b.valid_to() < order) {
    throw std::out_of_range("comparison to q^" + std::to_string(order) +
                            " exceeds a validity window (valid to q^" +
                            std::to_string(std::min(a.valid_to(), b.valid_to())) + ")");
  }
  int start = std::min(a.is_zero() ? order + 1 : a.low(), b.is_zero() ? order + 1 : b.low());
  for (int k = start; k <= order; ++k) {
    if (a.coefficient(k) != b.coefficient(k)) return k;
  }
  return std::nullopt;
}

bool agree_to_order(const LaurentSeries& a, const LaurentSeries& b, int order) {
  return !first_discrepancy(a, b, order).has_value();
}

std::optional<int> first_difference_exact(const LaurentSeries& a, const LaurentSeries& b) {
  if (!a.exact() || !b.exact()) throw DomainError("exact comparison of truncated series");
  if (a == b) return std::nullopt;
  const LaurentSeries d = a - b;
  return d.valuation();
}

Integer evaluate_at_one(const LaurentSeries& p) {
  if (!p.exact()) throw DomainError("evaluation of a truncated series");
  Integer s = 0;
  for (const auto& c : p.coefficients()) s += c;
  return s;
}

}  // namespace qseries
