#ifndef QSERIES_LAURENT_SERIES_HPP
#define QSERIES_LAURENT_SERIES_HPP

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qseries {

using Integer = mpz_class;

// Sentinel returned by valid_to() for exact (fully known) values.
inline constexpr int kExactOrder = std::numeric_limits<int>::max();

/// Truncated formal Laurent series in q with arbitrary-precision integer
/// coefficients.
///
/// Coefficients are stored densely for the exponents low()..high().  A
/// truncated series is known for every exponent <= valid_to() == high();
/// everything below low() is zero.  An exact series is a Laurent polynomial,
/// all of whose coefficients outside the stored range are zero.
///
/// Exact values are kept trimmed at both ends; truncated values are trimmed
/// at the low end only.  The exact zero has low() == 0 and no coefficients.
class LaurentSeries {
 public:
  LaurentSeries() = default;

  static LaurentSeries monomial(int exponent, const Integer& coefficient = 1);
  static LaurentSeries polynomial(int low, std::vector<Integer> coefficients);
  static LaurentSeries truncated(int low, std::vector<Integer> coefficients, int valid_to);
  // The zero series known through `valid_to`.
  static LaurentSeries zero_to(int valid_to);
  static LaurentSeries one() { return monomial(0, 1); }

  bool exact() const { return exact_; }
  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  int valid_to() const { return exact_ ? kExactOrder : valid_to_; }
  // Degree of an exact nonzero value.
  int degree() const;
  // Exponent of the lowest nonzero coefficient, if any is stored.
  std::optional<int> valuation() const;

  std::span<const Integer> coefficients() const { return coeffs_; }

  // Throws std::out_of_range for exponents above the validity window.
  Integer coefficient(int k) const;

  // Keeps exponents <= order.  Always yields a non-exact series.
  LaurentSeries truncate(int order) const;
  // Multiplication by q^k.
  LaurentSeries shift(int k) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& other);
  LaurentSeries& operator-=(const LaurentSeries& other);
  LaurentSeries& operator*=(const LaurentSeries& other);
  LaurentSeries& operator*=(const Integer& scalar);

  // this += scale * q^shift * other, without building the intermediate.
  LaurentSeries& add_shifted(const LaurentSeries& other, int shift, const Integer& scale = 1);
  // Multiplies in place by (1 - sign*q^c), c >= 1.
  LaurentSeries& mul_one_minus(int sign, int c);
  // Divides in place by (1 - sign*q^c), c >= 1.  For a truncated value this
  // is multiplication by the geometric series; for an exact value the
  // division must be exact (checked).
  LaurentSeries& div_one_minus(int sign, int c);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(LaurentSeries a, const Integer& s) { return a *= s; }

  // Structural equality: same exactness, window and coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Integer> coeffs_;
  int valid_to_ = -1;  // meaningful only when !exact_
  bool exact_ = true;
};

LaurentSeries monomial(int exponent, const Integer& coefficient = 1);
LaurentSeries negate(const LaurentSeries& a);

/// Reciprocal of a series whose lowest nonzero coefficient is +1 or -1,
/// known through `order` (or less, if the input window is shorter).
LaurentSeries invert(const LaurentSeries& a, int order);

/// q^e * p(1/q) for an exact Laurent polynomial p.
LaurentSeries reflect(const LaurentSeries& p, int e);

/// Smallest exponent <= order at which a and b differ, or nullopt.
/// Both windows must reach `order` (std::out_of_range otherwise).
std::optional<int> first_discrepancy(const LaurentSeries& a, const LaurentSeries& b, int order);
bool agree_to_order(const LaurentSeries& a, const LaurentSeries& b, int order);

/// Smallest exponent at which two exact values differ.
std::optional<int> first_difference_exact(const LaurentSeries& a, const LaurentSeries& b);

/// Sum of all coefficients (evaluation at q = 1) of an exact value.
Integer evaluate_at_one(const LaurentSeries& p);

}  // namespace qseries

#endif
