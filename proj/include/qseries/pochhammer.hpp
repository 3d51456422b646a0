#ifndef QSERIES_POCHHAMMER_HPP
#define QSERIES_POCHHAMMER_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/laurent_series.hpp"
#include "qseries/precision.hpp"

namespace qseries {

/// (1 - sign*q^c)(1 - sign*q^{c+m})...(1 - sign*q^{c+(n-1)m}), i.e.
/// (sign*q^c; q^m)_n.  sign is +1 or -1.
LaurentSeries pochhammer_finite(int sign, int c, int m, int n);
LaurentSeries pochhammer_finite(int sign, int c, int m, int n, Precision precision);

/// (sign*q^c; q^m)_infinity through q^order; requires c >= 1.
LaurentSeries pochhammer_infinite(int sign, int c, int m, int order);

enum class Placement { Numerator, Denominator };

struct PochhammerFactor {
  Placement placement = Placement::Denominator;
  int modulus = 1;
  int sign = 1;
  int offset = 1;
  int multiplicity = 1;

  auto operator<=>(const PochhammerFactor&) const = default;
};

/// Symbolic product of infinite q-Pochhammer symbols.  Kept canonical:
/// factors sorted, repeated factors merged into one entry with a
/// multiplicity, and factors common to numerator and denominator cancelled.
///
/// Text form: numerator groups, then '/' and denominator groups, e.g.
///   1/(q^2,q^3,q^5,q^8;q^9)
///   (q^45;q^45)/(q^3;q^3)(q,q^44;q^45)
///   (-q^2,-q^4;q^6)(-q^3;q^3)
/// A repeated term ("q^9,q^9") or a trailing group power ("(q;q)^2") gives a
/// multiplicity.  "br(c1,c2,c3,c4)" is accepted by parse() as a mod-45
/// bracket product.
class ProductSpec {
 public:
  ProductSpec() = default;
  explicit ProductSpec(std::vector<PochhammerFactor> factors);

  // 1/(q^{c1},...,q^{ck}; q^m)_infinity
  static ProductSpec denominator(int modulus, const std::vector<int>& offsets);
  static ProductSpec numerator(int modulus, const std::vector<int>& offsets, int sign = 1);
  static ProductSpec parse(std::string_view text);

  const std::vector<PochhammerFactor>& factors() const { return factors_; }
  bool all_in_denominator() const;

  ProductSpec reciprocal() const;
  ProductSpec& operator*=(const ProductSpec& other);
  friend ProductSpec operator*(ProductSpec a, const ProductSpec& b) { return a *= b; }
  friend bool operator==(const ProductSpec&, const ProductSpec&) = default;

  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<PochhammerFactor> factors_;
};

/// Expansion of the product through q^order.
LaurentSeries expand_product(const ProductSpec& spec, int order);

}  // namespace qseries

#endif
