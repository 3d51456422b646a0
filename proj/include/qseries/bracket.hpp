#ifndef QSERIES_BRACKET_HPP
#define QSERIES_BRACKET_HPP

#include <array>
#include <string>
#include <string_view>

#include "qseries/laurent_series.hpp"
#include "qseries/pochhammer.hpp"

namespace qseries {

/// <c1,c2,c3,c4> = (q^45;q^45) / ((q^3;q^3) prod_j (q^{c_j},q^{45-c_j};q^45)),
/// each c_j in 1..22.
struct BracketSpec {
  std::array<int, 4> c{};

  BracketSpec() = default;
  BracketSpec(int c1, int c2, int c3, int c4);

  ProductSpec to_product_spec() const;
  // "br(c1,c2,c3,c4)"; "<c1,c2,c3,c4>" is accepted too.
  static BracketSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const BracketSpec&, const BracketSpec&) = default;
};

LaurentSeries bracket(const BracketSpec& spec, int order);

}  // namespace qseries

#endif
