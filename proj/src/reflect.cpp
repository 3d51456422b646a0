#include "qseries/reflect.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "qseries/errors.hpp"
#include "qseries/qbinomial.hpp"

namespace qseries {

int normalization_exponent(int i, int N) {
  if (i < 1 || i > 5) throw DomainError("KR index must be 1..5");
  if (N < 0) throw DomainError("normalization needs N >= 0");
  const int M = N / 3, l = N % 3;
  switch (i) {
    case 1: {
      const int e[3] = {3 * M * (M + 1), 3 * M * (M + 1) + 1, 3 * (M + 1) * (M + 1)};
      return e[l];
    }
    case 2: {
      const int e[3] = {3 * M * (M + 1), 3 * M * (M + 1), 3 * (M + 1) * (M + 1) - 1};
      return e[l];
    }
    case 3: {
      const int e[3] = {3 * M * (M + 1), 3 * M * (M + 1), 3 * M * (M + 2)};
      return e[l];
    }
    case 4: {
      const int e[3] = {M * (3 * M + 2), M * (3 * M + 5), (M + 1) * (3 * M + 2)};
      return e[l];
    }
    default: {
      const int e[3] = {M * (3 * M + 1), (M + 1) * (3 * M + 1), (M + 2) * (3 * M + 1)};
      return e[l];
    }
  }
}

namespace {

int binomial_degree(const BinomialArgs& b) {
  if (b.star && b.top == -1 && b.bottom == 0) return 0;
  return b.step * b.bottom * (b.top - b.bottom);
}

}  // namespace

LaurentSeries rk_finite(int i, int N, Precision precision) {
  const int e = normalization_exponent(i, N);
  if (precision.is_exact()) return reflect(kr_finite(i, N), e);
  LaurentSeries sum = precision.zero();
  for (KrTerm t : kr_terms(i, N)) {
    t.exponent = e - t.exponent - binomial_degree(t.b1) - binomial_degree(t.b2);
    if (precision.drops(t.exponent)) continue;
    sum += t.evaluate(precision);
  }
  return sum;
}

bool AbForm::has_finite_form() const {
  for (const auto& p : pieces) {
    if (!p.t) return false;
  }
  return true;
}

namespace {

int quadratic(int a, int b) { return a * a - 3 * a * b + 3 * b * b; }

int piece_exponent(const AbSum& p, int a, int b) { return quadratic(a, b) + p.la * a + p.lb * b + p.c; }

LaurentSeries one_plus_q_times(const LaurentSeries& x) { return x + x.shift(1); }

}  // namespace

LaurentSeries AbForm::limit(int order) const {
  LaurentSeries sum = LaurentSeries::zero_to(order);
  if (plus_one) sum += LaurentSeries::one();
  for (const auto& p : pieces) {
    // a^2-3ab+3b^2 >= 3b^2/4, and the linear part is at least -2b - 4 here
    for (int b = 0; 3 * b * b - 4 * (2 * b + 4 + std::abs(p.c)) <= 4 * order; ++b) {
      for (int a = 0; a <= 3 * b + p.s - a; ++a) {
        const int e = piece_exponent(p, a, b);
        if (e > order) continue;
        const int rest = order - e;
        LaurentSeries t = qbinomial(3 * b - a + p.s, a, 1, Precision::up_to(rest)) * inverse_qfactorial(b, 3, rest);
        if (p.one_plus_q) t = one_plus_q_times(t).truncate(rest);
        sum += t.shift(e);
      }
    }
  }
  return sum;
}

LaurentSeries AbForm::finite(int M) const {
  if (!has_finite_form()) throw DomainError("no finite a,b form for this family");
  LaurentSeries sum;
  if (plus_one) sum += LaurentSeries::one();
  for (const auto& p : pieces) {
    const int t = *p.t;
    for (int b = 0; b <= 2 * M + std::abs(p.s) + 2 * std::abs(t) + 4; ++b) {
      for (int a = 0; a <= 3 * b + p.s - a; ++a) {
        auto w = qbinomial(M + a - b + t, b, 3);
        if (w.is_zero()) continue;
        LaurentSeries x = qbinomial(3 * b - a + p.s, a) * w;
        if (x.is_zero()) continue;
        if (p.one_plus_q) x = one_plus_q_times(x);
        sum.add_shifted(x, piece_exponent(p, a, b));
      }
    }
  }
  return sum;
}

AbForm ab_form(int i, int l) {
  if (l < 0 || l > 2) throw DomainError("residue class must be 0, 1 or 2");
  AbForm f;
  f.i = i;
  f.l = l;
  switch (i) {
    case 1: {
      const AbSum p[3] = {{false, 0, 0, -1, -1, {}}, {false, 0, 0, 0, 1, {}}, {false, 0, 0, 0, 0, {}}};
      f.pieces = {p[l]};
      break;
    }
    case 2: {
      const AbSum p[3] = {{false, -1, 3, 0, 0, {}}, {false, -1, 3, 0, 2, {}}, {false, -1, 3, 0, 1, {}}};
      f.pieces = {p[l]};
      break;
    }
    case 3: {
      const AbSum p[3] = {{false, 1, 0, 0, -2, {}}, {false, 1, 0, 0, 0, {}}, {false, 1, 0, -2, -1, {}}};
      f.pieces = {p[l]};
      f.plus_one = (l == 0);
      break;
    }
    case 4: {
      const AbSum p[3] = {{false, 0, 1, 0, 0, 0}, {false, 0, 1, -2, -1, 1}, {false, 0, 1, 0, 1, 0}};
      f.pieces = {p[l]};
      break;
    }
    case 5: {
      if (l == 1) {
        f.pieces = {{true, 0, 2, 0, 0, 0}, {false, -1, 5, 2, 1, -1}};
      } else if (l == 2) {
        f.pieces = {{true, 0, 2, -2, -1, 1}, {false, -1, 5, 0, 0, 0}};
      } else {
        f.pieces = {{true, 0, 2, 0, 1, -1}, {false, -1, 5, 2, 2, -2}};
      }
      break;
    }
    default:
      throw DomainError("KR index must be 1..5");
  }
  return f;
}

StabilizedSeries stabilized_limit(const SeriesFamily& family, int order, const StabilizeOptions& options,
                                  int start) {
  if (order < 0) throw DomainError("stabilized_limit needs order >= 0");
  int M = std::max(start, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(order)))));
  std::optional<int> last_bad;
  int last_m = M;
  while (M <= options.max_m) {
    last_m = M;
    LaurentSeries a = family(M, order), b = family(M + 1, order);
    auto d = first_discrepancy(a, b, order);
    if (!d) {
      LaurentSeries c = family(M + 2, order);
      d = first_discrepancy(b, c, order);
      if (!d) return {a.truncate(order), M};
    }
    last_bad = d;
    M = std::max(1, 2 * M);
  }
  throw NonConvergenceError("no stabilization through q^" + std::to_string(order) + " up to M = " +
                                std::to_string(options.max_m),
                            last_m, last_bad.value_or(-1));
}

StabilizedSeries rk_limit(int i, int l, int order, const StabilizeOptions& options) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, StabilizedSeries> cache;
  const auto key = std::make_tuple(i, l, order, options.max_m);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  if (l < 0 || l > 2) throw DomainError("residue class must be 0, 1 or 2");
  auto result = stabilized_limit(
      [i, l](int M, int T) { return rk_finite(i, 3 * M + l, Precision::up_to(T)); }, order, options);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(result)).first->second;
}

ProductSpec rk_product_spec(int i, int l) {
  if (i == 4 && l == 0) return ProductSpec::parse("1/(q^2;q^3)(q^3,q^9,q^12,q^21,q^30,q^36,q^39;q^45)");
  if (i == 4 && l == 1) return ProductSpec::parse("1/(q^2;q^3)(q^3,q^12,q^18,q^21,q^27,q^30,q^39;q^45)");
  if (i == 5 && l == 1) return ProductSpec::parse("1/(q;q^3)(q^6,q^9,q^15,q^24,q^33,q^36,q^42;q^45)");
  if (i == 5 && l == 2) return ProductSpec::parse("1/(q;q^3)(q^6,q^15,q^18,q^24,q^27,q^33,q^42;q^45)");
  throw DomainError("no mod-45 product for this family");
}

BracketCombination rk_bracket_form(int i, int l, int form) {
  using B = BracketSpec;
  // [i][l == 2][form]
  static const std::map<std::tuple<int, int, int>, BracketCombination> table = {
      {{1, 0, 0}, {{1, 0, B(2, 8, 11, 20)}, {1, 3, B(2, 14, 20, 22)}, {-1, 8, B(17, 19, 20, 22)}}},
      {{1, 0, 1}, {{1, 0, B(1, 8, 13, 20)}, {-1, 1, B(4, 7, 13, 20)}, {1, 5, B(7, 16, 17, 20)}}},
      {{1, 2, 0}, {{1, 0, B(1, 7, 11, 20)}, {1, 6, B(11, 13, 14, 20)}, {-1, 6, B(8, 14, 19, 20)}}},
      {{1, 2, 1}, {{1, 0, B(1, 4, 17, 20)}, {-1, 4, B(2, 16, 19, 20)}, {-1, 5, B(4, 16, 20, 22)}}},
      {{2, 0, 0}, {{1, 0, B(2, 5, 14, 22)}, {-1, 2, B(5, 7, 16, 17)}, {-1, 5, B(5, 17, 19, 22)}}},
      {{2, 0, 1}, {{1, -3, B(1, 5, 8, 13)}, {-1, -3, B(2, 5, 8, 11)}, {-1, -2, B(4, 5, 7, 13)}}},
      {{2, 2, 0}, {{1, 0, B(2, 5, 16, 19)}, {-1, 2, B(5, 8, 14, 19)}, {1, 2, B(5, 11, 13, 14)}}},
      {{2, 2, 1}, {{1, -4, B(1, 4, 5, 17)}, {-1, -4, B(1, 5, 7, 11)}, {-1, 1, B(4, 5, 16, 22)}}},
      {{3, 0, 0}, {{1, 0, B(4, 7, 10, 13)}, {-1, 4, B(7, 10, 16, 17)}, {-1, 7, B(10, 17, 19, 22)}}},
      {{3, 0, 1}, {{1, -1, B(1, 8, 10, 13)}, {-1, -1, B(2, 8, 10, 11)}, {-1, 2, B(2, 10, 14, 22)}}},
      {{3, 2, 0}, {{1, 0, B(2, 10, 16, 19)}, {1, 1, B(4, 10, 16, 22)}, {-1, 2, B(8, 10, 14, 19)}}},
      {{3, 2, 1}, {{1, -4, B(1, 4, 10, 17)}, {-1, -4, B(1, 7, 10, 11)}, {-1, 2, B(10, 11, 13, 14)}}},
  };
  auto it = table.find({i, l, form});
  if (it == table.end()) throw DomainError("no bracket combination for this family");
  return it->second;
}

std::string to_string(const BracketCombination& c) {
  std::ostringstream os;
  for (size_t k = 0; k < c.size(); ++k) {
    const auto& t = c[k];
    if (k) os << (t.sign < 0 ? " - " : " + ");
    else if (t.sign < 0) os << "-";
    if (t.shift == 1) os << "q*";
    else if (t.shift != 0) os << "q^" << t.shift << "*";
    os << t.bracket.to_string();
  }
  return os.str();
}

LaurentSeries expand_combination(const BracketCombination& c, int order, const ProductSpec& multiplier) {
  LaurentSeries sum = LaurentSeries::zero_to(order);
  for (const auto& t : c) {
    LaurentSeries x = expand_product(t.bracket.to_product_spec() * multiplier, order - t.shift).shift(t.shift);
    if (t.sign < 0) sum -= x;
    else sum += x;
  }
  return sum;
}

std::optional<int> positivity_scan(const LaurentSeries& series, const ProductSpec& multiplier, int order) {
  LaurentSeries x = multiplier.factors().empty() ? series.truncate(order)
                                                 : (series * expand_product(multiplier, order)).truncate(order);
  const auto c = x.coefficients();
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] < 0) return x.low() + static_cast<int>(k);
  }
  return std::nullopt;
}

std::vector<PositivityCase> positivity_cases() {
  std::vector<PositivityCase> out;
  for (int i = 1; i <= 3; ++i) {
    for (int l : {0, 2}) {
      for (int form = 0; form < 2; ++form) {
        out.push_back({"rk" + std::to_string(i) + "-" + std::to_string(l) + "mod3-" + (form ? "b" : "a"),
                       {{0, rk_bracket_form(i, l, form)}}});
      }
    }
  }
  // RK1(3inf+1) = q RK1(3inf) + RK1(3inf+2); RK2(3inf+1) = RK2(3inf) + RK2(3inf+2);
  // RK3(3inf+1) = RK3(3inf) + q^2 RK3(3inf+2)
  out.push_back({"rk1-1mod3", {{1, rk_bracket_form(1, 0, 0)}, {0, rk_bracket_form(1, 2, 0)}}});
  out.push_back({"rk2-1mod3", {{0, rk_bracket_form(2, 0, 0)}, {0, rk_bracket_form(2, 2, 0)}}});
  out.push_back({"rk3-1mod3", {{0, rk_bracket_form(3, 0, 0)}, {2, rk_bracket_form(3, 2, 0)}}});
  return out;
}

LaurentSeries expand_case(const PositivityCase& c, int order, const ProductSpec& multiplier) {
  LaurentSeries sum = LaurentSeries::zero_to(order);
  for (const auto& [shift, comb] : c.parts) sum += expand_combination(comb, order - shift, multiplier).shift(shift);
  return sum;
}

ProductSpec positivity_multiplier() { return ProductSpec::parse("(q^3;q^3)/(q^45;q^45)"); }

}  // namespace qseries
