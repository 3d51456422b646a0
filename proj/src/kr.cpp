#include "qseries/kr.hpp"

#include "qseries/errors.hpp"
#include "qseries/qbinomial.hpp"

namespace qseries {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_index(int i) {
  if (i < 1 || i > 5) throw DomainError("KR index must be 1..5");
}

int quadratic(int m, int n) { return m * m + 3 * m * n + 3 * n * n; }

}  // namespace

int floor_two_thirds(int x) { return floor_div(2 * x, 3); }

bool BinomialArgs::vanishes() const {
  if (star && top == -1 && bottom == 0) return false;
  return bottom < 0 || bottom > top;
}

LaurentSeries BinomialArgs::evaluate(Precision precision) const {
  return star ? qbinomial_star(top, bottom, step, precision) : qbinomial(top, bottom, step, precision);
}

LaurentSeries KrTerm::evaluate(Precision precision) const {
  if (precision.drops(exponent)) return precision.zero();
  const Precision inner = precision.after_shift(exponent);
  // the base-q^3 factor is usually the cheaper one to truncate first
  LaurentSeries p = b2.evaluate(inner);
  p *= b1.evaluate(inner);
  p = inner.apply(p);
  return p.shift(exponent);
}

std::vector<KrTerm> kr_terms(int i, int N, Kr5Reading reading) {
  check_index(i);
  if (N < 0) throw DomainError("KR finite sums need N >= 0");
  std::vector<KrTerm> out;
  const int f0 = floor_two_thirds(N);
  const int f1 = floor_two_thirds(N - 1);
  const int delta = ((N - 2) % 3 == 0) ? 1 : 0;

  auto push = [&](int exponent, int xw, BinomialArgs b1, BinomialArgs b2) {
    if (b1.vanishes() || b2.vanishes()) return;
    out.push_back({exponent, xw, b1, b2});
  };

  for (int n = 0; 3 * n <= N + 3; ++n) {
    for (int m = 0; m <= N + 2; ++m) {
      const int Q = quadratic(m, n);
      const int x = m + 2 * n;
      switch (i) {
        case 1:
          push(Q, x, {N - m - 3 * n + 1, m, 1}, {f0 - m - n + 1, n, 3});
          break;
        case 2:
          push(Q + m + 3 * n, x, {N - m - 3 * n, m, 1}, {f0 - m - n, n, 3});
          break;
        case 3:
          push(Q + 2 * m + 3 * n, x, {N - m - 3 * n - 1, m, 1, true}, {f0 - m - n, n, 3});
          break;
        case 4:
          push(Q + m + 2 * n, x, {N - m - 3 * n, m, 1}, {f1 - m - n + 1, n, 3});
          break;
        case 5: {
          const BinomialArgs a1{N - m - 3 * n - 1, m, 1};
          const BinomialArgs a2{f1 - m - n + delta, n, 3};
          push(Q + 2 * m + 4 * n, x, a1, a2);
          push(Q + 2 * m + 4 * n + 1, x + 1, a1, a2);
          const int top = reading == Kr5Reading::Corrected ? f1 - m - n - 1 + delta : f1 - m - n;
          push(Q + 3 * m + 7 * n + 2, x + 1, {N - m - 3 * n - 2, m, 1}, {top, n, 3});
          break;
        }
      }
    }
  }
  return out;
}

LaurentSeries kr_finite(int i, int N, Precision precision, Kr5Reading reading) {
  LaurentSeries sum = precision.zero();
  for (const auto& t : kr_terms(i, N, reading)) {
    if (precision.drops(t.exponent)) continue;
    sum += t.evaluate(precision);
  }
  return sum;
}

BivariateSeries kr_finite_x(int i, int N, Kr5Reading reading) {
  BivariateSeries out;
  for (const auto& t : kr_terms(i, N, reading)) out.add_term(t.x_weight, t.evaluate(Precision::exact()));
  return out;
}

LaurentSeries kr_infinite(int i, int order) {
  check_index(i);
  LaurentSeries sum = LaurentSeries::zero_to(order);
  auto add = [&](int exponent, int m, int n) {
    if (exponent > order) return;
    const int rest = order - exponent;
    LaurentSeries t = inverse_qfactorial(m, 1, rest) * inverse_qfactorial(n, 3, rest);
    sum += t.shift(exponent);
  };
  for (int n = 0; 3 * n * n <= order; ++n) {
    for (int m = 0; quadratic(m, n) <= order; ++m) {
      const int Q = quadratic(m, n);
      switch (i) {
        case 1: add(Q, m, n); break;
        case 2: add(Q + m + 3 * n, m, n); break;
        case 3: add(Q + 2 * m + 3 * n, m, n); break;
        case 4: add(Q + m + 2 * n, m, n); break;
        case 5:
          add(Q + 2 * m + 4 * n, m, n);
          add(Q + 2 * m + 4 * n + 1, m, n);
          add(Q + 3 * m + 7 * n + 2, m, n);
          break;
      }
    }
  }
  return sum;
}

ProductSpec kr_product_spec(int i) {
  check_index(i);
  static const std::vector<int> residues[5] = {
      {1, 3, 6, 8}, {2, 3, 6, 7}, {3, 4, 5, 6}, {2, 3, 5, 8}, {1, 4, 6, 7}};
  return ProductSpec::denominator(9, residues[i - 1]);
}

LaurentSeries kr_product(int i, int order) { return expand_product(kr_product_spec(i), order); }

LaurentSeries s_recursion(int N) {
  if (N < 0) return LaurentSeries();
  std::vector<LaurentSeries> S(N + 1);
  auto at = [&](int k) { return k < 0 ? LaurentSeries() : S[k]; };
  S[0] = LaurentSeries::one();
  for (int k = 1; k <= N; ++k) {
    LaurentSeries x;
    switch (k % 3) {
      case 0:
        x = at(k - 3) + at(k - 3).shift(k - 1) + at(k - 4).shift(k - 2);
        break;
      case 1:
        x = at(k - 2) + at(k - 3).shift(k);
        break;
      default:
        x = at(k - 2);
        break;
    }
    S[k] = S[k - 1] + x.shift(k);
  }
  return S[N];
}

LaurentSeries f_sum(int N, int M) {
  LaurentSeries sum;
  for (int n = 0; 3 * n <= std::max(N, 0); ++n) {
    for (int m = 0; m + 3 * n <= N; ++m) {
      BinomialArgs b1{N - m - 3 * n, m, 1}, b2{M - m - n, n, 3};
      if (b1.vanishes() || b2.vanishes()) continue;
      sum += (b1.evaluate(Precision::exact()) * b2.evaluate(Precision::exact())).shift(quadratic(m, n));
    }
  }
  return sum;
}

}  // namespace qseries
