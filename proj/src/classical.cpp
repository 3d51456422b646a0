#include "qseries/classical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <optional>
#include <string>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/pochhammer.hpp"
#include "qseries/qbinomial.hpp"
#include "qseries/theta.hpp"

namespace qseries {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int sign_of(int k) { return (k % 2 == 0) ? 1 : -1; }

void need_nonneg(int N, const char* what) {
  if (N < 0) throw DomainError(std::string(what) + " needs a nonnegative parameter");
}

// (-q^2,-q^4;q^6)_l
LaurentSeries minus_q2_q4(int l) { return pochhammer_finite(-1, 2, 6, l) * pochhammer_finite(-1, 4, 6, l); }

LaurentSeries product(const char* text, int order) { return expand_product(ProductSpec::parse(text), order); }

}  // namespace

LaurentSeries bressoud_lhs(int N) {
  need_nonneg(N, "bressoud");
  LaurentSeries s;
  for (int n = 0; n <= N; ++n) s.add_shifted(qbinomial(N, n), n * n);
  return s;
}

LaurentSeries bressoud_rhs(int N) {
  need_nonneg(N, "bressoud");
  LaurentSeries s;
  for (int k = -N; k <= N; ++k) s.add_shifted(qbinomial(2 * N, N + 2 * k), k * (5 * k + 1) / 2, sign_of(k));
  return s;
}

LaurentSeries bressoud_reflected_lhs(int N) {
  need_nonneg(N, "bressoud");
  LaurentSeries s;
  for (int n = 0; n <= N; ++n) s.add_shifted(qbinomial(N, n), n * N - N * N);
  return s;
}

LaurentSeries bressoud_reflected_rhs(int N) {
  need_nonneg(N, "bressoud");
  LaurentSeries s;
  for (int k = -N; k <= N; ++k) {
    s.add_shifted(qbinomial(2 * N, N + 2 * k), k * (3 * k - 1) / 2 - N * N, sign_of(k));
  }
  return s;
}

LaurentSeries rr_sum(int order) {
  LaurentSeries s = LaurentSeries::zero_to(order);
  for (int n = 0; n * n <= order; ++n) s += inverse_qfactorial(n, 1, order - n * n).shift(n * n);
  return s;
}

LaurentSeries rr_product(int order) { return product("1/(q,q^4;q^5)", order); }

LaurentSeries rr_theta(int order) { return product("1/(q;q)", order) * alternating_theta(5, 1, order); }

LaurentSeries schur_lhs(int N) {
  need_nonneg(N, "schur");
  LaurentSeries s;
  for (int n = 0; 2 * n <= N; ++n) s.add_shifted(qbinomial(N - n, n), n * n);
  return s;
}

LaurentSeries schur_rhs(int N) {
  need_nonneg(N, "schur");
  LaurentSeries s;
  for (int k = -N - 1; k <= N + 1; ++k) {
    s.add_shifted(qbinomial(N, floor_div(N + 5 * k + 1, 2)), k * (5 * k + 1) / 2, sign_of(k));
  }
  return s;
}

LaurentSeries andrews_even_lhs(int M) {
  need_nonneg(M, "andrews");
  LaurentSeries s;
  for (int n = 0; n <= M; ++n) s.add_shifted(qbinomial(M + n, 2 * n), n * n);
  return s;
}

LaurentSeries andrews_even_rhs(int M) {
  need_nonneg(M, "andrews");
  LaurentSeries s;
  for (int k = -M - 1; k <= M + 1; ++k) {
    const int f = floor_div(5 * k + 1, 2);
    s.add_shifted(qbinomial(2 * M, M + f), f * f - k * (5 * k + 1) / 2, sign_of(k));
  }
  return s;
}

LaurentSeries andrews_odd_lhs(int M) {
  need_nonneg(M, "andrews");
  LaurentSeries s;
  for (int n = 0; n <= M; ++n) s.add_shifted(qbinomial(M + n + 1, 2 * n + 1), n * n + n);
  return s;
}

LaurentSeries andrews_odd_rhs(int M) {
  need_nonneg(M, "andrews");
  LaurentSeries s;
  for (int k = -M - 1; k <= M + 1; ++k) {
    const int f = floor_div(5 * k, 2);
    s.add_shifted(qbinomial(2 * M + 1, M + f + 1), f * f + f - k * (5 * k + 1) / 2, sign_of(k));
  }
  return s;
}

LaurentSeries rogers_even_sum(int order) {
  LaurentSeries s = LaurentSeries::zero_to(order);
  for (int n = 0; n * n <= order; ++n) s += inverse_qfactorial(2 * n, 1, order - n * n).shift(n * n);
  return s;
}

LaurentSeries rogers_even_product(int order) { return product("1/(q;q^2)(q^4,q^16;q^20)", order); }

LaurentSeries rogers_odd_sum(int order) {
  LaurentSeries s = LaurentSeries::zero_to(order);
  for (int n = 0; n * n + n <= order; ++n) {
    s += inverse_qfactorial(2 * n + 1, 1, order - n * n - n).shift(n * n + n);
  }
  return s;
}

LaurentSeries rogers_odd_product(int order) {
  return product("1/(q,q^2,q^8,q^9;q^10)(q^5,q^6,q^14,q^15;q^20)", order);
}

LaurentSeries capparelli_analytic_sum(int order) {
  LaurentSeries s = LaurentSeries::zero_to(order);
  for (int n = 0; 6 * n * n <= order; ++n) {
    for (int m = 0; 2 * (m * m + 3 * m * n + 3 * n * n) <= order; ++m) {
      const int e = 2 * (m * m + 3 * m * n + 3 * n * n);
      const int rest = order - e;
      s += (inverse_qfactorial(m, 1, rest) * inverse_qfactorial(n, 3, rest)).shift(e);
    }
  }
  return s;
}

LaurentSeries capparelli_analytic_product(int order) { return product("(-q^2,-q^4;q^6)(-q^3;q^3)", order); }

LaurentSeries capparelli43_lhs(int N) {
  need_nonneg(N, "capparelli");
  LaurentSeries s;
  for (int n = 0; 3 * n <= 2 * N; ++n) {
    for (int m = 0; 4 * m + 6 * n <= 3 * N; ++m) {
      auto b2 = qbinomial(2 * N - 2 * m - 3 * n, n, 3);
      if (b2.is_zero()) continue;
      s.add_shifted(qbinomial(3 * N - 3 * m - 6 * n, m) * b2, 2 * (m * m + 3 * m * n + 3 * n * n));
    }
  }
  return s;
}

LaurentSeries capparelli43_rhs(int N) {
  need_nonneg(N, "capparelli");
  LaurentSeries s;
  for (int l = 0; 2 * l <= N; ++l) {
    s.add_shifted(qbinomial(N, 2 * l, 3) * minus_q2_q4(l), 3 * (N - 2 * l) * (N - 2 * l - 1) / 2);
  }
  return s;
}

namespace {

// sum over a, b of q^{2(a^2-3ab+3b^2) + odd*(2a-3b-1)} [3b choose 2a+odd] * weight(b)
template <class Weight>
LaurentSeries capparelli_ab(int odd, int max_b, Weight weight) {
  LaurentSeries s;
  for (int b = 0; b <= max_b; ++b) {
    for (int a = 0; 2 * a + odd <= 3 * b; ++a) {
      const int e = 2 * (a * a - 3 * a * b + 3 * b * b) + (odd ? 2 * a - 3 * b - 1 : 0);
      auto w = weight(a, b, e);
      if (!w) continue;
      s.add_shifted(qbinomial(3 * b, 2 * a + odd) * *w, e);
    }
  }
  return s;
}

}  // namespace

LaurentSeries capparelli_reflected_even_lhs(int M) {
  need_nonneg(M, "capparelli");
  return capparelli_ab(0, 2 * M, [&](int a, int b, int) -> std::optional<LaurentSeries> {
    auto w = qbinomial(M + a, 2 * b, 3);
    if (w.is_zero()) return std::nullopt;
    return w;
  });
}

LaurentSeries capparelli_reflected_even_rhs(int M) {
  need_nonneg(M, "capparelli");
  LaurentSeries s;
  for (int c = 0; c <= M; ++c) s.add_shifted(qbinomial(2 * M, 2 * c, 3) * minus_q2_q4(M - c), 3 * c);
  return s;
}

LaurentSeries capparelli_reflected_odd_lhs(int M) {
  need_nonneg(M, "capparelli");
  return capparelli_ab(1, 2 * M + 1, [&](int a, int b, int) -> std::optional<LaurentSeries> {
    auto w = qbinomial(M + a, 2 * b, 3);
    if (w.is_zero()) return std::nullopt;
    return w;
  });
}

LaurentSeries capparelli_reflected_odd_rhs(int M) {
  need_nonneg(M, "capparelli");
  LaurentSeries s;
  for (int c = 0; c + 1 <= M; ++c) {
    s.add_shifted(qbinomial(2 * M - 1, 2 * c + 1, 3) * minus_q2_q4(M - 1 - c), 3 * c);
  }
  return s;
}

LaurentSeries capparelli_reflected_odd_rhs_as_printed(int M) {
  need_nonneg(M, "capparelli");
  LaurentSeries s;
  for (int c = 0; c <= M; ++c) s.add_shifted(qbinomial(2 * M, 2 * c + 1, 3) * minus_q2_q4(M - c), 3 * c);
  return s;
}

int capparelli_reflection_exponent(int N) {
  // N = 2M: 6M^2;  N = 2M - 1: 6M(M-1)
  if (N % 2 == 0) {
    const int M = N / 2;
    return 6 * M * M;
  }
  const int M = (N + 1) / 2;
  return 6 * M * (M - 1);
}

namespace {

LaurentSeries capparelli_limit_sum(int odd, int order) {
  // for fixed b the exponent is at least 3b^2/2 - 3b - 1
  int max_b = 0;
  while (3 * (max_b + 1) * (max_b + 1) / 2 - 3 * (max_b + 1) - 1 <= order) ++max_b;
  LaurentSeries s = LaurentSeries::zero_to(order);
  for (int b = 0; b <= max_b; ++b) {
    for (int a = 0; 2 * a + odd <= 3 * b; ++a) {
      const int e = 2 * (a * a - 3 * a * b + 3 * b * b) + (odd ? 2 * a - 3 * b - 1 : 0);
      if (e > order) continue;
      const Precision p = Precision::up_to(order - e);
      s += (qbinomial(3 * b, 2 * a + odd, 1, p) * inverse_qfactorial(2 * b, 3, order - e)).shift(e);
    }
  }
  return s;
}

LaurentSeries capparelli_limit_series(int odd, int order) {
  LaurentSeries s = LaurentSeries::zero_to(order);
  for (int c = 0; 3 * c <= order; ++c) s += inverse_qfactorial(2 * c + odd, 3, order - 3 * c).shift(3 * c);
  return s * product("(-q^2,-q^4;q^6)", order);
}

}  // namespace

LaurentSeries capparelli_reflected_even_limit_sum(int order) { return capparelli_limit_sum(0, order); }
LaurentSeries capparelli_reflected_odd_limit_sum(int order) { return capparelli_limit_sum(1, order); }
LaurentSeries capparelli_reflected_even_limit_series(int order) { return capparelli_limit_series(0, order); }
LaurentSeries capparelli_reflected_odd_limit_series(int order) { return capparelli_limit_series(1, order); }

LaurentSeries capparelli_reflected_even_limit_product(int order) {
  return product("1/(q^2,q^10;q^12)(q^3,q^6,q^9,q^9,q^12,q^15,q^15,q^21,q^27,q^33,q^33,q^36,q^39,q^39,q^42,q^45;q^48)",
                 order);
}

LaurentSeries capparelli_reflected_odd_limit_product(int order) {
  return product("1/(q^2,q^10;q^12)(q^3,q^3,q^9,q^12,q^15,q^18,q^21,q^21,q^27,q^27,q^30,q^33,q^36,q^39,q^45,q^45;q^48)",
                 order);
}

LaurentSeries capparelli_multinomial(int N, int m, int n) {
  if (m < 0 || n < 0 || N - m - 2 * n < 0) return LaurentSeries();
  LaurentSeries p = qbinomial(N, n, 3) * qbinomial(N - n, m + n, 3);
  for (int j = m + 1; j <= m + n; ++j) p.mul_one_minus(1, 3 * j);
  for (int j = 1; j <= m; ++j) {
    std::vector<Integer> c(2 * j + 1);
    c[0] = 1;
    c[j] = 1;
    c[2 * j] = 1;
    p *= LaurentSeries::polynomial(0, std::move(c));
  }
  return p;
}

LaurentSeries capparelli71_lhs(int N) {
  need_nonneg(N, "capparelli");
  LaurentSeries s;
  for (int n = 0; 2 * n <= N; ++n) {
    for (int m = 0; m + 2 * n <= N; ++m) {
      s.add_shifted(capparelli_multinomial(N, m, n), 2 * (m * m + 3 * m * n + 3 * n * n));
    }
  }
  return s;
}

LaurentSeries capparelli71_rhs(int N) {
  need_nonneg(N, "capparelli");
  LaurentSeries s;
  for (int l = -N; l <= N; ++l) s.add_shifted(qbinomial(2 * N, N + l, 3), l * (3 * l + 1));
  return s;
}

LaurentSeries capparelli71_reflected_lhs(int N) {
  need_nonneg(N, "capparelli");
  LaurentSeries s;
  for (int n = 0; 2 * n <= N; ++n) {
    for (int k = 0; k + 2 * n <= N; ++k) {
      s.add_shifted(capparelli_multinomial(N, N - k - 2 * n, n), n * (3 * n + 1) / 2 + k * (3 * N + 1), sign_of(n));
    }
  }
  return s;
}

LaurentSeries capparelli71_reflected_rhs(int N) {
  need_nonneg(N, "capparelli");
  LaurentSeries s;
  for (int l = -N; l <= N; ++l) s.add_shifted(qbinomial(2 * N, N + l, 3), N - l);
  return s;
}

LaurentSeries capparelli71_reflected_rhs(int N, int order) {
  need_nonneg(N, "capparelli");
  LaurentSeries s = LaurentSeries::zero_to(order);
  for (int l = -N; l <= N; ++l) {
    if (N - l > order) continue;
    s += qbinomial(2 * N, N + l, 3, Precision::up_to(order - (N - l))).shift(N - l);
  }
  return s;
}

LaurentSeries capparelli71_limit_product(int order) { return product("1/(q;q^3)", order); }

LaurentSeries eqid(int L) {
  need_nonneg(L, "eqid");
  LaurentSeries s;
  for (int a = 0; a <= L + 1; ++a) {
    LaurentSeries t = qbinomial(L - a - 1, a) + qbinomial(L - a, a) - qbinomial(L - a + 1, a);
    s.add_shifted(t, a * (a - L));
  }
  return s;
}

namespace {

// Rows of [L-a choose a]_q for consecutive L, each coefficient held in a
// fixed number of limbs.  Every coefficient of [L-a choose a] is at most
// sum_a binom(L-a, a) = F_{L+1} <= phi^L, and the width leaves 12 bits for
// sums of such values, so a block mpn_add_n never carries across
// coefficients.
class LimbRows {
 public:
  explicit LimbRows(int max_row) {
    const int bits = static_cast<int>(std::ceil(0.6943 * (max_row + 1))) + 12;
    width_ = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  }

  int width() const { return width_; }

  // Computes row last + 1, calling visit(a, coefficients, count) per entry.
  template <class Visit>
  void advance(Visit&& visit) {
    const int L = last_ + 1;
    const size_t W = static_cast<size_t>(width_);
    // the slot of row L - 3 is reused
    Row next = std::move(rows_[static_cast<size_t>(L % 3)]);
    next.offsets.resize(static_cast<size_t>(L / 2 + 1));
    size_t total = 0;
    for (int a = 0; a <= L / 2; ++a) {
      next.offsets[static_cast<size_t>(a)] = total;
      total += static_cast<size_t>(a * (L - 2 * a) + 1);
    }
    next.limbs.resize(total * W);
    const Row* prev1 = row(L - 1);
    const Row* prev2 = row(L - 2);
    for (int a = 0; a <= L / 2; ++a) {
      mp_limb_t* out = next.limbs.data() + next.offsets[static_cast<size_t>(a)] * W;
      const size_t len = static_cast<size_t>(a * (L - 2 * a) + 1);
      if (a == 0) {
        std::fill(out, out + W, 0);
        out[0] = 1;
      } else {
        // [L-a choose a] = [L-a-1 choose a-1] + q^a [L-a-1 choose a], in one
        // pass: the first term covers the bottom, the second the top
        std::pair<const mp_limb_t*, size_t> lo{nullptr, 0}, hi{nullptr, 0};
        if (a - 1 < prev2->size()) lo = prev2->entry(a - 1, width_);
        if (a < prev1->size()) hi = prev1->entry(a, width_);
        const size_t hi_begin = hi.first ? static_cast<size_t>(a) : len;
        const size_t lo_end = std::min(lo.second, len);
        const size_t lo_only = std::min(hi_begin, lo_end);
        std::copy(lo.first, lo.first + lo_only * W, out);
        if (lo_only < hi_begin) std::fill(out + lo_only * W, out + hi_begin * W, 0);
        if (hi.first) {
          const size_t both_end = std::max(hi_begin, lo_end);
          if (both_end > hi_begin)
            mpn_add_n(out + hi_begin * W, lo.first + hi_begin * W, hi.first,
                      static_cast<mp_size_t>((both_end - hi_begin) * W));
          std::copy(hi.first + (both_end - hi_begin) * W, hi.first + hi.second * W, out + both_end * W);
        }
      }
      visit(a, static_cast<const mp_limb_t*>(out), len);
    }
    rows_[static_cast<size_t>(L % 3)] = std::move(next);
    last_ = L;
  }

 private:
  struct Row {
    std::vector<size_t> offsets;
    std::vector<mp_limb_t> limbs;

    int size() const { return static_cast<int>(offsets.size()); }
    std::pair<const mp_limb_t*, size_t> entry(int a, int width) const {
      const size_t begin = offsets[static_cast<size_t>(a)];
      const size_t end = a + 1 < size() ? offsets[static_cast<size_t>(a) + 1] : limbs.size() / static_cast<size_t>(width);
      return {limbs.data() + begin * static_cast<size_t>(width), end - begin};
    }
  };

  const Row* row(int L) const { return L < 0 ? &empty_ : &rows_[static_cast<size_t>(L % 3)]; }

  int width_ = 1;
  int last_ = -1;
  std::array<Row, 3> rows_;
  Row empty_;
};

Integer from_limbs(const mp_limb_t* p, int width) {
  Integer z;
  mpz_import(z.get_mpz_t(), static_cast<size_t>(width), -1, sizeof(mp_limb_t), 0, GMP_NAIL_BITS, p);
  return z;
}

// Positive and negative parts of one eqid(L), with exponents from low to 0.
struct EqidAccumulator {
  int L = 0;
  int low = 0;
  std::vector<mp_limb_t> plus, minus;

  void reset(int l, int width) {
    L = l;
    low = -(L / 2) * (L - L / 2);  // min over a of a(a-L)
    plus.assign(static_cast<size_t>(-low + 1) * static_cast<size_t>(width), 0);
    minus.assign(plus.size(), 0);
  }
  // adds (or subtracts) q^{a(a-L)} times an entry; all of it lies in low..0
  void add(bool negative, int a, const mp_limb_t* src, size_t len, int width) {
    auto& acc = negative ? minus : plus;
    mp_limb_t* dst = acc.data() + static_cast<size_t>(a * (a - L) - low) * static_cast<size_t>(width);
    mpn_add_n(dst, dst, src, static_cast<mp_size_t>(len * static_cast<size_t>(width)));
  }
  LaurentSeries value(int width) const {
    const size_t span = plus.size() / static_cast<size_t>(width);
    std::vector<Integer> coeffs(span);
    for (size_t k = 0; k < span; ++k) {
      const mp_limb_t* p = plus.data() + k * static_cast<size_t>(width);
      const mp_limb_t* m = minus.data() + k * static_cast<size_t>(width);
      if (!std::equal(p, p + width, m)) coeffs[k] = from_limbs(p, width) - from_limbs(m, width);
    }
    return LaurentSeries::polynomial(low, std::move(coeffs));
  }
};

}  // namespace

void eqid_sweep(int max_L, const std::function<void(int, const LaurentSeries&)>& visit) {
  if (max_L < 0) return;
  LimbRows rows(max_L + 1);
  const int W = rows.width();
  // eqid(L) collects [L-a-1 choose a] + [L-a choose a] - [L-a+1 choose a],
  // so row r feeds eqid(r+1), eqid(r) and eqid(r-1); each entry is added
  // right after it is computed
  std::array<EqidAccumulator, 3> acc;
  acc[0].reset(0, W);
  for (int r = 0; r <= max_L + 1; ++r) {
    if (r + 1 <= max_L) acc[static_cast<size_t>((r + 1) % 3)].reset(r + 1, W);
    rows.advance([&](int a, const mp_limb_t* src, size_t len) {
      for (int L = std::max(0, r - 1); L <= std::min(max_L, r + 1); ++L)
        acc[static_cast<size_t>(L % 3)].add(L == r - 1, a, src, len, W);
    });
    if (r >= 1) visit(r - 1, acc[static_cast<size_t>((r - 1) % 3)].value(W));
  }
}

namespace {

LaurentSeries bressoud79_sum(int linear, int order) {
  LaurentSeries s = LaurentSeries::zero_to(order);
  for (int n = 0; n * n <= order; ++n) {
    for (int m = 0;; ++m) {
      const int e = m * m + 2 * m * n + 2 * n * n + linear * (m + 2 * n);
      if (e > order) break;
      s += (inverse_qfactorial(m, 1, order - e) * inverse_qfactorial(n, 2, order - e)).shift(e);
    }
  }
  return s;
}

}  // namespace

LaurentSeries bressoud79_a_sum(int order) { return bressoud79_sum(0, order); }
LaurentSeries bressoud79_b_sum(int order) { return bressoud79_sum(1, order); }
LaurentSeries bressoud79_a_product(int order) { return product("(q^3;q^3)^2/(q;q)(q^6;q^6)", order); }
LaurentSeries bressoud79_b_product(int order) { return product("(q^6;q^6)^2/(q^2;q^2)(q^3;q^3)", order); }

}  // namespace qseries
