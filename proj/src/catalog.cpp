#include "qseries/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qseries/classical.hpp"
#include "qseries/errors.hpp"
#include "qseries/kr.hpp"
#include "qseries/partition.hpp"
#include "qseries/pochhammer.hpp"
#include "qseries/reflect.hpp"

namespace qseries {

std::string to_string(CheckMode mode) {
  switch (mode) {
    case CheckMode::ExactPolynomial: return "exact-polynomial";
    case CheckMode::AgreeToOrder: return "agree-to-order";
    case CheckMode::StabilizedLimit: return "stabilized-limit";
  }
  return "?";
}

std::string to_string(ProofStatus status) { return status == ProofStatus::Proved ? "proved" : "conjectural"; }

std::string ParamRange::format(int value) const {
  const int k = value - min;
  if (!labels.empty() && k >= 0 && k < static_cast<int>(labels.size())) return labels[static_cast<size_t>(k)];
  return std::to_string(value);
}

int ParamRange::parse(std::string_view text) const {
  for (size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == text) return min + static_cast<int>(k);
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("bad value '" + std::string(text) + "' for parameter " + name);
  if (v < min || (max && v > *max)) throw UsageError("parameter " + name + "=" + std::to_string(v) + " out of domain");
  return v;
}

CheckOutcome compare(const SidePair& sides) {
  CheckOutcome out;
  if (sides.lhs.exact() && sides.rhs.exact()) {
    out.first_discrepancy = first_difference_exact(sides.lhs, sides.rhs);
  } else {
    const int window = std::min(sides.lhs.valid_to(), sides.rhs.valid_to());
    out.first_discrepancy = first_discrepancy(sides.lhs, sides.rhs, window);
  }
  out.pass = !out.first_discrepancy;
  out.detail = sides.note;
  return out;
}

ProofStatus IdentityRecord::status_at(const ParamValues& values) const {
  return status_for ? status_for(values) : status;
}

bool IdentityRecord::admits(const ParamValues& values) const { return !admissible || admissible(values); }

CheckOutcome IdentityRecord::run(const ParamValues& values, const CheckContext& context) const {
  if (check) return check(values, context);
  return compare(build(values, context));
}

namespace {

using Values = ParamValues;

ParamRange sweep_param(std::string name, int lo, int hi, int min = 0) {
  return ParamRange{std::move(name), lo, hi, min, std::nullopt, true, {}};
}

ParamRange select_param(std::string name, int lo, int hi, std::vector<std::string> labels = {}) {
  return ParamRange{std::move(name), lo, hi, lo, hi, false, std::move(labels)};
}

const std::vector<std::string> kClasses = {"0mod3", "1mod3", "2mod3"};

using Exact1 = std::function<SidePair(int)>;

IdentityRecord exact_entry(std::string id, std::string anchor, ParamRange p, Exact1 f) {
  IdentityRecord r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.mode = CheckMode::ExactPolynomial;
  r.params = {std::move(p)};
  r.build = [f = std::move(f)](const Values& v, const CheckContext&) { return f(v[0]); };
  return r;
}

IdentityRecord agree_entry(std::string id, std::string anchor, std::function<LaurentSeries(int)> lhs,
                           std::function<LaurentSeries(int)> rhs, ProofStatus status = ProofStatus::Proved) {
  IdentityRecord r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.mode = CheckMode::AgreeToOrder;
  r.status = status;
  r.order_key = "agree";
  r.build = [lhs = std::move(lhs), rhs = std::move(rhs)](const Values&, const CheckContext& c) {
    return SidePair{lhs(c.order), rhs(c.order), ""};
  };
  return r;
}

std::string stabilized_note(const std::string& what, int m) { return "stabilized at " + what + "=" + std::to_string(m); }

StabilizedSeries kr_limit(int i, const CheckContext& c) {
  return stabilized_limit([i](int N, int T) { return kr_finite(i, N, Precision::up_to(T)); }, c.order, c.stabilize);
}

std::set<Partition> enumerate_all(const ConstraintProfile& profile) {
  std::set<Partition> out;
  const LaurentSeries g = generating_polynomial(profile);
  const int top = g.is_zero() ? 0 : g.high();
  for (int n = 0; n <= top; ++n)
    for (auto& p : enumerate(n, profile)) out.insert(std::move(p));
  return out;
}

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> c;

  // Rogers-Ramanujan and relatives
  c.push_back(exact_entry("bressoud-finite", "finite Rogers-Ramanujan identity (Bressoud)", sweep_param("N", 0, 40),
                          [](int N) { return SidePair{bressoud_lhs(N), bressoud_rhs(N), ""}; }));
  c.push_back(exact_entry("bressoud-reflected", "finite Rogers-Ramanujan identity under q -> 1/q",
                          sweep_param("N", 0, 40),
                          [](int N) { return SidePair{bressoud_reflected_lhs(N), bressoud_reflected_rhs(N), ""}; }));
  c.push_back(agree_entry("rr-product", "first Rogers-Ramanujan identity, sum = product", rr_sum, rr_product));
  c.push_back(agree_entry("rr-theta", "Rogers-Ramanujan product via Jacobi triple product", rr_product, rr_theta));
  c.push_back(exact_entry("schur-finite", "Schur's finite Rogers-Ramanujan identity", sweep_param("N", 0, 40),
                          [](int N) { return SidePair{schur_lhs(N), schur_rhs(N), ""}; }));
  c.push_back(exact_entry("andrews-even", "reflected Schur polynomial, N = 2M (Andrews)", sweep_param("M", 0, 40),
                          [](int M) { return SidePair{andrews_even_lhs(M), andrews_even_rhs(M), ""}; }));
  c.push_back(exact_entry("andrews-odd", "reflected Schur polynomial, N = 2M+1 (Andrews)", sweep_param("M", 0, 40),
                          [](int M) { return SidePair{andrews_odd_lhs(M), andrews_odd_rhs(M), ""}; }));
  c.push_back(agree_entry("rogers-even", "Rogers' mod-20 limit of the even Andrews family", rogers_even_sum,
                          rogers_even_product));
  c.push_back(agree_entry("rogers-odd", "Rogers' mod-20 limit of the odd Andrews family", rogers_odd_sum,
                          rogers_odd_product));
  c.push_back(agree_entry("bressoud79-a", "instance of a Bressoud identity, (q^3;q^3)^2/(q;q)(q^6;q^6)", bressoud79_a_sum,
                          bressoud79_a_product));
  c.push_back(agree_entry("bressoud79-b", "instance of a Bressoud identity, (q^6;q^6)^2/(q^2;q^2)(q^3;q^3)", bressoud79_b_sum,
                          bressoud79_b_product));
  c.push_back(exact_entry("eqid", "single-sum binomial identity, identically zero", sweep_param("L", 0, 300), [](int L) {
    return SidePair{eqid(L), LaurentSeries(), ""};
  }));
  c.back().sweep = [](const Values&, int lo, int hi, const CheckContext&,
                      const std::function<bool(int, const CheckOutcome&)>& visit) {
    bool go = true;
    eqid_sweep(hi, [&](int L, const LaurentSeries& s) {
      if (!go || L < lo) return;
      go = visit(L, compare(SidePair{s, LaurentSeries(), ""}));
    });
  };

  // Capparelli
  c.push_back(agree_entry("capparelli-analytic", "first Capparelli identity, double sum = product",
                          capparelli_analytic_sum, capparelli_analytic_product));
  c.push_back(exact_entry("capparelli-finite-43", "finite Capparelli identity", sweep_param("N", 0, 24),
                          [](int N) { return SidePair{capparelli43_lhs(N), capparelli43_rhs(N), ""}; }));
  c.push_back(exact_entry("capparelli-43-reflection-even", "finite Capparelli sum at N = 2M under q -> 1/q",
                          sweep_param("M", 0, 12), [](int M) {
                            return SidePair{reflect(capparelli43_lhs(2 * M), capparelli_reflection_exponent(2 * M)),
                                            capparelli_reflected_even_lhs(M), ""};
                          }));
  c.push_back(exact_entry("capparelli-43-reflection-odd", "finite Capparelli sum at N = 2M-1 under q -> 1/q",
                          sweep_param("M", 1, 12, 1), [](int M) {
                            return SidePair{
                                reflect(capparelli43_lhs(2 * M - 1), capparelli_reflection_exponent(2 * M - 1)),
                                capparelli_reflected_odd_lhs(M), ""};
                          }));
  c.push_back(exact_entry("capparelli-reflected-even", "reflected finite Capparelli identity, N = 2M",
                          sweep_param("M", 0, 12), [](int M) {
                            return SidePair{capparelli_reflected_even_lhs(M), capparelli_reflected_even_rhs(M), ""};
                          }));
  c.push_back(exact_entry("capparelli-reflected-odd", "reflected finite Capparelli identity, N = 2M-1",
                          sweep_param("M", 0, 12), [](int M) {
                            return SidePair{capparelli_reflected_odd_lhs(M), capparelli_reflected_odd_rhs(M),
                                            "right side with [2M-1 choose 2c+1] and (-q^2,-q^4;q^6)_{M-1-c}"};
                          }));
  c.push_back(agree_entry("capparelli-reflected-even-limit", "even reflected Capparelli limit, a,b sum = mod-48 product",
                          capparelli_reflected_even_limit_sum, capparelli_reflected_even_limit_product));
  c.push_back(agree_entry("capparelli-reflected-even-series",
                          "even reflected Capparelli limit, single sum = mod-48 product",
                          capparelli_reflected_even_limit_series, capparelli_reflected_even_limit_product));
  c.push_back(agree_entry("capparelli-reflected-odd-limit", "odd reflected Capparelli limit, a,b sum = mod-48 product",
                          capparelli_reflected_odd_limit_sum, capparelli_reflected_odd_limit_product));
  c.push_back(agree_entry("capparelli-reflected-odd-series",
                          "odd reflected Capparelli limit, single sum = mod-48 product",
                          capparelli_reflected_odd_limit_series, capparelli_reflected_odd_limit_product));
  c.push_back(exact_entry("capparelli-finite-71", "second finite Capparelli identity (trinomial form)",
                          sweep_param("N", 0, 24),
                          [](int N) { return SidePair{capparelli71_lhs(N), capparelli71_rhs(N), ""}; }));
  c.push_back(exact_entry("capparelli-71-reflection", "second finite Capparelli sum under q -> 1/q",
                          sweep_param("N", 0, 24), [](int N) {
                            return SidePair{reflect(capparelli71_lhs(N), N * (3 * N + 1)),
                                            capparelli71_reflected_lhs(N), ""};
                          }));
  c.push_back(exact_entry("capparelli-71-reflected", "reflected second finite Capparelli identity",
                          sweep_param("N", 0, 24), [](int N) {
                            return SidePair{capparelli71_reflected_lhs(N), capparelli71_reflected_rhs(N), ""};
                          }));
  {
    IdentityRecord r;
    r.id = "capparelli-71-limit";
    r.anchor = "limit of the reflected second Capparelli family, 1/(q;q^3)";
    r.mode = CheckMode::StabilizedLimit;
    r.order_key = "agree";
    r.build = [](const Values&, const CheckContext& ctx) {
      auto lim = stabilized_limit([](int N, int T) { return capparelli71_reflected_rhs(N, T); }, ctx.order,
                                  ctx.stabilize);
      return SidePair{lim.series, capparelli71_limit_product(ctx.order), stabilized_note("N", lim.m)};
    };
    c.push_back(std::move(r));
  }

  // Kanade-Russell families
  c.push_back(exact_entry("kr4-recursion", "finite KR4 sum = S_N recursion", sweep_param("N", 0, 40),
                          [](int N) { return SidePair{kr_finite(4, N), s_recursion(N), ""}; }));
  c.push_back(exact_entry("kr4-enumeration", "finite KR4 sum = partitions with the I4 conditions, parts <= N",
                          sweep_param("N", 0, 12), [](int N) {
                            return SidePair{kr_finite(4, N), generating_polynomial(ConstraintProfile::i4(N)), ""};
                          }));
  c.push_back(exact_entry("kr4-parts", "finite KR4 sum refined by number of parts", sweep_param("N", 0, 12), nullptr));
  c.back().build = nullptr;
  c.back().check = [](const Values& v, const CheckContext&) {
    const int N = v[0];
    const BivariateSeries a = kr_finite_x(4, N);
    const BivariateSeries b = generating_polynomial_by_parts(ConstraintProfile::i4(N));
    CheckOutcome out;
    out.pass = true;
    for (int j = 0; j <= std::max(a.x_degree(), b.x_degree()); ++j) {
      auto d = first_difference_exact(a.slice(j), b.slice(j));
      if (d) {
        out.pass = false;
        out.first_discrepancy = d;
        out.detail = "x^" + std::to_string(j) + " slice differs";
        break;
      }
    }
    return out;
  };
  c.push_back(exact_entry("kr4-motions", "I4 partitions generated from minimal configurations by motions",
                          sweep_param("N", 0, 10), nullptr));
  c.back().build = nullptr;
  c.back().check = [](const Values& v, const CheckContext&) {
    const int N = v[0];
    const auto profile = ConstraintProfile::i4(N);
    const auto expected = enumerate_all(profile);
    std::set<Partition> got;
    for (int n = 0; 2 * n <= N + 1; ++n)
      for (int m = 0; m + 2 * n <= N + 1; ++m)
        for (auto& p : generate_by_motions(m, n, N)) got.insert(p);
    CheckOutcome out;
    out.pass = got == expected;
    if (!out.pass) {
      std::vector<Partition> diff;
      std::set_symmetric_difference(got.begin(), got.end(), expected.begin(), expected.end(),
                                    std::back_inserter(diff));
      int first = diff.front().size();
      for (const auto& p : diff) first = std::min(first, p.size());
      out.first_discrepancy = first;
      out.detail = std::to_string(diff.size()) + " partitions differ, e.g. " + diff.front().to_string();
    } else {
      out.detail = std::to_string(got.size()) + " partitions";
    }
    return out;
  };
  {
    IdentityRecord r;
    r.id = "kr-stabilize";
    r.anchor = "finite KR_i sums agree below q^{N+1}";
    r.mode = CheckMode::ExactPolynomial;
    r.params = {select_param("i", 1, 5), sweep_param("N", 1, 30, 1)};
    r.build = [](const Values& v, const CheckContext&) {
      const int i = v[0], N = v[1];
      return SidePair{kr_finite(i, N).truncate(N), kr_finite(i, N + 1).truncate(N), ""};
    };
    c.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "kr-sum";
    r.anchor = "limit of finite KR_i sums = double sum with 1/((q;q)_m (q^3;q^3)_n)";
    r.mode = CheckMode::StabilizedLimit;
    r.params = {select_param("i", 1, 5)};
    r.order_key = "kr";
    r.build = [](const Values& v, const CheckContext& ctx) {
      auto lim = kr_limit(v[0], ctx);
      return SidePair{lim.series, kr_infinite(v[0], ctx.order), stabilized_note("N", lim.m)};
    };
    c.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "kr-product";
    r.anchor = "Kanade-Russell mod-9 conjectures";
    r.mode = CheckMode::StabilizedLimit;
    r.status = ProofStatus::Conjectural;
    r.params = {select_param("i", 1, 5)};
    r.order_key = "kr";
    r.build = [](const Values& v, const CheckContext& ctx) {
      auto lim = kr_limit(v[0], ctx);
      return SidePair{lim.series, kr_product(v[0], ctx.order),
                      stabilized_note("N", lim.m) + "; product " + kr_product_spec(v[0]).to_string()};
    };
    c.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "f-recurrence";
    r.anchor = "F(N,M) = F(N-1,M) + q^{N-1} F(N-2,M-1) for 3 not dividing N";
    r.mode = CheckMode::ExactPolynomial;
    r.params = {sweep_param("N", 1, 30, 1), sweep_param("M", 0, 20)};
    r.admissible = [](const Values& v) { return v[0] % 3 != 0; };
    r.build = [](const Values& v, const CheckContext&) {
      const int N = v[0], M = v[1];
      return SidePair{f_sum(N, M), f_sum(N - 1, M) + f_sum(N - 2, M - 1).shift(N - 1), ""};
    };
    c.push_back(std::move(r));
  }
  c.push_back(exact_entry("f-general", "KR1(q,N) = F(N+1, floor(2N/3)+1)", sweep_param("N", 0, 30), [](int N) {
    return SidePair{kr_finite(1, N), f_sum(N + 1, floor_two_thirds(N) + 1), ""};
  }));

  // reflected families
  {
    IdentityRecord r;
    r.id = "rk-sum";
    r.anchor = "limit of reflected KR_i(q,3M+l) = a,b double sum";
    r.mode = CheckMode::StabilizedLimit;
    r.params = {select_param("i", 1, 5), select_param("class", 0, 2, kClasses)};
    r.order_key = "limit";
    r.build = [](const Values& v, const CheckContext& ctx) {
      auto lim = rk_limit(v[0], v[1], ctx.order, ctx.stabilize);
      return SidePair{lim.series, ab_form(v[0], v[1]).limit(ctx.order), stabilized_note("M", lim.m)};
    };
    c.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "rk-sum-finite";
    r.anchor = "reflected KR_i(q,3M+l) = a,b double sum at finite M";
    r.mode = CheckMode::ExactPolynomial;
    r.params = {select_param("i", 4, 5), select_param("class", 0, 2, kClasses), sweep_param("M", 0, 12)};
    r.admissible = [](const Values& v) { return ab_form(v[0], v[1]).has_finite_form(); };
    r.build = [](const Values& v, const CheckContext&) {
      const int i = v[0], l = v[1], M = v[2];
      return SidePair{rk_finite(i, 3 * M + l), ab_form(i, l).finite(M), ""};
    };
    c.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "rk-product";
    r.anchor = "reflected KR4, KR5 limits = mod-45 products";
    r.mode = CheckMode::StabilizedLimit;
    r.status = ProofStatus::Conjectural;
    r.params = {select_param("i", 4, 5), select_param("class", 0, 2, kClasses)};
    r.order_key = "limit";
    r.admissible = [](const Values& v) { return v[0] == 4 ? v[1] != 2 : v[1] != 0; };
    r.build = [](const Values& v, const CheckContext& ctx) {
      auto lim = rk_limit(v[0], v[1], ctx.order, ctx.stabilize);
      auto spec = rk_product_spec(v[0], v[1]);
      return SidePair{lim.series, expand_product(spec, ctx.order),
                      stabilized_note("M", lim.m) + "; product " + spec.to_string()};
    };
    c.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "rk-bracket";
    r.anchor = "reflected KR1-KR3 limits = combinations of mod-45 brackets";
    r.mode = CheckMode::StabilizedLimit;
    r.status = ProofStatus::Conjectural;
    r.params = {select_param("i", 1, 3), select_param("class", 0, 2, kClasses), select_param("form", 0, 1, {"a", "b"})};
    r.order_key = "limit";
    r.admissible = [](const Values& v) { return v[1] != 1; };
    r.build = [](const Values& v, const CheckContext& ctx) {
      auto lim = rk_limit(v[0], v[1], ctx.order, ctx.stabilize);
      auto combo = rk_bracket_form(v[0], v[1], v[2]);
      return SidePair{lim.series, expand_combination(combo, ctx.order),
                      stabilized_note("M", lim.m) + "; " + to_string(combo)};
    };
    c.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "rk-linear";
    r.anchor = "linear relations between the three reflected limits of KR_i";
    r.mode = CheckMode::StabilizedLimit;
    r.params = {select_param("i", 1, 5)};
    r.order_key = "linear";
    r.status_for = [](const Values& v) { return v[0] == 3 ? ProofStatus::Conjectural : ProofStatus::Proved; };
    r.build = [](const Values& v, const CheckContext& ctx) {
      const int i = v[0], T = ctx.order;
      auto L = [&](int k, int l) { return rk_limit(k, l, T, ctx.stabilize).series; };
      switch (i) {
        case 1: return SidePair{L(1, 1), L(1, 0).shift(1) + L(1, 2), "RK1(3M+1) = q RK1(3M) + RK1(3M+2)"};
        case 2: return SidePair{L(2, 1), L(2, 0) + L(2, 2), "RK2(3M+1) = RK2(3M) + RK2(3M+2)"};
        case 4: return SidePair{L(4, 2), L(4, 0) + L(4, 1).shift(2), "RK4(3M+2) = RK4(3M) + q^2 RK4(3M+1)"};
        case 5: return SidePair{L(5, 0), L(5, 1) + L(5, 2).shift(2), "RK5(3M) = RK5(3M+1) + q^2 RK5(3M+2)"};
        default: break;
      }
      // RK3(3M+1) against both readings of its right side
      auto lhs = L(3, 1);
      auto literal = first_discrepancy(lhs, L(2, 0) + L(2, 2).shift(2), T);
      std::string note = "substituted reading RK3(3M) + q^2 RK3(3M+2); literal reading RK2(3M) + q^2 RK2(3M+2) ";
      note += literal ? "fails at q^" + std::to_string(*literal) : "also holds";
      return SidePair{lhs, L(3, 0) + L(3, 2).shift(2), note};
    };
    c.push_back(std::move(r));
  }
  {
    std::vector<std::string> names;
    for (const auto& pc : positivity_cases()) names.push_back(pc.name);
    IdentityRecord r;
    r.id = "rk-positivity";
    r.anchor = "bracket combinations times (q^3;q^3)/(q^45;q^45) have nonnegative coefficients";
    r.mode = CheckMode::AgreeToOrder;
    r.status = ProofStatus::Conjectural;
    r.params = {select_param("case", 0, static_cast<int>(names.size()) - 1, names)};
    r.order_key = "positivity";
    r.check = [](const Values& v, const CheckContext& ctx) {
      const auto cases = positivity_cases();
      const auto& pc = cases.at(static_cast<size_t>(v[0]));
      CheckOutcome out;
      out.first_discrepancy =
          positivity_scan(expand_case(pc, ctx.order, positivity_multiplier()), ProductSpec{}, ctx.order);
      out.pass = !out.first_discrepancy;
      out.detail = out.pass ? "no negative coefficient" : "negative coefficient";
      return out;
    };
    c.push_back(std::move(r));
  }

  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (size_t k = 1; k < c.size(); ++k)
    if (c[k].id == c[k - 1].id) throw std::logic_error("duplicate catalog id " + c[k].id);
  return c;
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> records = build_catalog();
  return records;
}

const IdentityRecord& find_record(std::string_view id) {
  for (const auto& r : catalog())
    if (r.id == id) return r;
  throw UsageError("unknown identity id '" + std::string(id) + "'");
}

int OrderConfig::order_for(const std::string& key) const {
  if (override_order) return *override_order;
  auto it = orders.find(key);
  if (it == orders.end()) throw UsageError("no order configured for '" + key + "'");
  return it->second;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_positive(std::string_view key, std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v <= 0)
    throw UsageError("config: " + std::string(key) + " needs a positive integer, got '" + std::string(text) + "'");
  return v;
}

}  // namespace

void OrderConfig::apply(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  line = trim(line);
  if (line.empty()) return;
  auto eq = line.find('=');
  if (eq == std::string_view::npos) throw UsageError("config: expected key=value, got '" + std::string(line) + "'");
  auto key = trim(line.substr(0, eq));
  auto value = trim(line.substr(eq + 1));
  if (key == "stabilize.max_m") {
    stabilize.max_m = parse_positive(key, value);
  } else if (key.starts_with("order.") && orders.count(std::string(key.substr(6)))) {
    orders[std::string(key.substr(6))] = parse_positive(key, value);
  } else {
    throw UsageError("config: unknown key '" + std::string(key) + "'");
  }
}

OrderConfig OrderConfig::from_text(std::string_view text) {
  OrderConfig config;
  while (!text.empty()) {
    auto nl = text.find('\n');
    config.apply(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return config;
}

OrderConfig OrderConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

}  // namespace qseries
