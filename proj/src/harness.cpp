#include "qseries/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qseries/errors.hpp"
#include "qseries/kr.hpp"
#include "qseries/partition.hpp"
#include "qseries/reflect.hpp"

namespace qseries {

std::string to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::NonConvergent: return "non-convergent";
  }
  return "?";
}

ParamArg ParamArg::parse(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 == text.size())
    throw UsageError("--param expects name=value or name=lo..hi, got '" + std::string(text) + "'");
  ParamArg a;
  a.name = std::string(text.substr(0, eq));
  auto value = text.substr(eq + 1);
  if (auto dots = value.find(".."); dots != std::string_view::npos) {
    a.lo = std::string(value.substr(0, dots));
    a.hi = std::string(value.substr(dots + 2));
  } else {
    a.lo = a.hi = std::string(value);
  }
  return a;
}

Suite parse_suite(std::string_view text) {
  if (text == "proved") return Suite::Proved;
  if (text == "conjectural") return Suite::Conjectural;
  if (text == "all") return Suite::All;
  throw UsageError("unknown suite '" + std::string(text) + "' (proved, conjectural, all)");
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Range {
  int lo;
  int hi;
};

std::string point_text(const IdentityRecord& r, const ParamValues& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) {
    if (!r.params[k].sweep) continue;
    if (!s.empty()) s += ", ";
    s += r.params[k].name + "=" + r.params[k].format(v[k]);
  }
  return s;
}

// Runs every admissible sweep point of one selector assignment.
VerificationReport run_assignment(const IdentityRecord& r, ParamValues values, const std::vector<Range>& ranges,
                                  const CheckContext& context, std::optional<int> order) {
  VerificationReport rep;
  rep.id = r.id;
  rep.order = order;
  rep.status_expected = r.status_at(values);
  for (size_t k = 0; k < r.params.size(); ++k) {
    const auto& p = r.params[k];
    std::string v = p.sweep && ranges[k].lo != ranges[k].hi
                        ? p.format(ranges[k].lo) + ".." + p.format(ranges[k].hi)
                        : p.format(p.sweep ? ranges[k].lo : values[k]);
    rep.params.emplace_back(p.name, v);
  }

  std::vector<size_t> sweeps;
  for (size_t k = 0; k < r.params.size(); ++k)
    if (r.params[k].sweep) sweeps.push_back(k);

  int checked = 0;
  std::string last_detail;
  bool failed = false;
  auto record = [&](const ParamValues& v, const CheckOutcome& out) {
    ++checked;
    last_detail = out.detail;
    if (out.pass) return true;
    failed = true;
    rep.status = ReportStatus::Fail;
    // a failing check always names an exponent
    rep.first_discrepancy = out.first_discrepancy.value_or(0);
    rep.detail = sweeps.empty() ? out.detail : "at " + point_text(r, v) + (out.detail.empty() ? "" : ": " + out.detail);
    return false;
  };

  const auto t0 = Clock::now();
  try {
    if (r.sweep && sweeps.size() == 1 && sweeps[0] + 1 == r.params.size()) {
      const size_t k = sweeps[0];
      r.sweep(values, ranges[k].lo, ranges[k].hi, context, [&](int x, const CheckOutcome& out) {
        values[k] = x;
        return record(values, out);
      });
    } else {
      std::function<bool(size_t)> walk = [&](size_t depth) -> bool {
        if (depth == sweeps.size()) {
          if (!r.admits(values)) return true;
          return record(values, r.run(values, context));
        }
        const size_t k = sweeps[depth];
        for (int x = ranges[k].lo; x <= ranges[k].hi; ++x) {
          values[k] = x;
          if (!walk(depth + 1)) return false;
        }
        return true;
      };
      walk(0);
    }
  } catch (const NonConvergenceError& e) {
    failed = true;
    rep.status = ReportStatus::NonConvergent;
    rep.first_discrepancy.reset();
    rep.detail = std::string(e.what()) + " (last M=" + std::to_string(e.last_m()) +
                 ", last discrepancy at q^" + std::to_string(e.last_discrepancy()) + ")";
  } catch (const DomainError& e) {
    throw UsageError(r.id + ": " + e.what());
  }
  rep.elapsed_ms = ms_since(t0);
  if (!failed) {
    rep.detail = last_detail;
    if (checked > 1) rep.detail = std::to_string(checked) + " cases" + (last_detail.empty() ? "" : "; " + last_detail);
  }
  return rep;
}

bool any_admissible(const IdentityRecord& r, ParamValues values, const std::vector<Range>& ranges) {
  if (!r.admissible) return true;
  std::function<bool(size_t)> walk = [&](size_t k) -> bool {
    if (k == r.params.size()) return r.admits(values);
    if (!r.params[k].sweep) return walk(k + 1);
    for (int x = ranges[k].lo; x <= ranges[k].hi; ++x) {
      values[k] = x;
      if (walk(k + 1)) return true;
    }
    return false;
  };
  return walk(0);
}

std::vector<VerificationReport> verify_impl(const IdentityRecord& r, const std::vector<ParamArg>& args,
                                            const OrderConfig& config,
                                            const std::function<bool(ProofStatus)>& keep) {
  std::vector<Range> ranges;
  for (const auto& p : r.params) ranges.push_back({p.lo, p.hi});
  for (const auto& a : args) {
    size_t k = 0;
    while (k < r.params.size() && r.params[k].name != a.name) ++k;
    if (k == r.params.size()) throw UsageError(r.id + " has no parameter '" + a.name + "'");
    ranges[k] = {r.params[k].parse(a.lo), r.params[k].parse(a.hi)};
    if (ranges[k].lo > ranges[k].hi) throw UsageError("empty range for parameter " + a.name);
  }

  CheckContext context;
  context.stabilize = config.stabilize;
  std::optional<int> order;
  if (!r.order_key.empty()) {
    order = config.order_for(r.order_key);
    if (*order < 0) throw UsageError("order must be nonnegative");
    context.order = *order;
  }

  std::vector<VerificationReport> out;
  ParamValues values(r.params.size(), 0);
  for (size_t k = 0; k < r.params.size(); ++k) values[k] = ranges[k].lo;
  std::function<void(size_t)> select = [&](size_t k) {
    if (k == r.params.size()) {
      if (!any_admissible(r, values, ranges)) return;
      if (keep && !keep(r.status_at(values))) return;
      out.push_back(run_assignment(r, values, ranges, context, order));
      return;
    }
    if (r.params[k].sweep) return select(k + 1);
    for (int x = ranges[k].lo; x <= ranges[k].hi; ++x) {
      values[k] = x;
      select(k + 1);
    }
  };
  select(0);
  return out;
}

}  // namespace

std::vector<VerificationReport> verify(const IdentityRecord& record, const std::vector<ParamArg>& args,
                                       const OrderConfig& config) {
  auto out = verify_impl(record, args, config, nullptr);
  if (out.empty()) throw UsageError(record.id + ": parameters outside the domain");
  return out;
}

std::vector<VerificationReport> verify(std::string_view id, const std::vector<ParamArg>& args,
                                       const OrderConfig& config) {
  return verify(find_record(id), args, config);
}

std::vector<VerificationReport> verify_all(Suite suite, const OrderConfig& config) {
  std::vector<VerificationReport> out;
  auto keep = [suite](ProofStatus s) {
    return suite == Suite::All || (suite == Suite::Proved) == (s == ProofStatus::Proved);
  };
  for (const auto& r : catalog()) {
    auto reps = verify_impl(r, {}, config, keep);
    out.insert(out.end(), std::make_move_iterator(reps.begin()), std::make_move_iterator(reps.end()));
  }
  return out;
}

VerificationReport oracle_check(std::string_view profile, int max_part, int size_bound) {
  if (profile != "I4" && profile != "i4") throw UsageError("unknown profile '" + std::string(profile) + "' (I4)");
  if (max_part < 0 || size_bound < 0) throw UsageError("oracle-check needs --max-part and --size >= 0");
  const auto t0 = Clock::now();
  const int N = max_part, S = size_bound;
  const auto p = ConstraintProfile::i4(N);

  VerificationReport rep;
  rep.id = "oracle-check";
  rep.params = {{"profile", "I4"}, {"N", std::to_string(N)}, {"size", std::to_string(S)}};
  rep.order = S;
  std::vector<std::string> failures;
  std::optional<int> first;
  auto note = [&](const std::string& what, std::optional<int> d) {
    if (!d) return;
    failures.push_back(what + " at q^" + std::to_string(*d));
    if (!first || *d < *first) first = d;
  };

  const auto recursion = s_recursion(N).truncate(S);
  const auto sum = kr_finite(4, N, Precision::up_to(S));
  const auto enumeration = generating_polynomial(p, S);
  note("S_N vs KR4 sum", first_discrepancy(recursion, sum, S));
  note("KR4 sum vs enumeration", first_discrepancy(sum, enumeration, S));

  std::set<Partition> expected, moved;
  for (int n = 0; n <= S; ++n)
    for (auto& q : enumerate(n, p)) expected.insert(std::move(q));
  for (int n = 0; 2 * n <= N + 1; ++n)
    for (int m = 0; m + 2 * n <= N + 1; ++m)
      for (auto& q : generate_by_motions(m, n, N, S)) moved.insert(q);
  if (moved != expected) {
    int d = S + 1;
    for (const auto& q : moved)
      if (!expected.count(q)) d = std::min(d, q.size());
    for (const auto& q : expected)
      if (!moved.count(q)) d = std::min(d, q.size());
    note("motions vs enumeration", d);
  }

  const auto refined = kr_finite_x(4, N);
  const auto counted = generating_polynomial_by_parts(p, S);
  auto coeff = [](const LaurentSeries& f, int n) {
    return f.is_zero() || n < f.low() || n > f.high() ? Integer(0) : f.coefficient(n);
  };
  for (int j = 0; j <= std::max(refined.x_degree(), counted.x_degree()); ++j) {
    std::optional<int> d;
    for (int n = 0; n <= S && !d; ++n)
      if (coeff(refined.slice(j), n) != coeff(counted.slice(j), n)) d = n;
    if (d) {
      note("x^" + std::to_string(j) + " slice vs parts count", d);
      break;
    }
  }

  rep.elapsed_ms = ms_since(t0);
  rep.first_discrepancy = first;
  rep.status = failures.empty() ? ReportStatus::Pass : ReportStatus::Fail;
  if (failures.empty()) {
    rep.detail = std::to_string(expected.size()) + " partitions; recursion, sum, enumeration, motions agree";
  } else {
    for (size_t k = 0; k < failures.size(); ++k) rep.detail += (k ? "; " : "") + failures[k];
  }
  return rep;
}

std::vector<VerificationReport> positivity(int order) {
  if (order < 0) throw UsageError("order must be nonnegative");
  OrderConfig config;
  config.override_order = order;
  return verify(find_record("rk-positivity"), {}, config);
}

std::vector<CatalogEntry> list_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& r : catalog()) {
    CatalogEntry e{r.id, r.anchor, to_string(r.mode), to_string(r.status), ""};
    if (r.status_for) e.status = "mixed";
    for (const auto& p : r.params) {
      if (!e.domain.empty()) e.domain += ", ";
      e.domain += p.name + "=" + p.format(p.lo) + ".." + p.format(p.hi);
    }
    if (!r.order_key.empty()) e.domain += std::string(e.domain.empty() ? "" : ", ") + "order." + r.order_key;
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

std::string params_text(const VerificationReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) s += (s.empty() ? "" : ",") + k + "=" + v;
  return s.empty() ? "-" : s;
}

std::string fixed_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

}  // namespace

std::string format_human(const VerificationReport& r, const FormatOptions& options) {
  std::string s = to_string(r.status);
  s += " " + r.id + " [" + params_text(r) + "]";
  s += " order=" + (r.order ? std::to_string(*r.order) : std::string("exact"));
  s += " expected=" + to_string(r.status_expected);
  if (r.first_discrepancy) s += " first_discrepancy=" + std::to_string(*r.first_discrepancy);
  if (options.timing) s += " elapsed=" + fixed_ms(r.elapsed_ms) + "ms";
  if (!r.detail.empty()) s += " -- " + r.detail;
  return s;
}

std::string format_human(const std::vector<VerificationReport>& reports, const FormatOptions& options) {
  std::string s;
  int passed = 0;
  for (const auto& r : reports) {
    s += format_human(r, options) + "\n";
    passed += r.passed();
  }
  s += std::to_string(passed) + "/" + std::to_string(reports.size()) + " passed\n";
  return s;
}

std::string format_json(const std::vector<VerificationReport>& reports, const FormatOptions& options) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["order"] = r.order ? nlohmann::ordered_json(*r.order) : nlohmann::ordered_json("exact");
    j["status"] = to_string(r.status);
    j["first_discrepancy"] = r.first_discrepancy ? nlohmann::ordered_json(*r.first_discrepancy) : nullptr;
    j["elapsed_ms"] = options.timing ? nlohmann::ordered_json(r.elapsed_ms) : nullptr;
    j["status_expected"] = to_string(r.status_expected);
    j["detail"] = r.detail;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string format_catalog(const std::vector<CatalogEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << e.id << "  [" << e.mode << ", " << e.status << "]";
    if (!e.domain.empty()) out << "  " << e.domain;
    out << "\n    " << e.anchor << "\n";
  }
  out << entries.size() << " entries\n";
  return out.str();
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

}  // namespace qseries
