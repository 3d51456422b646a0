#include <gtest/gtest.h>

#include <set>

#include "json.hpp"
#include "qseries/catalog.hpp"
#include "qseries/errors.hpp"
#include "qseries/harness.hpp"
#include "qseries/pochhammer.hpp"
#include "test_util.hpp"

using namespace qseries;
using testutil::poly;

namespace {

OrderConfig at_order(int T) {
  OrderConfig c;
  c.override_order = T;
  return c;
}

SidePair build(const std::string& id, ParamValues v, int order = 0) {
  CheckContext ctx;
  ctx.order = order;
  return find_record(id).build(v, ctx);
}

}  // namespace

TEST(Catalog, IdsUniqueSortedAndAnchored) {
  const auto& c = catalog();
  EXPECT_GE(c.size(), 20u);
  std::set<std::string> ids;
  for (size_t k = 0; k < c.size(); ++k) {
    EXPECT_TRUE(ids.insert(c[k].id).second) << c[k].id;
    EXPECT_FALSE(c[k].anchor.empty()) << c[k].id;
    if (k) EXPECT_LT(c[k - 1].id, c[k].id);
    EXPECT_TRUE(c[k].build || c[k].check) << c[k].id;
    EXPECT_EQ(c[k].order_key.empty(), c[k].mode == CheckMode::ExactPolynomial) << c[k].id;
  }
  EXPECT_EQ(list_catalog().size(), c.size());
  EXPECT_THROW(find_record("no-such-id"), UsageError);
}

TEST(Catalog, BuildExamples) {
  auto b = build("bressoud-finite", {1});
  EXPECT_EQ(b.lhs, poly(0, {1, 1}));
  EXPECT_EQ(b.rhs, poly(0, {1, 1}));
  EXPECT_TRUE(build("eqid", {0}).lhs.is_zero());
  // the a,b sum for RK4(3M) and its product, through q^4
  CheckContext ctx;
  ctx.order = 4;
  auto s = find_record("rk-sum").build({4, 0}, ctx);
  EXPECT_EQ(s.rhs, poly(0, {1, 0, 1, 1, 1}).truncate(4));
  EXPECT_EQ(find_record("rk-product").build({4, 0}, ctx).rhs, s.rhs);
}

TEST(Catalog, ParamLabels) {
  const auto& r = find_record("rk-bracket");
  EXPECT_EQ(r.params[1].format(2), "2mod3");
  EXPECT_EQ(r.params[1].parse("0mod3"), 0);
  EXPECT_EQ(r.params[2].parse("b"), 1);
  EXPECT_THROW(r.params[0].parse("4"), UsageError);
  EXPECT_THROW(r.params[0].parse("x"), UsageError);
}

TEST(Harness, VerifyExamples) {
  auto r = verify("bressoud-finite", {ParamArg::parse("N=40")}, OrderConfig{});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].passed());
  EXPECT_FALSE(r[0].order);
  EXPECT_FALSE(r[0].first_discrepancy);

  r = verify("eqid", {ParamArg::parse("L=300")}, OrderConfig{});
  EXPECT_TRUE(r.at(0).passed());

  r = verify("rk-product", {ParamArg::parse("i=4"), ParamArg::parse("class=0mod3")}, at_order(60));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].passed());
  EXPECT_EQ(r[0].status_expected, ProofStatus::Conjectural);
  EXPECT_EQ(r[0].order, 60);
}

TEST(Harness, SelectorsSplitReports) {
  auto r = verify("rk-product", {}, at_order(20));
  ASSERT_EQ(r.size(), 4u);  // (4,0), (4,1), (5,1), (5,2)
  EXPECT_EQ(r[2].params[0].second, "5");
  EXPECT_EQ(r[2].params[1].second, "1mod3");
  auto s = verify("kr-stabilize", {ParamArg::parse("N=1..5")}, OrderConfig{});
  ASSERT_EQ(s.size(), 5u);
  EXPECT_EQ(s[0].params[1].second, "1..5");
}

TEST(Harness, UsageErrors) {
  EXPECT_THROW(verify("nope", {}, OrderConfig{}), UsageError);
  EXPECT_THROW(verify("eqid", {ParamArg::parse("X=1")}, OrderConfig{}), UsageError);
  EXPECT_THROW(verify("eqid", {ParamArg::parse("L=-1")}, OrderConfig{}), UsageError);
  EXPECT_THROW(verify("eqid", {ParamArg::parse("L=5..2")}, OrderConfig{}), UsageError);
  EXPECT_THROW(verify("kr-product", {ParamArg::parse("i=6")}, OrderConfig{}), UsageError);
  // no mod-45 product for RK4(3M+2)
  EXPECT_THROW(verify("rk-product", {ParamArg::parse("i=4"), ParamArg::parse("class=2mod3")}, OrderConfig{}),
               UsageError);
  EXPECT_THROW(ParamArg::parse("N"), UsageError);
  EXPECT_THROW(parse_suite("some"), UsageError);
}

TEST(Harness, FailureAndNonConvergence) {
  IdentityRecord bad;
  bad.id = "bad";
  bad.anchor = "x";
  bad.params = {ParamRange{"N", 0, 5, 0, std::nullopt, true, {}}};
  bad.build = [](const ParamValues& v, const CheckContext&) {
    // differs from N = 3 on, at q^N
    return SidePair{LaurentSeries::one(), v[0] >= 3 ? poly(0, {1}) + monomial(v[0]) : poly(0, {1}), ""};
  };
  auto r = verify(bad, {}, OrderConfig{});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].status, ReportStatus::Fail);
  EXPECT_EQ(r[0].first_discrepancy, 3);
  EXPECT_NE(r[0].detail.find("N=3"), std::string::npos);

  IdentityRecord never;
  never.id = "never";
  never.anchor = "x";
  never.mode = CheckMode::StabilizedLimit;
  never.order_key = "limit";
  never.build = [](const ParamValues&, const CheckContext& ctx) {
    auto lim = stabilized_limit([](int M, int T) { return monomial(M % 2).truncate(T); }, ctx.order, ctx.stabilize);
    return SidePair{lim.series, lim.series, ""};
  };
  OrderConfig cfg = at_order(10);
  cfg.stabilize.max_m = 40;
  r = verify(never, {}, cfg);
  EXPECT_EQ(r.at(0).status, ReportStatus::NonConvergent);
  EXPECT_FALSE(r[0].first_discrepancy);
  EXPECT_FALSE(all_passed(r));
}

TEST(Harness, OracleCheck) {
  auto r = oracle_check("I4", 10, 40);
  EXPECT_TRUE(r.passed()) << r.detail;
  EXPECT_TRUE(oracle_check("I4", 0, 10).passed());
  EXPECT_TRUE(oracle_check("I4", 30, 30).passed());
  EXPECT_THROW(oracle_check("I7", 3, 3), UsageError);
}

TEST(Harness, PositivityReports) {
  auto r = positivity(60);
  EXPECT_EQ(r.size(), positivity_cases().size());
  EXPECT_TRUE(all_passed(r));
}

TEST(Harness, SuitesAreSeparate) {
  OrderConfig cfg = at_order(20);
  for (const auto& r : verify_all(Suite::Conjectural, cfg)) EXPECT_EQ(r.status_expected, ProofStatus::Conjectural);
  auto linear = verify("rk-linear", {}, cfg);
  ASSERT_EQ(linear.size(), 5u);
  EXPECT_EQ(linear[2].status_expected, ProofStatus::Conjectural);
  EXPECT_NE(linear[2].detail.find("literal reading"), std::string::npos);
  EXPECT_TRUE(all_passed(linear));
}

TEST(Harness, ReportsAreDeterministic) {
  FormatOptions fmt;
  fmt.timing = false;
  auto a = verify("capparelli-finite-43", {}, OrderConfig{});
  auto b = verify("capparelli-finite-43", {}, OrderConfig{});
  EXPECT_EQ(format_json(a, fmt), format_json(b, fmt));
  EXPECT_EQ(format_human(a, fmt), format_human(b, fmt));

  auto j = nlohmann::json::parse(format_json(a, fmt));
  ASSERT_EQ(j.size(), 1u);
  for (const char* key : {"id", "params", "order", "status", "first_discrepancy", "elapsed_ms", "status_expected"})
    EXPECT_TRUE(j[0].contains(key)) << key;
  EXPECT_EQ(j[0]["status"], "pass");
  EXPECT_TRUE(j[0]["first_discrepancy"].is_null());
}

TEST(Config, ParsesKeys) {
  auto c = OrderConfig::from_text("# comment\norder.limit = 30\n\nstabilize.max_m=64  # ceiling\n");
  EXPECT_EQ(c.order_for("limit"), 30);
  EXPECT_EQ(c.order_for("agree"), 100);
  EXPECT_EQ(c.stabilize.max_m, 64);
  c.override_order = 7;
  EXPECT_EQ(c.order_for("positivity"), 7);
  EXPECT_THROW(OrderConfig::from_text("order.nope=3"), UsageError);
  EXPECT_THROW(OrderConfig::from_text("order.limit=0"), UsageError);
  EXPECT_THROW(OrderConfig::from_text("limit"), UsageError);
  EXPECT_THROW(OrderConfig::from_file("/nonexistent/qsv.cfg"), UsageError);
}
