// qsv: batch verification of the q-series identity catalog.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qseries/bracket.hpp"
#include "qseries/errors.hpp"
#include "qseries/harness.hpp"
#include "qseries/pochhammer.hpp"

namespace {

using namespace qseries;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int report(const std::vector<VerificationReport>& reports, const std::string& json_path, const FormatOptions& fmt) {
  std::cout << format_human(reports, fmt);
  if (!json_path.empty()) write_file(json_path, format_json(reports, fmt));
  return all_passed(reports) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite and infinite q-series identities"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, json_path;
  bool no_timing = false;
  std::optional<int> order;
  app.add_option("--config", config_path, "key=value file (order.<key>=T, stabilize.max_m=M)")
      ->check(CLI::ExistingFile);
  app.add_option("--json", json_path, "write the reports as JSON to this path ('-' for stdout)");
  app.add_flag("--no-timing", no_timing, "omit elapsed times, for byte-identical output");

  auto* list = app.add_subcommand("list", "list the catalog");

  auto* verify_cmd = app.add_subcommand("verify", "check one catalog entry");
  std::string id;
  std::vector<std::string> params;
  verify_cmd->add_option("id", id, "identity id")->required();
  verify_cmd->add_option("--param", params, "name=value or name=lo..hi")->allow_extra_args(false);
  verify_cmd->add_option("--order", order, "truncation order")->check(CLI::PositiveNumber);

  auto* all_cmd = app.add_subcommand("verify-all", "check every entry of a suite");
  std::string suite = "all";
  all_cmd->add_option("--suite", suite, "proved, conjectural or all")
      ->check(CLI::IsMember({"proved", "conjectural", "all"}));
  all_cmd->add_option("--order", order, "truncation order for all non-exact entries")->check(CLI::PositiveNumber);

  auto* expand_cmd = app.add_subcommand("expand", "expand a product or bracket spec");
  std::string spec;
  int expand_order = 0;
  expand_cmd->add_option("spec", spec, "e.g. '1/(q,q^4;q^5)' or 'br(1,4,6,7)'")->required();
  expand_cmd->add_option("--order", expand_order, "truncation order")->required()->check(CLI::PositiveNumber);

  auto* oracle_cmd = app.add_subcommand("oracle-check", "cross-check the KR4 sum against partition oracles");
  std::string profile;
  int max_part = 0, size = 0;
  oracle_cmd->add_option("profile", profile, "constraint profile (I4)")->required();
  oracle_cmd->add_option("--max-part", max_part, "largest part N")->required()->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--size", size, "largest partition size")->required()->check(CLI::NonNegativeNumber);

  auto* pos_cmd = app.add_subcommand("positivity", "positivity scan of the bracket combinations");
  pos_cmd->add_option("--order", order, "truncation order")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    OrderConfig config = config_path.empty() ? OrderConfig{} : OrderConfig::from_file(config_path);
    config.override_order = order;
    FormatOptions fmt;
    fmt.timing = !no_timing;

    if (*list) {
      const auto entries = list_catalog();
      std::cout << format_catalog(entries);
      if (!json_path.empty()) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& e : entries)
          doc.push_back({{"id", e.id}, {"anchor", e.anchor}, {"mode", e.mode}, {"status", e.status},
                         {"domain", e.domain}});
        write_file(json_path, doc.dump(2) + "\n");
      }
      return kExitPass;
    }
    if (*verify_cmd) {
      std::vector<ParamArg> args;
      for (const auto& p : params) args.push_back(ParamArg::parse(p));
      return report(verify(id, args, config), json_path, fmt);
    }
    if (*all_cmd) return report(verify_all(parse_suite(suite), config), json_path, fmt);
    if (*expand_cmd) {
      const ProductSpec p = ProductSpec::parse(spec);
      const LaurentSeries s = expand_product(p, expand_order);
      std::cout << p.to_string() << " = " << s.to_string() << "\n";
      if (!json_path.empty()) {
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (int k = 0; k <= expand_order; ++k) coeffs.push_back(s.coefficient(k).get_str());
        nlohmann::ordered_json doc{{"spec", p.to_string()}, {"order", expand_order}, {"coefficients", coeffs}};
        write_file(json_path, doc.dump(2) + "\n");
      }
      return kExitPass;
    }
    if (*oracle_cmd) return report({oracle_check(profile, max_part, size)}, json_path, fmt);
    if (*pos_cmd) return report(positivity(order.value_or(config.orders.at("positivity"))), json_path, fmt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
