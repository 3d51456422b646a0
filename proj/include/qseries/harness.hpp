#ifndef QSERIES_HARNESS_HPP
#define QSERIES_HARNESS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qseries/catalog.hpp"

namespace qseries {

enum class ReportStatus { Pass, Fail, NonConvergent };
std::string to_string(ReportStatus status);

struct VerificationReport {
  std::string id;
  // name -> value, or "lo..hi" for a swept range
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<int> order;  // nullopt: exact
  ReportStatus status = ReportStatus::Pass;
  std::optional<int> first_discrepancy;
  double elapsed_ms = 0;
  ProofStatus status_expected = ProofStatus::Proved;
  std::string detail;

  bool passed() const { return status == ReportStatus::Pass; }
};

/// "--param" argument: name=v or name=lo..hi.
struct ParamArg {
  std::string name;
  std::string lo;
  std::string hi;

  static ParamArg parse(std::string_view text);  // UsageError
};

/// One report per assignment of the selector parameters; sweep parameters
/// are checked over their whole range and stop at the first failure.
std::vector<VerificationReport> verify(const IdentityRecord& record, const std::vector<ParamArg>& args,
                                       const OrderConfig& config);
std::vector<VerificationReport> verify(std::string_view id, const std::vector<ParamArg>& args,
                                       const OrderConfig& config);

enum class Suite { Proved, Conjectural, All };
Suite parse_suite(std::string_view text);

/// Every catalog entry (and selector assignment) of the suite, sorted by id
/// and then parameters.
std::vector<VerificationReport> verify_all(Suite suite, const OrderConfig& config);

/// S_N recursion vs finite KR4 sum vs enumeration vs motions, and the
/// x-refinement against count_by_parts.  Sizes <= size_bound.
VerificationReport oracle_check(std::string_view profile, int max_part, int size_bound);

/// positivity scan of every bracket combination, one report per case
std::vector<VerificationReport> positivity(int order);

struct CatalogEntry {
  std::string id;
  std::string anchor;
  std::string mode;
  std::string status;
  std::string domain;
};
std::vector<CatalogEntry> list_catalog();

struct FormatOptions {
  bool timing = true;
};

std::string format_human(const VerificationReport& report, const FormatOptions& options = {});
std::string format_human(const std::vector<VerificationReport>& reports, const FormatOptions& options = {});
std::string format_json(const std::vector<VerificationReport>& reports, const FormatOptions& options = {});
std::string format_catalog(const std::vector<CatalogEntry>& entries);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace qseries

#endif
