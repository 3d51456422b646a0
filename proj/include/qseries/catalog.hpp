#ifndef QSERIES_CATALOG_HPP
#define QSERIES_CATALOG_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qseries/laurent_series.hpp"
#include "qseries/reflect.hpp"

namespace qseries {

enum class CheckMode { ExactPolynomial, AgreeToOrder, StabilizedLimit };
enum class ProofStatus { Proved, Conjectural };

std::string to_string(CheckMode mode);
std::string to_string(ProofStatus status);

/// One parameter of a catalog entry.  `lo..hi` is the range checked by
/// default, `min..max` the admissible domain.  Sweep parameters are folded
/// into a single report; the others select separate reports.  With labels,
/// value v is shown (and parsed) as labels[v - min].
struct ParamRange {
  std::string name;
  int lo = 0;
  int hi = 0;
  int min = 0;
  std::optional<int> max;
  bool sweep = true;
  std::vector<std::string> labels;

  std::string format(int value) const;
  int parse(std::string_view text) const;  // UsageError on bad input
};

/// Values in the order of the record's parameter list.
using ParamValues = std::vector<int>;

struct CheckContext {
  int order = 0;  // 0 for exact entries
  StabilizeOptions stabilize;
};

struct SidePair {
  LaurentSeries lhs;
  LaurentSeries rhs;
  std::string note;
};

struct CheckOutcome {
  bool pass = false;
  std::optional<int> first_discrepancy;
  std::string detail;
};

/// Exact values are compared as polynomials, anything else on the common
/// validity window.
CheckOutcome compare(const SidePair& sides);

struct IdentityRecord {
  std::string id;
  std::string anchor;
  CheckMode mode = CheckMode::ExactPolynomial;
  ProofStatus status = ProofStatus::Proved;
  std::vector<ParamRange> params;
  std::string order_key;  // empty for exact entries

  std::function<bool(const ParamValues&)> admissible;     // optional filter
  std::function<ProofStatus(const ParamValues&)> status_for;  // optional
  std::function<SidePair(const ParamValues&, const CheckContext&)> build;
  // Replaces build + compare for entries that are not a pair of sides.
  std::function<CheckOutcome(const ParamValues&, const CheckContext&)> check;
  // Checks a whole range of the last parameter at once; the callback
  // returns false to stop.
  std::function<void(const ParamValues& fixed, int lo, int hi, const CheckContext&,
                     const std::function<bool(int, const CheckOutcome&)>&)>
      sweep;

  ProofStatus status_at(const ParamValues& values) const;
  bool admits(const ParamValues& values) const;
  CheckOutcome run(const ParamValues& values, const CheckContext& context) const;
};

/// Sorted by id; ids are unique.
const std::vector<IdentityRecord>& catalog();
/// UsageError for unknown ids.
const IdentityRecord& find_record(std::string_view id);

/// Orders keyed by IdentityRecord::order_key, plus the stabilization ceiling.
struct OrderConfig {
  std::map<std::string, int> orders{{"agree", 100}, {"kr", 80},   {"limit", 60},
                                    {"linear", 200}, {"positivity", 200}};
  StabilizeOptions stabilize;
  std::optional<int> override_order;  // --order

  int order_for(const std::string& key) const;
  // "order.<key>=T" or "stabilize.max_m=M"; '#' starts a comment.
  void apply(std::string_view line);
  static OrderConfig from_text(std::string_view text);
  static OrderConfig from_file(const std::string& path);
};

}  // namespace qseries

#endif
