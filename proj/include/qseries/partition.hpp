#ifndef QSERIES_PARTITION_HPP
#define QSERIES_PARTITION_HPP

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qseries/bivariate_series.hpp"
#include "qseries/laurent_series.hpp"

namespace qseries {

/// Parts in non-decreasing order.
struct Partition {
  std::vector<int> parts;

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
};

struct ResidueFilter {
  int modulus = 1;
  std::vector<int> allowed;  // residues in [0, modulus)
};

/// Restrictions on the parts of a partition.  All fields are optional; the
/// default profile admits every partition.
struct ConstraintProfile {
  std::optional<int> max_part;
  bool forbid_ones = false;
  // parts two apart in the sequence differ by at least this much
  std::optional<int> distance2_gap;
  // consecutive parts differing by <= 1 must have sum = 2 (mod 3)
  bool adjacent_sum_rule = false;
  std::optional<ResidueFilter> residues;

  // Conditions (a)-(d) of the I4 gap conditions; nullopt drops (a).
  static ConstraintProfile i4(std::optional<int> max_part);

  bool admits(const Partition& p) const;
  bool admits_part(int part) const;
  // Whether appending `next` to a sequence ending in ..., before_last, last
  // (0 meaning absent) keeps the local conditions.
  bool admits_step(int before_last, int last, int next) const;
};

/// All profile partitions of n, in lexicographic order of their parts.
std::vector<Partition> enumerate(int n, const ConstraintProfile& profile);
long long count(int n, const ConstraintProfile& profile);

/// Number of profile partitions of n with exactly j parts.
long long count_by_parts(const ConstraintProfile& profile, int n, int j);

/// sum over profile partitions of q^size, through q^order if given.  Without
/// an order the profile must force finitely many partitions (a finite
/// max_part and a positive distance-2 gap); otherwise DomainError.
LaurentSeries generating_polynomial(const ConstraintProfile& profile, std::optional<int> order = std::nullopt);

/// As generating_polynomial, with x marking the number of parts.
BivariateSeries generating_polynomial_by_parts(const ConstraintProfile& profile,
                                               std::optional<int> order = std::nullopt);

/// (2,3, 5,6, ..., 3n-1,3n, 3n+2, 3n+4, ..., 3n+2m): n pairs, m singletons.
Partition minimal_configuration(int m, int n);

/// Every partition with parts <= N reachable from minimal_configuration(m, n)
/// by forward motions of singletons and pairs, including crossing of pairs
/// over singletons.  With max_size, only those of size <= max_size.
std::set<Partition> generate_by_motions(int m, int n, int N, std::optional<int> max_size = std::nullopt);

/// Number of consecutive parts of p that differ by at most 1.
int count_close_pairs(const Partition& p);

}  // namespace qseries

#endif
