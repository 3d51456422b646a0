#include "qseries/partition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <utility>

#include "qseries/errors.hpp"

namespace qseries {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

ConstraintProfile ConstraintProfile::i4(std::optional<int> max_part) {
  ConstraintProfile p;
  p.max_part = max_part;
  p.forbid_ones = true;
  p.distance2_gap = 3;
  p.adjacent_sum_rule = true;
  return p;
}

bool ConstraintProfile::admits_part(int part) const {
  if (part < 1) return false;
  if (max_part && part > *max_part) return false;
  if (forbid_ones && part == 1) return false;
  if (residues) {
    const int r = part % residues->modulus;
    if (std::find(residues->allowed.begin(), residues->allowed.end(), r) == residues->allowed.end()) return false;
  }
  return true;
}

bool ConstraintProfile::admits_step(int before_last, int last, int next) const {
  if (!admits_part(next)) return false;
  if (last > 0) {
    if (next < last) return false;
    if (adjacent_sum_rule && next - last <= 1 && (last + next) % 3 != 2) return false;
  }
  if (before_last > 0 && distance2_gap && next - before_last < *distance2_gap) return false;
  return true;
}

bool ConstraintProfile::admits(const Partition& p) const {
  int b = 0, a = 0;
  for (int x : p.parts) {
    if (!admits_step(b, a, x)) return false;
    b = a;
    a = x;
  }
  return true;
}

namespace {

// Depth-first walk over admissible non-decreasing sequences with sum <= budget.
// visit(parts, sum) is called for every prefix, including the empty one.
void walk(const ConstraintProfile& profile, int budget, std::vector<int>& parts, int sum,
          const std::function<void(const std::vector<int>&, int)>& visit) {
  visit(parts, sum);
  const int last = parts.empty() ? 0 : parts.back();
  const int before = parts.size() >= 2 ? parts[parts.size() - 2] : 0;
  int hi = budget - sum;
  if (profile.max_part) hi = std::min(hi, *profile.max_part);
  for (int x = std::max(last, 1); x <= hi; ++x) {
    if (!profile.admits_step(before, last, x)) continue;
    parts.push_back(x);
    walk(profile, budget, parts, sum + x, visit);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int n, const ConstraintProfile& profile) {
  if (n < 0) throw DomainError("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> parts;
  walk(profile, n, parts, 0, [&](const std::vector<int>& p, int s) {
    if (s == n) out.push_back({p});
  });
  return out;
}

long long count(int n, const ConstraintProfile& profile) {
  if (n < 0) throw DomainError("partition size must be nonnegative");
  long long c = 0;
  std::vector<int> parts;
  walk(profile, n, parts, 0, [&](const std::vector<int>&, int s) { c += (s == n); });
  return c;
}

long long count_by_parts(const ConstraintProfile& profile, int n, int j) {
  if (n < 0 || j < 0) throw DomainError("partition size and length must be nonnegative");
  long long c = 0;
  std::vector<int> parts;
  walk(profile, n, parts, 0, [&](const std::vector<int>& p, int s) {
    c += (s == n && static_cast<int>(p.size()) == j);
  });
  return c;
}

namespace {

int finite_budget(const ConstraintProfile& profile, std::optional<int> order) {
  if (order) return *order;
  if (!profile.max_part || !profile.distance2_gap || *profile.distance2_gap < 1) {
    throw DomainError("generating function of this profile is not a polynomial; give an order");
  }
  // at most two parts per value window of width gap, all <= N
  const long long N = *profile.max_part;
  const long long most = 2 * N * (N / *profile.distance2_gap + 1) + 2 * N;
  return static_cast<int>(std::min<long long>(most, 1 << 20));
}

}  // namespace

BivariateSeries generating_polynomial_by_parts(const ConstraintProfile& profile, std::optional<int> order) {
  const int budget = finite_budget(profile, order);
  std::vector<std::vector<long long>> counts;  // [parts][size]
  int top = 0;
  std::vector<int> parts;
  walk(profile, budget, parts, 0, [&](const std::vector<int>& p, int s) {
    if (counts.size() <= p.size()) counts.resize(p.size() + 1);
    auto& row = counts[p.size()];
    if (static_cast<int>(row.size()) <= s) row.resize(s + 1);
    ++row[s];
    top = std::max(top, s);
  });
  BivariateSeries out;
  for (size_t j = 0; j < counts.size(); ++j) {
    std::vector<Integer> c(counts[j].size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = static_cast<long>(counts[j][k]);
    LaurentSeries s = order ? LaurentSeries::truncated(0, std::move(c), *order)
                            : LaurentSeries::polynomial(0, std::move(c));
    out.add_term(static_cast<int>(j), s);
  }
  return out;
}

LaurentSeries generating_polynomial(const ConstraintProfile& profile, std::optional<int> order) {
  const int budget = finite_budget(profile, order);
  std::vector<long long> counts(1, 0);
  std::vector<int> parts;
  walk(profile, budget, parts, 0, [&](const std::vector<int>&, int s) {
    if (static_cast<int>(counts.size()) <= s) counts.resize(s + 1);
    ++counts[s];
  });
  std::vector<Integer> c(counts.size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = static_cast<long>(counts[k]);
  if (order) return LaurentSeries::truncated(0, std::move(c), *order);
  return LaurentSeries::polynomial(0, std::move(c));
}

Partition minimal_configuration(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("minimal configuration needs m, n >= 0");
  Partition p;
  for (int k = 1; k <= n; ++k) {
    p.parts.push_back(3 * k - 1);
    p.parts.push_back(3 * k);
  }
  for (int i = 1; i <= m; ++i) p.parts.push_back(3 * n + 2 * i);
  return p;
}

int count_close_pairs(const Partition& p) {
  int c = 0;
  for (size_t i = 0; i + 1 < p.parts.size(); ++i) c += (p.parts[i + 1] - p.parts[i] <= 1);
  return c;
}

namespace {

// Pair locations along the line: index 2t is (3t+2, 3t+3), index 2t+1 is
// (3t+4, 3t+4).  A free forward motion advances the index by one.
std::pair<int, int> pair_at(int index) {
  const int t = index / 2;
  return index % 2 == 0 ? std::pair{3 * t + 2, 3 * t + 3} : std::pair{3 * t + 4, 3 * t + 4};
}

struct MotionState {
  std::vector<int> pairs;       // location indices, sorted
  std::vector<int> singletons;  // sorted

  auto operator<=>(const MotionState&) const = default;
};

// The partition of a state, if the state is a legal configuration: parts <= N,
// I4 conditions, and the close pairs are exactly the labeled pairs.
std::optional<Partition> realize(const MotionState& s, int N) {
  Partition p;
  std::vector<std::pair<int, int>> labeled;
  for (int idx : s.pairs) {
    auto pr = pair_at(idx);
    labeled.push_back(pr);
    p.parts.push_back(pr.first);
    p.parts.push_back(pr.second);
  }
  p.parts.insert(p.parts.end(), s.singletons.begin(), s.singletons.end());
  std::sort(p.parts.begin(), p.parts.end());
  if (!p.parts.empty() && (p.parts.back() > N || p.parts.front() < 1)) return std::nullopt;
  if (!ConstraintProfile::i4(N).admits(p)) return std::nullopt;
  std::vector<std::pair<int, int>> close;
  for (size_t i = 0; i + 1 < p.parts.size(); ++i) {
    if (p.parts[i + 1] - p.parts[i] <= 1) close.emplace_back(p.parts[i], p.parts[i + 1]);
  }
  std::sort(labeled.begin(), labeled.end());
  if (close != labeled) return std::nullopt;
  return p;
}

}  // namespace

std::set<Partition> generate_by_motions(int m, int n, int N, std::optional<int> max_size) {
  if (m < 0 || n < 0 || N < 0) throw DomainError("generate_by_motions needs m, n, N >= 0");
  MotionState start;
  for (int k = 0; k < n; ++k) start.pairs.push_back(2 * k);
  for (int i = 1; i <= m; ++i) start.singletons.push_back(3 * n + 2 * i);

  // every motion raises the size (a pair move by 3)
  auto fits = [&](const MotionState& s) {
    auto p = realize(s, N);
    return p && (!max_size || p->size() <= *max_size);
  };
  std::set<Partition> out;
  if (!fits(start)) return out;
  std::set<MotionState> seen{start};
  std::deque<MotionState> queue{start};
  while (!queue.empty()) {
    MotionState s = std::move(queue.front());
    queue.pop_front();
    out.insert(*realize(s, N));

    std::vector<MotionState> next;
    // a singleton steps forward by one
    for (size_t i = 0; i < s.singletons.size(); ++i) {
      MotionState t = s;
      ++t.singletons[i];
      std::sort(t.singletons.begin(), t.singletons.end());
      next.push_back(std::move(t));
    }
    // a pair moves to its next location, crossing the first j singletons
    // above it; each crossed singleton drops by 3
    for (size_t k = 0; k < s.pairs.size(); ++k) {
      const int top = pair_at(s.pairs[k]).second;
      const auto first_above = std::upper_bound(s.singletons.begin(), s.singletons.end(), top) - s.singletons.begin();
      const int above = static_cast<int>(s.singletons.size()) - static_cast<int>(first_above);
      for (int j = 0; j <= above; ++j) {
        MotionState t = s;
        t.pairs[k] = s.pairs[k] + j + 1;
        std::sort(t.pairs.begin(), t.pairs.end());
        for (int c = 0; c < j; ++c) t.singletons[first_above + c] -= 3;
        std::sort(t.singletons.begin(), t.singletons.end());
        next.push_back(std::move(t));
      }
    }
    for (auto& t : next) {
      if (seen.count(t) || !fits(t)) continue;
      seen.insert(t);
      queue.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace qseries
