#ifndef QSERIES_ERRORS_HPP
#define QSERIES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qseries {

// Precondition of a mathematical operation violated (non-unit inversion,
// reflection of a truncated series, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Bad identifier or parameters supplied by a caller of the catalog / CLI.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A limit family did not stabilize below the configured ceiling.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, int last_m, int last_discrepancy)
      : std::runtime_error(what), last_m_(last_m), last_discrepancy_(last_discrepancy) {}

  int last_m() const { return last_m_; }
  int last_discrepancy() const { return last_discrepancy_; }

 private:
  int last_m_;
  int last_discrepancy_;
};

}  // namespace qseries

#endif
