#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spinhurwitz {

/// Query or value outside the documented domain (invalid parity, degree out of
/// range, malformed partition, ...). Never thrown for values that are merely zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown by the enumeration oracle when the work estimate exceeds the budget.
/// Carries the estimate so callers can report it; no partial answer is produced.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& message, boost::multiprecision::cpp_int estimated_work)
      : std::runtime_error(message), estimated_work_(std::move(estimated_work)) {}

  const boost::multiprecision::cpp_int& estimated_work() const { return estimated_work_; }

 private:
  boost::multiprecision::cpp_int estimated_work_;
};

}  // namespace spinhurwitz
