#pragma once

#include <stdexcept>
#include <string>

namespace dnls {

// Requested tolerance could not be met; carries the best value obtained.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, double best_value, double error_estimate)
      : std::runtime_error(what), best_value_(best_value), error_estimate_(error_estimate) {}
  double best_value() const { return best_value_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_value_;
  double error_estimate_;
};

// Iteration budget exhausted before the convergence criterion was reached.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double best_value, double residual)
      : std::runtime_error(what), best_value_(best_value), residual_(residual) {}
  double best_value() const { return best_value_; }
  double residual() const { return residual_; }

 private:
  double best_value_;
  double residual_;
};

class no_solution_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class numeric_overflow_error : public std::runtime_error {
 public:
  explicit numeric_overflow_error(const std::string& what, double time_stamp = 0.0)
      : std::runtime_error(what), time_stamp_(time_stamp) {}
  double time_stamp() const { return time_stamp_; }

 private:
  double time_stamp_;
};

class insufficient_data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent estimates disagree beyond the allowed margin.
class inconsistency_error : public std::runtime_error {
 public:
  inconsistency_error(const std::string& what, double first, double second)
      : std::runtime_error(what), first_(first), second_(second) {}
  double first() const { return first_; }
  double second() const { return second_; }

 private:
  double first_;
  double second_;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class unreliable_estimate_error : public std::runtime_error {
 public:
  unreliable_estimate_error(const std::string& what, double estimate, double ess)
      : std::runtime_error(what), estimate_(estimate), ess_(ess) {}
  double estimate() const { return estimate_; }
  double effective_sample_size() const { return ess_; }

 private:
  double estimate_;
  double ess_;
};

}  // namespace dnls
