#pragma once

#include <stdexcept>
#include <string>

namespace perc {

// Invalid arguments, malformed files, out-of-range parameters. CLI exit code 1.
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A generator gave up (e.g. pairing rejection budget exhausted). CLI exit code 1.
class generation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable files. CLI exit code 1.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An iterative solve did not settle within its iteration cap. Carries the best
// estimate reached and the residual at that point. CLI exit code 2.
class numerical_error : public std::runtime_error {
public:
  numerical_error(const std::string& msg, double best_estimate, double residual)
      : std::runtime_error(msg), best_estimate_(best_estimate), residual_(residual) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double residual() const noexcept { return residual_; }

private:
  double best_estimate_;
  double residual_;
};

}  // namespace perc
