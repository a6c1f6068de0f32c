#pragma once

#include <stdexcept>
#include <string>

namespace hbsums {

// A caller-supplied argument violates an operation's precondition
// (coprimality, parity hypothesis, domain of log/exp, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Working precision ran out before the requested target could be certified.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, long required_precision)
      : std::runtime_error(what), required_precision_(required_precision) {}

  long required_precision() const noexcept { return required_precision_; }

 private:
  long required_precision_;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace hbsums
