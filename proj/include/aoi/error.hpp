#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aoi {

enum class ErrorKind {
  validation,    // instance invariants violated
  feasibility,   // schedule is not a feasible schedule of the instance
  structure,     // schedule or order has the wrong shape
  domain,        // argument outside its admissible range
  precondition,  // input outside the family an operation is defined for
  capacity,      // state space, enumeration or integer range exceeded
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library. `details` holds every individual
// violation when more than one problem was found at once.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::string> details = {})
      : std::runtime_error(message), kind_(kind), details_(std::move(details)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> details_;
};

}  // namespace aoi
