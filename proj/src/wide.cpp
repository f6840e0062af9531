#include "aoi/wide.hpp"

#include <algorithm>
#include <limits>

#include "aoi/error.hpp"

namespace aoi {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation: return "validation";
    case ErrorKind::feasibility: return "feasibility";
    case ErrorKind::structure: return "structure";
    case ErrorKind::domain: return "domain";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::capacity: return "capacity";
  }
  return "unknown";
}

namespace {

[[noreturn]] void overflow(const char* op) {
  throw Error(ErrorKind::capacity,
              std::string("128-bit objective range exceeded in ") + op);
}

}  // namespace

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

Wide checked_sub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
  return r;
}

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

std::string to_string(Wide value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work on the unsigned magnitude so the minimum value is representable.
  __extension__ unsigned __int128 mag =
      negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
               : static_cast<unsigned __int128>(value);
  std::string out;
  while (mag > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<std::int64_t> narrow_i64(Wide value) {
  if (value < std::numeric_limits<std::int64_t>::min() ||
      value > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace aoi
