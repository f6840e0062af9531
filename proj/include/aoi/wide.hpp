#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace aoi {

// Weights, birthdays and times are 64-bit; every objective is accumulated
// in 128 bits with overflow checks.
using Int = std::int64_t;
__extension__ typedef __int128 Wide;

// All three throw Error{capacity} instead of wrapping.
Wide checked_add(Wide a, Wide b);
Wide checked_sub(Wide a, Wide b);
Wide checked_mul(Wide a, Wide b);

std::string to_string(Wide value);

// Narrowing that reports whether the value fits.
std::optional<std::int64_t> narrow_i64(Wide value);

}  // namespace aoi
