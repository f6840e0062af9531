#pragma once

#include <cstdint>

#include "aoi/model.hpp"

namespace aoi {

struct RandomMinAgeSpec {
  std::size_t pairs = 3;
  std::size_t max_chain = 3;  // messages per pair, uniform in 1..max_chain
  Int max_gap = 5;            // birthday gaps, uniform in 1..max_gap
  std::uint64_t seed = 0;
};

// Draws come from SplitMix64(seed) in this order, per pair: chain length,
// then one gap for b0 (b0 = gap - 1), then one gap per message. t0 is the
// latest last birthday.
MinAgeInstance generate_random_min_age(const RandomMinAgeSpec& spec);

}  // namespace aoi
