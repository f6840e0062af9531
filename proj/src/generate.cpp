#include "aoi/generate.hpp"

#include <algorithm>

#include "aoi/rng.hpp"

namespace aoi {

MinAgeInstance generate_random_min_age(const RandomMinAgeSpec& spec) {
  if (spec.pairs < 1 || spec.max_chain < 1 || spec.max_gap < 1) {
    throw Error(ErrorKind::domain, "pairs, max-chain and max-gap must be at least 1");
  }
  SplitMix64 rng(spec.seed);
  MinAgeInstance inst;
  for (std::size_t i = 0; i < spec.pairs; ++i) {
    const auto len = static_cast<std::size_t>(
        rng.uniform(1, static_cast<std::int64_t>(spec.max_chain)));
    BirthdayChain p;
    p.b0 = rng.uniform(1, spec.max_gap) - 1;
    Int b = p.b0;
    for (std::size_t j = 0; j < len; ++j) {
      b += rng.uniform(1, spec.max_gap);
      p.births.push_back(b);
    }
    inst.t0 = std::max(inst.t0, b);
    inst.pairs.push_back(std::move(p));
  }
  return inst;
}

}  // namespace aoi
