#pragma once
#include "aoi/model.hpp"

namespace fixtures {

// Two pairs, t0 = 15: the first pair holds a message born at 3 and has three
// pending ones, the second holds one born at 3 and has two pending.
inline aoi::MinAgeInstance two_pair_age() {
  aoi::MinAgeInstance inst;
  inst.t0 = 15;
  inst.pairs = {{3, {6, 7, 8}}, {3, {5, 10}}};
  return inst;
}

inline aoi::AgeSchedule two_pair_schedule() { return {{{16, 19, 20}, {17, 18}}}; }

inline aoi::WcsInstance two_chain_wcs() {
  return aoi::WcsInstance::from_chains({{6, 2, 15}, {4, 19}});
}

inline aoi::JobSchedule two_chain_schedule() { return {{{1, 4, 5}, {2, 3}}}; }

}  // namespace fixtures
