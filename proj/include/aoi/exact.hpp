#pragma once

// Exact Min-WCS solvers: a dynamic program over chain prefix vectors and an
// exhaustive enumeration used as its oracle.

#include <cstdint>
#include <vector>

#include "aoi/model.hpp"

namespace aoi {

inline constexpr std::uint64_t kDefaultStateCap = 100'000'000;
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct DpOptions {
  std::uint64_t state_cap = kDefaultStateCap;
  // Chains with equal weights and indicator are interchangeable. With this
  // set, the table only keeps prefix vectors in which such chains are
  // non-increasing by index, which keeps the optimum and shrinks instances
  // with many copies of one chain from a product to a binomial.
  bool merge_identical_chains = true;
};

struct ExactResult {
  JobSchedule schedule;
  Wide total = 0;               // includes the instance constant
  std::uint64_t states = 0;     // table entries filled (0 for brute force)
  std::uint64_t schedules = 0;  // schedules enumerated (0 for the DP)
  // Table value at |L| = 0..T along the reconstructed path, constant excluded.
  std::vector<Wide> path_values;
};

// Number of table entries solve_dp would allocate; product of (|C_i| + 1)
// when merging is off. Saturates at UINT64_MAX.
std::uint64_t dp_state_count(const WcsInstance& inst, const DpOptions& options = {});

// Number of feasible schedules, T! / prod |C_i|!, saturated at UINT64_MAX.
std::uint64_t schedule_count(const WcsInstance& inst);

// Ties between last jobs are broken towards the lowest chain index.
ExactResult solve_dp(const WcsInstance& inst, const DpOptions& options = {});

// Ties broken towards the lexicographically smallest chain sequence.
ExactResult brute_force(const WcsInstance& inst,
                        std::uint64_t cap = kDefaultEnumerationCap);

enum class ExactMethod { dp, brute };

struct AgeSolution {
  AgeSchedule schedule;
  Wide age = 0;
  Wide doubled = 0;  // the Min-WCS optimum, 2 * age
};

AgeSolution solve_min_age_exact(const MinAgeInstance& inst, ExactMethod method,
                                const DpOptions& options = {},
                                std::uint64_t enumeration_cap = kDefaultEnumerationCap);

}  // namespace aoi
