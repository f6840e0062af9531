#pragma once

// Instances, schedules and objective evaluators for the two problems:
//
//  * Min-Age: n sender/receiver pairs share a channel that delivers one
//    message per unit of time after the current time t0. Each pair has
//    already received a message born at b0 and must deliver its pending
//    messages (born at `births`) in generation order.
//  * Min-WCS: unit-time jobs on one machine, grouped into precedence chains,
//    minimizing total weighted completion time plus the squared completion
//    time of every chain's last job (only for chains with indicator 1), plus
//    an additive constant.
//
// All indices in the C++ API are 0-based. Slots and times are the 1-based
// completion instants of the underlying problems.

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "aoi/error.hpp"
#include "aoi/wide.hpp"

namespace aoi {

struct BirthdayChain {
  Int b0 = 0;               // birthday of the message already held
  std::vector<Int> births;  // pending messages, strictly increasing

  friend bool operator==(const BirthdayChain&, const BirthdayChain&) = default;
};

struct MinAgeInstance {
  Int t0 = 0;
  std::vector<BirthdayChain> pairs;
  // Receivers whose age keeps growing after their last message arrives.
  std::set<std::size_t> special;

  // Total number of pending messages (the schedule length T).
  std::size_t horizon() const;
  bool is_special(std::size_t pair) const { return special.count(pair) != 0; }

  friend bool operator==(const MinAgeInstance&, const MinAgeInstance&) = default;
};

struct WcsInstance {
  std::vector<std::vector<Int>> chains;
  std::vector<int> indicators;  // one per chain; 1 = leaf pays t^2
  Int constant = 0;

  // Indicators all 1, constant 0.
  static WcsInstance from_chains(std::vector<std::vector<Int>> chains);

  std::size_t job_count() const;
  bool all_indicators_one() const;

  friend bool operator==(const WcsInstance&, const WcsInstance&) = default;
};

// slots[i][j] is the completion slot (1..T) of job j of chain i.
struct JobSchedule {
  std::vector<std::vector<Int>> slots;
  friend bool operator==(const JobSchedule&, const JobSchedule&) = default;
};

// times[i][j] is the delivery time (t0+1..t0+T) of message j of pair i.
struct AgeSchedule {
  std::vector<std::vector<Int>> times;
  friend bool operator==(const AgeSchedule&, const AgeSchedule&) = default;
};

struct ObjectiveBreakdown {
  Wide wc = 0;
  Wide cs = 0;  // restricted to indicator-1 chains
  Wide constant = 0;
  Wide total = 0;
};

using Violations = std::vector<std::string>;

Violations validate_min_age(const MinAgeInstance& inst);
Violations validate_min_wcs(const WcsInstance& inst);

// Throw Error{validation} carrying every violation.
void require_valid(const MinAgeInstance& inst);
void require_valid(const WcsInstance& inst);

// Structural mismatch (wrong number of chains or jobs) throws
// Error{structure}; everything else is reported through the return value.
bool is_feasible_age(const MinAgeInstance& inst, const AgeSchedule& s);
bool is_feasible_wcs(const WcsInstance& inst, const JobSchedule& s);

// Age of receiver `pair` at time t, for t0 <= t <= t0+T. Assumes s feasible.
Int age_at(const MinAgeInstance& inst, const AgeSchedule& s, std::size_t pair,
           Int t);

// Sum of age_at over every pair and every t in [t0, t0+T].
Wide evaluate_age(const MinAgeInstance& inst, const AgeSchedule& s);

ObjectiveBreakdown evaluate_wcs(const WcsInstance& inst, const JobSchedule& s);

// Chain index of the job completed at each slot 1..T. Requires a bijection.
std::vector<std::size_t> chain_sequence(const JobSchedule& s);

// Inverse of chain_sequence: the k-th entry names the chain whose next job
// completes at slot k+1.
JobSchedule schedule_from_sequence(std::span<const std::size_t> chain_lengths,
                                   std::span<const std::size_t> sequence);

std::vector<std::size_t> chain_lengths(const WcsInstance& inst);

}  // namespace aoi
