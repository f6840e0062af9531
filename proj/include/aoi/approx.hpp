#pragma once

// Polynomial-time schedules for the two relaxations of Min-WCS and the
// randomized interleaving that combines them.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "aoi/model.hpp"

namespace aoi {

// Exact non-negative fraction; ordering by cross-multiplication.
struct Rational {
  Wide num = 0;
  Wide den = 1;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

// Largest average weight over the windows j..k of `chain`, k >= j.
Rational priority(std::span<const Int> chain, std::size_t j);
std::vector<Rational> chain_priorities(std::span<const Int> chain);

// Minimizes wc: repeatedly runs the head job of highest priority, lowest
// chain index on ties.
JobSchedule solve_min_wc(const WcsInstance& inst);

// Minimizes cs: whole chains, shortest first, lowest index on ties. All
// indicators must be 1.
JobSchedule solve_min_cs(const WcsInstance& inst);

// Minimizes cs' when some indicators are 0: indicator-1 chains as in
// solve_min_cs, then the indicator-0 chains in index order.
JobSchedule solve_min_cs_extended(const WcsInstance& inst);

struct InterleaveTrace {
  std::vector<std::uint8_t> draws;          // gap after cs position i, i = 1..T-1
  std::vector<std::vector<Int>> cs_slots;   // cs schedule stretched by the gaps
  std::vector<std::vector<Int>> wc_slots;   // wc order placed into idle slots
  std::vector<std::vector<Int>> merged;     // earlier of the two per job
};

struct InterleaveResult {
  JobSchedule schedule;
  InterleaveTrace trace;
};

// X_i = 1 iff unit() < p, drawn from SplitMix64(seed).
std::vector<std::uint8_t> draw_gaps(std::size_t count, double p,
                                    std::uint64_t seed);

// Deterministic core of the interleaving: `draws` must hold T-1 entries.
InterleaveResult interleave_schedules(const JobSchedule& wc_opt,
                                      const JobSchedule& cs_opt,
                                      std::span<const std::uint8_t> draws);

// p in [0, 1]. p = 0 reproduces the cs schedule, p = 1 is the deterministic
// 4-approximation.
InterleaveResult interleave(const WcsInstance& inst, double p,
                            std::uint64_t seed);

// wc of the wc-optimal schedule + cs' of the cs'-optimal one + constant.
Wide lower_bound(const WcsInstance& inst);

struct ApproxResult {
  JobSchedule best;
  Wide best_total = 0;
  std::vector<Wide> totals;  // trial k used seed + k (mod 2^64)
};

ApproxResult solve_approx(const WcsInstance& inst, double p, std::uint64_t seed,
                          std::uint64_t trials);

}  // namespace aoi
