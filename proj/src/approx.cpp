#include "aoi/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aoi/rng.hpp"

namespace aoi {

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return checked_mul(a.num, b.den) <=> checked_mul(b.num, a.den);
}

Rational priority(std::span<const Int> chain, std::size_t j) {
  if (j >= chain.size()) {
    throw Error(ErrorKind::domain, "job index " + std::to_string(j) +
                                       " outside chain of length " +
                                       std::to_string(chain.size()));
  }
  Rational best{chain[j], 1};
  Wide sum = 0;
  for (std::size_t k = j; k < chain.size(); ++k) {
    sum = checked_add(sum, chain[k]);
    const Rational window{sum, static_cast<Wide>(k - j + 1)};
    if (window > best) best = window;
  }
  return best;
}

std::vector<Rational> chain_priorities(std::span<const Int> chain) {
  std::vector<Rational> out;
  out.reserve(chain.size());
  for (std::size_t j = 0; j < chain.size(); ++j) out.push_back(priority(chain, j));
  return out;
}

JobSchedule solve_min_wc(const WcsInstance& inst) {
  require_valid(inst);
  const std::size_t n = inst.chains.size();
  std::vector<std::vector<Rational>> prio(n);
  for (std::size_t i = 0; i < n; ++i) prio[i] = chain_priorities(inst.chains[i]);

  std::vector<std::size_t> head(n, 0);
  std::vector<std::size_t> sequence;
  const std::size_t total = inst.job_count();
  sequence.reserve(total);
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (head[i] == inst.chains[i].size()) continue;
      if (pick == n || prio[i][head[i]] > prio[pick][head[pick]]) pick = i;
    }
    sequence.push_back(pick);
    ++head[pick];
  }
  return schedule_from_sequence(chain_lengths(inst), sequence);
}

namespace {

// Whole chains back to back in the given order.
JobSchedule blocks(const WcsInstance& inst, std::span<const std::size_t> order) {
  std::vector<std::size_t> sequence;
  sequence.reserve(inst.job_count());
  for (std::size_t c : order) sequence.insert(sequence.end(), inst.chains[c].size(), c);
  return schedule_from_sequence(chain_lengths(inst), sequence);
}

std::vector<std::size_t> shortest_first(const WcsInstance& inst, int indicator) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < inst.chains.size(); ++i) {
    if (inst.indicators[i] == indicator) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.chains[a].size() < inst.chains[b].size();
  });
  return order;
}

}  // namespace

JobSchedule solve_min_cs(const WcsInstance& inst) {
  require_valid(inst);
  if (!inst.all_indicators_one()) {
    throw Error(ErrorKind::precondition,
                "indicator 0 present; use solve_min_cs_extended");
  }
  return blocks(inst, shortest_first(inst, 1));
}

JobSchedule solve_min_cs_extended(const WcsInstance& inst) {
  require_valid(inst);
  auto order = shortest_first(inst, 1);
  for (std::size_t i = 0; i < inst.chains.size(); ++i) {
    if (inst.indicators[i] == 0) order.push_back(i);
  }
  return blocks(inst, order);
}

std::vector<std::uint8_t> draw_gaps(std::size_t count, double p,
                                    std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::uint8_t> x(count);
  for (auto& v : x) v = rng.unit() < p ? 1 : 0;
  return x;
}

InterleaveResult interleave_schedules(const JobSchedule& wc_opt,
                                      const JobSchedule& cs_opt,
                                      std::span<const std::uint8_t> draws) {
  const auto cs_seq = chain_sequence(cs_opt);
  const auto wc_seq = chain_sequence(wc_opt);
  const std::size_t total = cs_seq.size();
  if (wc_seq.size() != total || wc_opt.slots.size() != cs_opt.slots.size()) {
    throw Error(ErrorKind::structure, "wc and cs schedules differ in shape");
  }
  if (draws.size() + 1 != std::max<std::size_t>(total, 1)) {
    throw Error(ErrorKind::structure, "expected T-1 gap draws");
  }

  InterleaveResult out;
  auto& trace = out.trace;
  trace.draws.assign(draws.begin(), draws.end());
  trace.cs_slots.resize(cs_opt.slots.size());
  trace.wc_slots.resize(cs_opt.slots.size());
  trace.merged.resize(cs_opt.slots.size());

  // Stretch the cs schedule: the job at position k moves right by the
  // number of gaps drawn before it.
  std::vector<bool> occupied(3 * total + 1, false);
  Int shift = 0;
  for (std::size_t k = 0; k < total; ++k) {
    if (k > 0) shift += draws[k - 1];
    const Int slot = static_cast<Int>(k + 1) + shift;
    trace.cs_slots[cs_seq[k]].push_back(slot);
    occupied[slot] = true;
  }

  // The i-th job of the wc order takes the i-th idle slot; slots past the
  // last cs job count as idle.
  Int slot = 0;
  for (std::size_t k = 0; k < total; ++k) {
    do {
      ++slot;
    } while (occupied[slot]);
    trace.wc_slots[wc_seq[k]].push_back(slot);
  }

  struct Placed {
    Int slot;
    std::size_t chain;
    std::size_t job;
  };
  std::vector<Placed> placed;
  placed.reserve(total);
  for (std::size_t i = 0; i < trace.cs_slots.size(); ++i) {
    for (std::size_t j = 0; j < trace.cs_slots[i].size(); ++j) {
      const Int s = std::min(trace.cs_slots[i][j], trace.wc_slots[i][j]);
      trace.merged[i].push_back(s);
      placed.push_back({s, i, j});
    }
  }
  std::sort(placed.begin(), placed.end(),
            [](const Placed& a, const Placed& b) { return a.slot < b.slot; });

  out.schedule.slots.resize(trace.merged.size());
  for (std::size_t i = 0; i < trace.merged.size(); ++i) {
    out.schedule.slots[i].resize(trace.merged[i].size());
  }
  for (std::size_t k = 0; k < placed.size(); ++k) {
    out.schedule.slots[placed[k].chain][placed[k].job] = static_cast<Int>(k + 1);
  }
  return out;
}

InterleaveResult interleave(const WcsInstance& inst, double p,
                            std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::domain, "probability must lie in [0, 1]");
  }
  const auto wc_opt = solve_min_wc(inst);
  const auto cs_opt = solve_min_cs_extended(inst);
  const std::size_t total = inst.job_count();
  const auto draws = draw_gaps(total - 1, p, seed);
  return interleave_schedules(wc_opt, cs_opt, draws);
}

Wide lower_bound(const WcsInstance& inst) {
  const auto wc = evaluate_wcs(inst, solve_min_wc(inst));
  const auto cs = evaluate_wcs(inst, solve_min_cs_extended(inst));
  return checked_add(checked_add(wc.wc, cs.cs), inst.constant);
}

ApproxResult solve_approx(const WcsInstance& inst, double p, std::uint64_t seed,
                          std::uint64_t trials) {
  if (trials == 0) throw Error(ErrorKind::domain, "trials must be at least 1");
  ApproxResult out;
  out.totals.reserve(trials);
  for (std::uint64_t k = 0; k < trials; ++k) {
    auto run = interleave(inst, p, seed + k);
    const Wide total = evaluate_wcs(inst, run.schedule).total;
    out.totals.push_back(total);
    if (k == 0 || total < out.best_total) {
      out.best_total = total;
      out.best = std::move(run.schedule);
    }
  }
  return out;
}

}  // namespace aoi
