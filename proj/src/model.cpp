#include "aoi/model.hpp"

#include <algorithm>
#include <sstream>

namespace aoi {

namespace {

std::string describe(const std::string& path, const std::string& what) {
  return path + ": " + what;
}

std::string pair_path(std::size_t i) {
  return "pairs[" + std::to_string(i) + "]";
}

std::string chain_path(std::size_t i) {
  return "chains[" + std::to_string(i) + "]";
}

// Shape check shared by both feasibility tests.
void require_shape(std::span<const std::vector<Int>> assignment,
                   std::span<const std::size_t> lengths, const char* what) {
  if (assignment.size() != lengths.size()) {
    std::ostringstream msg;
    msg << what << " has " << assignment.size() << " rows, instance has "
        << lengths.size();
    throw Error(ErrorKind::structure, msg.str());
  }
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (assignment[i].size() != lengths[i]) {
      std::ostringstream msg;
      msg << what << " row " << i << " has " << assignment[i].size()
          << " entries, instance expects " << lengths[i];
      throw Error(ErrorKind::structure, msg.str());
    }
  }
}

// Bijection onto {offset+1, ..., offset+T} plus strict increase per row.
bool is_ordered_bijection(std::span<const std::vector<Int>> assignment,
                          Int offset, std::size_t total) {
  std::vector<bool> used(total, false);
  for (const auto& row : assignment) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const Int local = row[j] - offset;
      if (local < 1 || local > static_cast<Int>(total)) return false;
      if (used[local - 1]) return false;
      used[local - 1] = true;
      if (j > 0 && row[j] <= row[j - 1]) return false;
    }
  }
  return true;
}

std::vector<std::size_t> pair_lengths(const MinAgeInstance& inst) {
  std::vector<std::size_t> out;
  out.reserve(inst.pairs.size());
  for (const auto& p : inst.pairs) out.push_back(p.births.size());
  return out;
}

}  // namespace

std::size_t MinAgeInstance::horizon() const {
  std::size_t total = 0;
  for (const auto& p : pairs) total += p.births.size();
  return total;
}

WcsInstance WcsInstance::from_chains(std::vector<std::vector<Int>> chains) {
  WcsInstance inst;
  inst.indicators.assign(chains.size(), 1);
  inst.chains = std::move(chains);
  return inst;
}

std::size_t WcsInstance::job_count() const {
  std::size_t total = 0;
  for (const auto& c : chains) total += c.size();
  return total;
}

bool WcsInstance::all_indicators_one() const {
  return std::all_of(indicators.begin(), indicators.end(),
                     [](int v) { return v == 1; });
}

std::vector<std::size_t> chain_lengths(const WcsInstance& inst) {
  std::vector<std::size_t> out;
  out.reserve(inst.chains.size());
  for (const auto& c : inst.chains) out.push_back(c.size());
  return out;
}

Violations validate_min_age(const MinAgeInstance& inst) {
  Violations out;
  if (inst.t0 < 0) out.push_back(describe("t0", "must be non-negative"));
  if (inst.pairs.empty()) out.push_back(describe("pairs", "must not be empty"));
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    const auto& p = inst.pairs[i];
    const std::string path = pair_path(i);
    if (p.b0 < 0) out.push_back(describe(path + ".b0", "must be non-negative"));
    if (p.births.empty()) {
      out.push_back(describe(path + ".births", "must hold at least one message"));
      continue;
    }
    if (!(p.b0 < p.births.front())) {
      out.push_back(describe(path + ".b0", "must be earlier than births[0] (" +
                                               std::to_string(p.b0) + " >= " +
                                               std::to_string(p.births.front()) +
                                               ")"));
    }
    for (std::size_t j = 1; j < p.births.size(); ++j) {
      if (!(p.births[j - 1] < p.births[j])) {
        out.push_back(describe(path + ".births[" + std::to_string(j) + "]",
                               "births must be strictly increasing"));
      }
    }
    if (p.births.back() > inst.t0) {
      out.push_back(describe(path + ".births",
                             "last birth " + std::to_string(p.births.back()) +
                                 " exceeds t0 " + std::to_string(inst.t0)));
    }
  }
  for (std::size_t s : inst.special) {
    if (s >= inst.pairs.size()) {
      out.push_back(describe("special", "index " + std::to_string(s) +
                                            " does not name a pair"));
    }
  }
  return out;
}

Violations validate_min_wcs(const WcsInstance& inst) {
  Violations out;
  if (inst.chains.empty()) out.push_back(describe("chains", "must not be empty"));
  for (std::size_t i = 0; i < inst.chains.size(); ++i) {
    const auto& c = inst.chains[i];
    if (c.empty()) out.push_back(describe(chain_path(i), "must not be empty"));
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] < 0) {
        out.push_back(describe(chain_path(i) + "[" + std::to_string(j) + "]",
                               "weight must be non-negative"));
      }
    }
  }
  if (inst.indicators.size() != inst.chains.size()) {
    out.push_back(describe("indicators", "expected " +
                                             std::to_string(inst.chains.size()) +
                                             " entries"));
  }
  for (std::size_t i = 0; i < inst.indicators.size(); ++i) {
    if (inst.indicators[i] != 0 && inst.indicators[i] != 1) {
      out.push_back(describe("indicators[" + std::to_string(i) + "]",
                             "must be 0 or 1"));
    }
  }
  if (inst.constant < 0) out.push_back(describe("constant", "must be non-negative"));
  return out;
}

void require_valid(const MinAgeInstance& inst) {
  auto v = validate_min_age(inst);
  if (!v.empty()) {
    const std::string message = "invalid min-age instance: " + v.front();
    throw Error(ErrorKind::validation, message, v);
  }
}

void require_valid(const WcsInstance& inst) {
  auto v = validate_min_wcs(inst);
  if (!v.empty()) {
    const std::string message = "invalid min-wcs instance: " + v.front();
    throw Error(ErrorKind::validation, message, v);
  }
}

bool is_feasible_age(const MinAgeInstance& inst, const AgeSchedule& s) {
  const auto lengths = pair_lengths(inst);
  require_shape(s.times, lengths, "age schedule");
  return is_ordered_bijection(s.times, inst.t0, inst.horizon());
}

bool is_feasible_wcs(const WcsInstance& inst, const JobSchedule& s) {
  const auto lengths = chain_lengths(inst);
  require_shape(s.slots, lengths, "job schedule");
  return is_ordered_bijection(s.slots, 0, inst.job_count());
}

Int age_at(const MinAgeInstance& inst, const AgeSchedule& s, std::size_t pair,
           Int t) {
  if (pair >= inst.pairs.size()) {
    throw Error(ErrorKind::domain, "pair index " + std::to_string(pair) +
                                       " out of range");
  }
  const Int horizon = static_cast<Int>(inst.horizon());
  if (t < inst.t0 || t > inst.t0 + horizon) {
    throw Error(ErrorKind::domain, "time " + std::to_string(t) +
                                       " outside [t0, t0+T]");
  }
  const auto& p = inst.pairs[pair];
  const auto& times = s.times.at(pair);
  // Number of this pair's messages delivered at or before t.
  const auto received = static_cast<std::size_t>(
      std::upper_bound(times.begin(), times.end(), t) - times.begin());
  if (received == 0) return t - p.b0;
  if (received == p.births.size() && !inst.is_special(pair)) return 0;
  return t - p.births[received - 1];
}

Wide evaluate_age(const MinAgeInstance& inst, const AgeSchedule& s) {
  require_valid(inst);
  if (!is_feasible_age(inst, s)) {
    throw Error(ErrorKind::feasibility, "age schedule is not feasible");
  }
  const Int horizon = static_cast<Int>(inst.horizon());
  Wide total = 0;
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    for (Int t = inst.t0; t <= inst.t0 + horizon; ++t) {
      total = checked_add(total, age_at(inst, s, i, t));
    }
  }
  return total;
}

ObjectiveBreakdown evaluate_wcs(const WcsInstance& inst, const JobSchedule& s) {
  require_valid(inst);
  if (!is_feasible_wcs(inst, s)) {
    throw Error(ErrorKind::feasibility, "job schedule is not feasible");
  }
  ObjectiveBreakdown out;
  for (std::size_t i = 0; i < inst.chains.size(); ++i) {
    const auto& weights = inst.chains[i];
    const auto& slots = s.slots[i];
    for (std::size_t j = 0; j < weights.size(); ++j) {
      out.wc = checked_add(out.wc, checked_mul(weights[j], slots[j]));
    }
    if (inst.indicators[i] == 1) {
      const Wide leaf = slots.back();
      out.cs = checked_add(out.cs, checked_mul(leaf, leaf));
    }
  }
  out.constant = inst.constant;
  out.total = checked_add(checked_add(out.wc, out.cs), out.constant);
  return out;
}

std::vector<std::size_t> chain_sequence(const JobSchedule& s) {
  std::size_t total = 0;
  for (const auto& row : s.slots) total += row.size();
  std::vector<std::size_t> seq(total, s.slots.size());
  for (std::size_t i = 0; i < s.slots.size(); ++i) {
    for (Int slot : s.slots[i]) {
      if (slot < 1 || slot > static_cast<Int>(total) ||
          seq[slot - 1] != s.slots.size()) {
        throw Error(ErrorKind::structure, "schedule is not a bijection onto 1..T");
      }
      seq[slot - 1] = i;
    }
  }
  return seq;
}

JobSchedule schedule_from_sequence(std::span<const std::size_t> chain_lengths,
                                   std::span<const std::size_t> sequence) {
  JobSchedule s;
  s.slots.resize(chain_lengths.size());
  for (std::size_t i = 0; i < chain_lengths.size(); ++i) {
    s.slots[i].reserve(chain_lengths[i]);
  }
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    const std::size_t c = sequence[k];
    if (c >= chain_lengths.size() || s.slots[c].size() == chain_lengths[c]) {
      throw Error(ErrorKind::structure,
                  "sequence entry " + std::to_string(k) + " names chain " +
                      std::to_string(c) + " which has no job left");
    }
    s.slots[c].push_back(static_cast<Int>(k + 1));
  }
  for (std::size_t i = 0; i < chain_lengths.size(); ++i) {
    if (s.slots[i].size() != chain_lengths[i]) {
      throw Error(ErrorKind::structure, "sequence leaves chain " +
                                            std::to_string(i) + " incomplete");
    }
  }
  return s;
}

}  // namespace aoi
