#include "aoi/transform.hpp"

#include <algorithm>

namespace aoi {

namespace {

Int to_int(Wide v, const char* what) {
  auto n = narrow_i64(v);
  if (!n) {
    throw Error(ErrorKind::capacity, std::string(what) + " exceeds 64-bit range");
  }
  return *n;
}

Int previous_birth(const BirthdayChain& p, std::size_t j) {
  return j == 0 ? p.b0 : p.births[j - 1];
}

std::vector<Int> internal_weights(const BirthdayChain& p) {
  std::vector<Int> w;
  w.reserve(p.births.size());
  for (std::size_t j = 0; j + 1 < p.births.size(); ++j) {
    w.push_back(to_int(2 * (Wide{p.births[j]} - previous_birth(p, j)), "weight"));
  }
  return w;
}

void require_slot_range(const std::vector<std::vector<Int>>& slots,
                        const char* what) {
  std::size_t total = 0;
  for (const auto& r : slots) total += r.size();
  for (const auto& r : slots) {
    for (Int slot : r) {
      if (slot < 1 || slot > static_cast<Int>(total)) {
        throw Error(ErrorKind::domain, std::string(what) +
                                           " maps to slot " + std::to_string(slot) +
                                           ", outside 1..T");
      }
    }
  }
}

std::vector<std::vector<Int>> shift(const std::vector<std::vector<Int>>& rows,
                                    Int delta) {
  std::vector<std::vector<Int>> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i].reserve(rows[i].size());
    for (Int v : rows[i]) out[i].push_back(to_int(Wide{v} + delta, "time"));
  }
  return out;
}

}  // namespace

WcsInstance to_wcs(const MinAgeInstance& inst) {
  require_valid(inst);
  if (!inst.special.empty()) {
    throw Error(ErrorKind::precondition,
                "instance has special receivers; use to_wcs_special");
  }
  return to_wcs_special(inst);
}

WcsInstance to_wcs_special(const MinAgeInstance& inst) {
  require_valid(inst);
  const Wide horizon = static_cast<Wide>(inst.horizon());
  WcsInstance out;
  Wide constant = 0;
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    const auto& p = inst.pairs[i];
    auto weights = internal_weights(p);
    const std::size_t last = p.births.size() - 1;
    if (inst.is_special(i)) {
      weights.push_back(
          to_int(2 * (Wide{p.births[last]} - previous_birth(p, last)), "weight"));
      // Bottom rectangle below the last birthday plus the staircase of unit
      // increments, both doubled.
      const Wide bottom = checked_mul(2 * (horizon + 1), Wide{inst.t0} - p.births[last]);
      const Wide staircase = checked_mul(horizon, horizon + 1);
      constant = checked_add(constant, checked_add(bottom, staircase));
      out.indicators.push_back(0);
    } else {
      weights.push_back(to_int(2 * Wide{inst.t0} - 1 - 2 * Wide{previous_birth(p, last)},
                               "weight"));
      out.indicators.push_back(1);
    }
    out.chains.push_back(std::move(weights));
  }
  out.constant = to_int(constant, "constant");
  return out;
}

JobSchedule age_to_job(const AgeSchedule& s, Int t0) {
  JobSchedule out{shift(s.times, -t0)};
  require_slot_range(out.slots, "delivery time");
  return out;
}

AgeSchedule job_to_age(const JobSchedule& s, Int t0) {
  require_slot_range(s.slots, "slot");
  return AgeSchedule{shift(s.slots, t0)};
}

Violations constrained_violations(const WcsInstance& inst) {
  Violations out = validate_min_wcs(inst);
  for (std::size_t i = 0; i < inst.chains.size(); ++i) {
    const auto& c = inst.chains[i];
    for (std::size_t j = 0; j < c.size(); ++j) {
      const std::string path =
          "chains[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      const bool leaf = j + 1 == c.size();
      if (c[j] <= 0) {
        out.push_back(path + ": weight must be positive");
      } else if (leaf && c[j] % 2 == 0) {
        out.push_back(path + ": leaf weight must be odd");
      } else if (!leaf && c[j] % 2 != 0) {
        out.push_back(path + ": internal weight must be even");
      }
    }
  }
  if (!inst.all_indicators_one()) out.push_back("indicators: must all be 1");
  if (inst.constant != 0) out.push_back("constant: must be 0");
  return out;
}

MinAgeInstance from_constrained(const WcsInstance& inst) {
  auto violations = constrained_violations(inst);
  if (!violations.empty()) {
    throw Error(ErrorKind::precondition,
                "not a constrained instance: " + violations.front(),
                violations);
  }
  // Each chain's total height: half the internal weights plus the rounded-up
  // half of the leaf weight.
  std::vector<Wide> heights;
  heights.reserve(inst.chains.size());
  for (const auto& c : inst.chains) {
    Wide h = (Wide{c.back()} + 1) / 2;
    for (std::size_t j = 0; j + 1 < c.size(); ++j) h = checked_add(h, c[j] / 2);
    heights.push_back(h);
  }
  const Wide top = *std::max_element(heights.begin(), heights.end());

  MinAgeInstance out;
  out.t0 = to_int(top, "t0");
  for (std::size_t i = 0; i < inst.chains.size(); ++i) {
    const auto& c = inst.chains[i];
    BirthdayChain p;
    p.b0 = to_int(top - heights[i], "birthday");
    Int b = p.b0;
    for (std::size_t j = 0; j + 1 < c.size(); ++j) {
      b += c[j] / 2;
      p.births.push_back(b);
    }
    p.births.push_back(out.t0);
    out.pairs.push_back(std::move(p));
  }
  return out;
}

}  // namespace aoi
