#include "aoi/exact.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "aoi/transform.hpp"

namespace aoi {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturate(Wide v) {
  return v >= static_cast<Wide>(kSaturated) ? kSaturated
                                            : static_cast<std::uint64_t>(v);
}

// C(n, k), or anything above `limit` once it is exceeded.
Wide binomial_capped(std::uint64_t n, std::uint64_t k, Wide limit) {
  k = std::min(k, n - k);
  Wide r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // r * (n - i) stays below 2^127 because r <= limit < 2^64.
    r = r * static_cast<Wide>(n - i) / static_cast<Wide>(i + 1);
    if (r > limit) return limit + 1;
  }
  return r;
}

// Chains grouped into classes of interchangeable members. Within a class the
// prefix lengths of its members form a non-increasing vector; each such
// vector is one digit value of the class's mixed-radix coordinate.
struct ChainClass {
  std::vector<std::size_t> members;  // ascending chain indices
  std::size_t length = 0;
  std::vector<std::vector<std::uint32_t>> states;  // sorted by sum, then lex
  std::vector<std::size_t> sums;
  struct Move {
    std::uint32_t position;  // index into members
    std::uint32_t pred;      // digit value after removing that member's last job
  };
  std::vector<std::vector<Move>> moves;
};

std::vector<ChainClass> group_chains(const WcsInstance& inst, bool merge) {
  std::vector<ChainClass> classes;
  std::map<std::pair<std::vector<Int>, int>, std::size_t> index;
  for (std::size_t i = 0; i < inst.chains.size(); ++i) {
    if (merge) {
      auto key = std::make_pair(inst.chains[i], inst.indicators[i]);
      auto [it, inserted] = index.emplace(std::move(key), classes.size());
      if (!inserted) {
        classes[it->second].members.push_back(i);
        continue;
      }
    }
    ChainClass c;
    c.members.push_back(i);
    c.length = inst.chains[i].size();
    classes.push_back(std::move(c));
  }
  return classes;
}

// a * b, or limit + 1 when that exceeds limit.
Wide mul_capped(Wide a, Wide b, Wide limit) {
  if (b != 0 && a > limit / b) return limit + 1;
  return std::min(a * b, limit + 1);
}

Wide class_state_count(const ChainClass& c, Wide limit) {
  return binomial_capped(c.members.size() + c.length, c.members.size(), limit);
}

void enumerate_states(ChainClass& c) {
  const std::size_t k = c.members.size();
  std::vector<std::uint32_t> v(k, 0);
  // Non-increasing vectors with entries in [0, length], generated
  // recursively; sorted afterwards.
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t ceiling) -> void {
    if (pos == k) {
      c.states.push_back(v);
      return;
    }
    for (std::uint32_t x = 0; x <= ceiling; ++x) {
      v[pos] = x;
      self(self, pos + 1, x);
    }
  };
  rec(rec, 0, static_cast<std::uint32_t>(c.length));

  auto sum_of = [](const std::vector<std::uint32_t>& s) {
    std::size_t total = 0;
    for (auto x : s) total += x;
    return total;
  };
  std::sort(c.states.begin(), c.states.end(), [&](const auto& a, const auto& b) {
    const auto sa = sum_of(a), sb = sum_of(b);
    return sa != sb ? sa < sb : a < b;
  });

  std::map<std::vector<std::uint32_t>, std::uint32_t> lookup;
  for (std::uint32_t s = 0; s < c.states.size(); ++s) lookup.emplace(c.states[s], s);

  c.sums.resize(c.states.size());
  c.moves.resize(c.states.size());
  for (std::uint32_t s = 0; s < c.states.size(); ++s) {
    const auto& v_s = c.states[s];
    c.sums[s] = sum_of(v_s);
    for (std::uint32_t q = 0; q < k; ++q) {
      // Only the last member of a run of equal values may lose its last job
      // without breaking the non-increasing order.
      if (v_s[q] == 0 || (q + 1 < k && v_s[q + 1] == v_s[q])) continue;
      auto pred = v_s;
      --pred[q];
      c.moves[s].push_back({q, lookup.at(pred)});
    }
  }
}

std::string describe_count(Wide count, Wide limit) {
  return count > limit ? "more than " + to_string(limit) : to_string(count);
}

}  // namespace

std::uint64_t dp_state_count(const WcsInstance& inst, const DpOptions& options) {
  require_valid(inst);
  const Wide limit = static_cast<Wide>(kSaturated);
  Wide product = 1;
  for (const auto& c : group_chains(inst, options.merge_identical_chains)) {
    product = mul_capped(product, class_state_count(c, limit), limit);
  }
  return saturate(product);
}

std::uint64_t schedule_count(const WcsInstance& inst) {
  require_valid(inst);
  const Wide limit = static_cast<Wide>(kSaturated);
  Wide product = 1;
  std::uint64_t placed = 0;
  for (const auto& chain : inst.chains) {
    placed += chain.size();
    product = mul_capped(product, binomial_capped(placed, chain.size(), limit), limit);
  }
  return saturate(product);
}

ExactResult solve_dp(const WcsInstance& inst, const DpOptions& options) {
  require_valid(inst);
  auto classes = group_chains(inst, options.merge_identical_chains);

  const Wide cap = static_cast<Wide>(options.state_cap);
  Wide needed = 1;
  for (const auto& c : classes) {
    needed = mul_capped(needed, class_state_count(c, cap), cap);
  }
  if (needed > cap) {
    throw Error(ErrorKind::capacity,
                "dynamic program needs " + describe_count(needed, cap) +
                    " states, cap is " + std::to_string(options.state_cap) +
                    " (raw prefix-vector product " +
                    std::to_string(dp_state_count(inst, {options.state_cap, false})) +
                    ")");
  }
  for (auto& c : classes) enumerate_states(c);

  const std::size_t n_classes = classes.size();
  std::vector<std::size_t> stride(n_classes);
  std::size_t states = 1;
  for (std::size_t c = 0; c < n_classes; ++c) {
    stride[c] = states;
    states *= classes[c].states.size();
  }

  std::vector<std::size_t> class_of(inst.chains.size());
  std::vector<std::uint32_t> position_of(inst.chains.size());
  for (std::size_t c = 0; c < n_classes; ++c) {
    for (std::uint32_t q = 0; q < classes[c].members.size(); ++q) {
      class_of[classes[c].members[q]] = c;
      position_of[classes[c].members[q]] = q;
    }
  }

  // Cost of completing job `job` (0-based) of `chain` at time t.
  auto cost = [&](std::size_t chain, std::size_t job, Wide t) {
    const auto& w = inst.chains[chain];
    Wide f = checked_mul(w[job], t);
    if (job + 1 == w.size() && inst.indicators[chain] == 1) {
      f = checked_add(f, checked_mul(t, t));
    }
    return f;
  };

  std::vector<Wide> value(states, 0);
  std::vector<std::int32_t> choice(states, -1);
  std::vector<std::uint32_t> digit(n_classes, 0);
  std::size_t level = 0;  // |L|, the completion time of the last job

  // Filling by increasing flat index respects every dependency: a
  // predecessor differs in one coordinate, where its digit is smaller.
  for (std::size_t flat = 1; flat < states; ++flat) {
    for (std::size_t c = 0; c < n_classes; ++c) {
      level -= classes[c].sums[digit[c]];
      if (++digit[c] < classes[c].states.size()) {
        level += classes[c].sums[digit[c]];
        break;
      }
      digit[c] = 0;
    }

    bool have = false;
    Wide best = 0;
    std::int32_t best_chain = -1;
    for (std::size_t c = 0; c < n_classes; ++c) {
      const auto& cls = classes[c];
      const std::uint32_t d = digit[c];
      for (const auto& move : cls.moves[d]) {
        const std::size_t chain = cls.members[move.position];
        const std::size_t job = cls.states[d][move.position] - 1;
        const std::size_t pred = flat - (d - move.pred) * stride[c];
        const Wide cand = checked_add(value[pred], cost(chain, job, level));
        if (!have || cand < best ||
            (cand == best && static_cast<std::int32_t>(chain) < best_chain)) {
          have = true;
          best = cand;
          best_chain = static_cast<std::int32_t>(chain);
        }
      }
    }
    value[flat] = best;
    choice[flat] = best_chain;
  }

  ExactResult out;
  out.states = states;
  out.schedule.slots.resize(inst.chains.size());
  for (std::size_t i = 0; i < inst.chains.size(); ++i) {
    out.schedule.slots[i].assign(inst.chains[i].size(), 0);
  }

  std::size_t flat = states - 1;
  for (std::size_t c = 0; c < n_classes; ++c) {
    digit[c] = static_cast<std::uint32_t>(classes[c].states.size() - 1);
  }
  std::vector<Wide> path{value[flat]};
  for (std::size_t t = inst.job_count(); t > 0; --t) {
    const auto chain = static_cast<std::size_t>(choice[flat]);
    const std::size_t c = class_of[chain];
    const std::uint32_t q = position_of[chain];
    const auto& cls = classes[c];
    const std::uint32_t d = digit[c];
    const auto move = std::find_if(cls.moves[d].begin(), cls.moves[d].end(),
                                   [&](const auto& m) { return m.position == q; });
    out.schedule.slots[chain][cls.states[d][q] - 1] = static_cast<Int>(t);
    flat -= (d - move->pred) * stride[c];
    digit[c] = move->pred;
    path.push_back(value[flat]);
  }
  std::reverse(path.begin(), path.end());
  out.path_values = std::move(path);
  out.total = checked_add(value[states - 1], inst.constant);
  return out;
}

ExactResult brute_force(const WcsInstance& inst, std::uint64_t cap) {
  require_valid(inst);
  const std::uint64_t count = schedule_count(inst);
  if (count > cap) {
    throw Error(ErrorKind::capacity,
                "enumeration needs " +
                    (count == kSaturated ? std::string("more than 2^64")
                                         : std::to_string(count)) +
                    " schedules, cap is " + std::to_string(cap));
  }

  const std::size_t n = inst.chains.size();
  const std::size_t total = inst.job_count();
  std::vector<std::size_t> head(n, 0);
  std::vector<std::size_t> sequence, best_sequence;
  sequence.reserve(total);
  Wide best = 0;
  bool found = false;
  std::uint64_t visited = 0;

  auto extend = [&](auto&& self, Wide partial) -> void {
    if (sequence.size() == total) {
      ++visited;
      if (!found || partial < best) {
        found = true;
        best = partial;
        best_sequence = sequence;
      }
      return;
    }
    const Wide t = static_cast<Wide>(sequence.size() + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& w = inst.chains[i];
      if (head[i] == w.size()) continue;
      Wide f = checked_mul(w[head[i]], t);
      if (head[i] + 1 == w.size() && inst.indicators[i] == 1) {
        f = checked_add(f, t * t);
      }
      ++head[i];
      sequence.push_back(i);
      self(self, checked_add(partial, f));
      sequence.pop_back();
      --head[i];
    }
  };
  extend(extend, 0);

  ExactResult out;
  out.schedules = visited;
  out.schedule = schedule_from_sequence(chain_lengths(inst), best_sequence);
  out.total = checked_add(best, inst.constant);
  return out;
}

AgeSolution solve_min_age_exact(const MinAgeInstance& inst, ExactMethod method,
                                const DpOptions& options,
                                std::uint64_t enumeration_cap) {
  const WcsInstance wcs = to_wcs_special(inst);
  const ExactResult r = method == ExactMethod::dp
                            ? solve_dp(wcs, options)
                            : brute_force(wcs, enumeration_cap);
  if (r.total % 2 != 0) {
    throw std::logic_error("doubled age objective is odd: " + to_string(r.total));
  }
  AgeSolution out;
  out.schedule = job_to_age(r.schedule, inst.t0);
  out.doubled = r.total;
  out.age = r.total / 2;
  return out;
}

}  // namespace aoi
