#include "aoi/hardness.hpp"

#include <algorithm>
#include <numeric>

#include "aoi/transform.hpp"

namespace aoi {

Violations validate_3partition(const ThreePartitionInstance& inst) {
  Violations out;
  if (inst.elems.empty() || inst.elems.size() % 3 != 0) {
    out.push_back("elems: count must be a positive multiple of 3");
  }
  if (inst.b <= 0) out.push_back("b: must be positive");
  Wide sum = 0;
  for (std::size_t i = 0; i < inst.elems.size(); ++i) {
    const Int a = inst.elems[i];
    sum += a;
    // b/4 < a < b/2, kept in integers.
    if (!(4 * Wide{a} > inst.b && 2 * Wide{a} < inst.b)) {
      out.push_back("elems[" + std::to_string(i) + "]: " + std::to_string(a) +
                    " not strictly between b/4 and b/2");
    }
  }
  if (sum != Wide{inst.b} * static_cast<Wide>(inst.groups())) {
    out.push_back("elems: sum " + to_string(sum) + " differs from m * b");
  }
  return out;
}

namespace {

void require_valid_3p(const ThreePartitionInstance& inst) {
  auto v = validate_3partition(inst);
  if (!v.empty()) {
    throw Error(ErrorKind::validation, "invalid 3-partition instance: " + v.front(),
                v);
  }
}

Int to_int(Wide v) {
  auto n = narrow_i64(v);
  if (!n) throw Error(ErrorKind::capacity, "weight exceeds 64-bit range");
  return *n;
}

}  // namespace

std::optional<Partition> check_3partition(const ThreePartitionInstance& inst) {
  require_valid_3p(inst);
  if (inst.elems.size() > 15) {
    throw Error(ErrorKind::capacity, "exhaustive 3-partition check limited to 15 elements");
  }
  const std::size_t count = inst.elems.size();
  std::vector<bool> used(count, false);
  Partition triples;

  // The lowest unused element must belong to some triple; try every pair of
  // partners for it.
  auto search = [&](auto&& self) -> bool {
    std::size_t first = 0;
    while (first < count && used[first]) ++first;
    if (first == count) return true;
    used[first] = true;
    for (std::size_t j = first + 1; j < count; ++j) {
      if (used[j]) continue;
      used[j] = true;
      for (std::size_t k = j + 1; k < count; ++k) {
        if (used[k] || inst.elems[first] + inst.elems[j] + inst.elems[k] != inst.b) {
          continue;
        }
        used[k] = true;
        triples.push_back({first, j, k});
        if (self(self)) return true;
        triples.pop_back();
        used[k] = false;
      }
      used[j] = false;
    }
    used[first] = false;
    return false;
  };
  if (search(search)) return triples;
  return std::nullopt;
}

ThreePartitionInstance make_even(const ThreePartitionInstance& inst) {
  require_valid_3p(inst);
  ThreePartitionInstance out;
  out.b = to_int(2 * Wide{inst.b});
  for (Int a : inst.elems) out.elems.push_back(to_int(2 * Wide{a}));
  return out;
}

NonUniEvaluation evaluate_nonuni(const NonUniInstance& inst,
                                 std::span<const std::size_t> order) {
  std::size_t total_jobs = 0;
  for (const auto& c : inst.chains) total_jobs += c.size();
  if (order.size() != total_jobs) {
    throw Error(ErrorKind::structure, "order covers " + std::to_string(order.size()) +
                                          " jobs, instance has " +
                                          std::to_string(total_jobs));
  }
  std::vector<std::size_t> head(inst.chains.size(), 0);
  std::vector<Int> completion(inst.chains.size(), 0);
  Wide now = 0;
  NonUniEvaluation out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t c = order[k];
    if (c >= inst.chains.size() || head[c] == inst.chains[c].size()) {
      throw Error(ErrorKind::structure, "order entry " + std::to_string(k) +
                                            " names an exhausted chain");
    }
    const NonUniJob& job = inst.chains[c][head[c]];
    now = checked_add(now, job.proc);
    out.total = checked_add(out.total, checked_mul(job.weight, now));
    if (++head[c] == inst.chains[c].size()) {
      out.total = checked_add(out.total, checked_mul(now, now));
    }
    completion[c] = to_int(now);
  }
  for (const auto& sep : inst.separators) {
    out.separator_offsets.push_back(completion.at(sep.chain) - sep.target);
  }
  return out;
}

Violations nonuni_property_violations(const NonUniInstance& inst) {
  Violations out;
  for (std::size_t i = 0; i < inst.chains.size(); ++i) {
    const auto& c = inst.chains[i];
    const std::string path = "chains[" + std::to_string(i) + "]";
    if (c.empty() || c.size() > 2) {
      out.push_back(path + ": must hold one or two jobs");
      continue;
    }
    if (c.size() == 2) {
      const auto& first = c.front();
      if (first.weight <= 0 || first.weight % 2 != 0 || first.proc <= 0 ||
          first.proc % 2 != 0) {
        out.push_back(path + "[0]: internal job needs even positive weight and time");
      }
    }
    const auto& leaf = c.back();
    if (leaf.weight <= 0 || leaf.weight % 2 == 0) {
      out.push_back(path + ": leaf weight must be odd and positive");
    }
    if (leaf.proc != 1) out.push_back(path + ": leaf processing time must be 1");
  }
  return out;
}

NonUniInstance reduce_3p(const ThreePartitionInstance& even) {
  require_valid_3p(even);
  const bool all_even = even.b % 2 == 0 &&
                        std::all_of(even.elems.begin(), even.elems.end(),
                                    [](Int a) { return a % 2 == 0; });
  if (!all_even) {
    throw Error(ErrorKind::precondition, "reduce_3p needs every element and b even");
  }
  const Wide m = static_cast<Wide>(even.groups());
  const Wide b = even.b;
  const Wide r = checked_mul(checked_mul(10 * m, b), b + 1);

  NonUniInstance out;
  for (Int a : even.elems) {
    out.chains.push_back({{to_int(checked_mul(r, a)), a}, {1, 1}});
  }
  for (Wide i = 1; i < m; ++i) {
    out.separators.push_back({out.chains.size(), to_int(i * (b + 1))});
    out.chains.push_back({{to_int(r - 2 * i * (b + 1) + 1), 1}});
  }

  // Threshold: the objective of the certificate schedule, written term by
  // term (a-jobs back to back, the shift separators impose on later a-jobs,
  // separators on target, dummies last, squared leaf completions).
  Wide q = 0;
  Wide prefix = 0;
  for (Int a : even.elems) {
    prefix += a;
    q = checked_add(q, checked_mul(checked_mul(r, a), prefix));
  }
  for (Wide i = 1; i < m; ++i) {
    q = checked_add(q, checked_mul(r, (m - i) * b));
    q = checked_add(q, checked_mul(r - 2 * i * (b + 1) + 1, i * (b + 1)));
    q = checked_add(q, checked_mul(i * (b + 1), i * (b + 1)));
  }
  for (Wide i = 1; i <= 3 * m; ++i) {
    const Wide done = m * (b + 1) - 1 + i;
    q = checked_add(q, done);
    q = checked_add(q, checked_mul(done, done));
  }
  out.threshold = q;
  return out;
}

std::vector<std::size_t> certificate_order(const ThreePartitionInstance& even,
                                           const Partition& partition) {
  const std::size_t m = even.groups();
  if (partition.size() != m) {
    throw Error(ErrorKind::structure, "partition must hold m triples");
  }
  std::vector<std::size_t> order;
  for (std::size_t block = 0; block < m; ++block) {
    for (std::size_t idx : partition[block]) order.push_back(idx);
    if (block + 1 < m) order.push_back(3 * m + block);
  }
  for (std::size_t i = 0; i < 3 * m; ++i) order.push_back(i);
  return order;
}

ConstrainedInstance expand_to_constrained(const NonUniInstance& inst) {
  auto violations = nonuni_property_violations(inst);
  if (!violations.empty()) {
    throw Error(ErrorKind::precondition, "instance is not expandable to unit jobs: " + violations.front(),
                violations);
  }
  std::vector<std::vector<Int>> chains;
  for (const auto& c : inst.chains) {
    std::vector<Int> unit;
    if (c.size() == 2) {
      unit.assign(static_cast<std::size_t>(c[0].proc - 1), 2);
      unit.push_back(to_int(Wide{c[0].weight} + 2));
    }
    unit.push_back(to_int(Wide{c.back().weight} + 2));
    chains.push_back(std::move(unit));
  }
  ConstrainedInstance out;
  out.instance = WcsInstance::from_chains(std::move(chains));
  // Every unit slot 1..T pays an extra 2 * slot.
  const Wide total = static_cast<Wide>(out.instance.job_count());
  out.threshold = checked_add(inst.threshold, checked_mul(total, total + 1));
  return out;
}

HardAgeInstance pipeline_3p_to_min_age(const ThreePartitionInstance& inst) {
  const auto even = make_even(inst);
  const auto nonuni = reduce_3p(even);
  const auto constrained = expand_to_constrained(nonuni);
  HardAgeInstance out;
  out.instance = from_constrained(constrained.instance);
  if (constrained.threshold % 2 != 0) {
    throw std::logic_error("constrained threshold is odd: " +
                           to_string(constrained.threshold));
  }
  out.age_threshold = constrained.threshold / 2;
  return out;
}

WcsInstance gen_adversarial_wc(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::domain, "adversarial instances need n >= 2");
  Wide squares = 0;
  for (std::size_t k = 1; k < n; ++k) squares += static_cast<Wide>(k) * k;
  // Smallest positive L with 1^2 + ... + (n-1)^2 <= (L + n - 1)^2.
  Wide len = 1;
  while (squares > (len + n - 1) * (len + n - 1)) ++len;

  std::vector<std::vector<Int>> chains(n - 1, std::vector<Int>{1});
  chains.push_back(std::vector<Int>(static_cast<std::size_t>(len), 2));
  return WcsInstance::from_chains(std::move(chains));
}

WcsInstance gen_adversarial_cs(std::size_t n, Int heavy) {
  if (n < 2) throw Error(ErrorKind::domain, "adversarial instances need n >= 2");
  if (heavy < 1) throw Error(ErrorKind::domain, "heavy weight must be at least 1");
  std::vector<std::vector<Int>> chains(n - 1, std::vector<Int>{1});
  chains.push_back({heavy, 1});
  return WcsInstance::from_chains(std::move(chains));
}

Int default_heavy_weight(std::size_t n) {
  const Wide w = static_cast<Wide>(n) * n * n * 1'000'000;
  return to_int(w);
}

}  // namespace aoi
