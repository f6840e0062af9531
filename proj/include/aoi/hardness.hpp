#pragma once

// Hard and adversarial instance generators built from the NP-hardness
// reduction chain 3-Partition -> NonUni-Min-WCS -> Constrained-Min-WCS ->
// Min-AGE, and from the families on which the single-objective schedules
// are far from optimal.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "aoi/model.hpp"

namespace aoi {

struct ThreePartitionInstance {
  std::vector<Int> elems;  // 3m positive integers
  Int b = 0;               // target sum of every triple

  std::size_t groups() const { return elems.size() / 3; }
  friend bool operator==(const ThreePartitionInstance&,
                         const ThreePartitionInstance&) = default;
};

// Sum equals m * b and b/4 < a < b/2 for every element.
Violations validate_3partition(const ThreePartitionInstance& inst);

// Triples of element indices, each summing to b.
using Partition = std::vector<std::array<std::size_t, 3>>;

// Exhaustive decision procedure for 3m <= 15; Error{capacity} beyond.
std::optional<Partition> check_3partition(const ThreePartitionInstance& inst);

// Doubles every element and the target.
ThreePartitionInstance make_even(const ThreePartitionInstance& inst);

struct NonUniJob {
  Int weight = 0;
  Int proc = 1;
  friend bool operator==(const NonUniJob&, const NonUniJob&) = default;
};

// Min-WCS with arbitrary processing times, in decision form.
struct NonUniInstance {
  struct Separator {
    std::size_t chain;  // single-job chain holding the separator
    Int target;         // completion time it must hit, i * (b + 1)
  };

  std::vector<std::vector<NonUniJob>> chains;
  Wide threshold = 0;
  std::vector<Separator> separators;
};

struct NonUniEvaluation {
  Wide total = 0;
  std::vector<Int> separator_offsets;  // completion - target, per separator
};

// `order` lists the chain whose next job runs, back to back from time 0.
NonUniEvaluation evaluate_nonuni(const NonUniInstance& inst,
                                 std::span<const std::size_t> order);

// Structural properties the expansion relies on: internal jobs have even
// positive weight and processing time, leaves have odd positive weight and
// unit processing time, and no chain is longer than two jobs.
Violations nonuni_property_violations(const NonUniInstance& inst);

// Requires every element and b even. Chains 0..3m-1 are (a-job, dummy)
// pairs, chains 3m..4m-2 the separators.
NonUniInstance reduce_3p(const ThreePartitionInstance& even);

// The schedule a yes-certificate induces on reduce_3p(even): each triple's
// a-jobs followed by the next separator, dummies last in chain order.
std::vector<std::size_t> certificate_order(const ThreePartitionInstance& even,
                                           const Partition& partition);

struct ConstrainedInstance {
  WcsInstance instance;
  Wide threshold = 0;
};

// Replaces every job of processing time p by p unit jobs.
ConstrainedInstance expand_to_constrained(const NonUniInstance& inst);

struct HardAgeInstance {
  MinAgeInstance instance;
  Wide age_threshold = 0;  // yes-instance <=> optimum age <= threshold
};

HardAgeInstance pipeline_3p_to_min_age(const ThreePartitionInstance& inst);

// n-1 unit-weight singletons plus a chain of weight-2 jobs long enough to
// make the wc-optimal schedule pay heavily in cs.
WcsInstance gen_adversarial_wc(std::size_t n);

// n-1 unit-weight singletons plus (heavy, 1); the cs-optimal schedule runs
// the heavy job last.
WcsInstance gen_adversarial_cs(std::size_t n, Int heavy);

// n^3 * 10^6.
Int default_heavy_weight(std::size_t n);

}  // namespace aoi
