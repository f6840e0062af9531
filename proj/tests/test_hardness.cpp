#include <doctest.h>

#include <algorithm>
#include <random>

#include "aoi/exact.hpp"
#include "aoi/hardness.hpp"
#include "aoi/transform.hpp"
#include "oracles.hpp"

using namespace aoi;

namespace {

// Threshold of the 3-Partition reduction. The a-job term
// sum_i r a_i (a_1 + ... + a_i) is symmetric in the elements and equals
// r ((sum a)^2 + sum a^2) / 2.
Wide reduction_threshold(const std::vector<Int>& a, Int b) {
  const Wide m = static_cast<Wide>(a.size() / 3);
  const Wide r = 10 * m * b * (b + 1);
  Wide sum = 0, squares = 0;
  for (Int x : a) {
    sum += x;
    squares += static_cast<Wide>(x) * x;
  }
  Wide q = r * (sum * sum + squares) / 2;
  for (Wide i = 1; i < m; ++i) {
    q += r * (m - i) * b;
    q += (r - 2 * i * (b + 1) + 1) * i * (b + 1);
    q += i * (b + 1) * i * (b + 1);
  }
  for (Wide i = 1; i <= 3 * m; ++i) {
    const Wide t = m * (b + 1) - 1 + i;
    q += t + t * t;
  }
  return q;
}

// Does any grouping of the elements into consecutive triples of a
// permutation hit b everywhere?
bool has_partition(std::vector<Int> a, Int b) {
  std::sort(a.begin(), a.end());
  do {
    bool ok = true;
    for (std::size_t k = 0; k < a.size() && ok; k += 3) ok = a[k] + a[k + 1] + a[k + 2] == b;
    if (ok) return true;
  } while (std::next_permutation(a.begin(), a.end()));
  return false;
}

// Minimum NonUni objective over every chain interleaving.
Wide nonuni_optimum(const NonUniInstance& inst) {
  std::vector<std::size_t> seq;
  for (std::size_t i = 0; i < inst.chains.size(); ++i) {
    seq.insert(seq.end(), inst.chains[i].size(), i);
  }
  Wide best = -1;
  do {
    std::vector<std::size_t> next(inst.chains.size(), 0);
    Wide t = 0, total = 0;
    for (std::size_t c : seq) {
      const auto& job = inst.chains[c][next[c]];
      t += job.proc;
      total += job.weight * t;
      if (++next[c] == inst.chains[c].size()) total += t * t;
    }
    if (best < 0 || total < best) best = total;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

NonUniInstance random_nonuni(std::mt19937_64& rng) {
  NonUniInstance inst;
  const int n = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < n; ++i) {
    const Int leaf = 2 * static_cast<Int>(rng() % 10) + 1;
    if (rng() & 1) {
      inst.chains.push_back({{leaf, 1}});
    } else {
      const Int w = 2 * (1 + static_cast<Int>(rng() % 10));
      const Int p = 2 * (1 + static_cast<Int>(rng() % 2));
      inst.chains.push_back({{w, p}, {leaf, 1}});
    }
  }
  return inst;
}

}  // namespace

TEST_CASE("3-partition validation and decision") {
  CHECK(validate_3partition({{3, 3, 4}, 10}).empty());
  CHECK_FALSE(validate_3partition({{2, 4, 4}, 10}).empty());
  CHECK_FALSE(validate_3partition({{3, 3, 5}, 10}).empty());
  CHECK_FALSE(validate_3partition({{3, 3, 4, 3}, 10}).empty());
  try {
    (void)check_3partition({{2, 4, 4}, 10});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::validation);
  }

  const auto yes = check_3partition({{6, 6, 8, 6, 6, 8}, 20});
  REQUIRE(yes.has_value());
  CHECK(yes->size() == 2);
  CHECK(check_3partition({{3, 3, 4}, 10}).has_value());
  CHECK_FALSE(check_3partition({{8, 8, 8, 8, 8, 12}, 26}).has_value());

  std::vector<Int> too_many(18, 5);
  CHECK_THROWS_AS(check_3partition({too_many, 15}), Error);
}

TEST_CASE("3-partition decision agrees with permutation search") {
  std::mt19937_64 rng(51);
  int checked = 0;
  while (checked < 150) {
    const Int b = 7 + static_cast<Int>(rng() % 10);
    std::vector<Int> a;
    const std::size_t m = 1 + rng() % 3;
    for (std::size_t k = 0; k + 1 < 3 * m; ++k) a.push_back(b / 4 + 1 + static_cast<Int>(rng() % 3));
    Int rest = static_cast<Int>(m) * b;
    for (Int x : a) rest -= x;
    a.push_back(rest);
    ThreePartitionInstance inst{a, b};
    if (!validate_3partition(inst).empty()) continue;
    ++checked;
    const auto witness = check_3partition(inst);
    CHECK(witness.has_value() == has_partition(a, b));
    if (witness) {
      std::vector<int> used(a.size(), 0);
      for (const auto& t : *witness) {
        CHECK(a[t[0]] + a[t[1]] + a[t[2]] == b);
        for (auto k : t) ++used[k];
      }
      CHECK(std::all_of(used.begin(), used.end(), [](int u) { return u == 1; }));
    }
    const auto even = make_even(inst);
    CHECK(check_3partition(even).has_value() == witness.has_value());
  }
}

TEST_CASE("doubling") {
  const auto even = make_even({{3, 3, 4}, 10});
  CHECK(even == ThreePartitionInstance{{6, 6, 8}, 20});
}

TEST_CASE("nonuni evaluation") {
  NonUniInstance inst;
  inst.chains = {{{3, 2}, {1, 1}}};
  const std::vector<std::size_t> order{0, 0};
  CHECK(evaluate_nonuni(inst, order).total == 18);
  const std::vector<std::size_t> bad{0, 0, 0};
  try {
    (void)evaluate_nonuni(inst, bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::structure);
  }

  // Unit processing times reduce to the ordinary objective.
  std::mt19937_64 rng(52);
  for (int k = 0; k < 50; ++k) {
    const auto w = oracle::random_wcs(rng, 4, 8, 20);
    NonUniInstance unit;
    for (const auto& c : w.chains) {
      unit.chains.emplace_back();
      for (Int x : c) unit.chains.back().push_back({x, 1});
    }
    const auto s = oracle::random_job_schedule(rng, w);
    const auto seq = oracle::sequence_of(s);
    CHECK(evaluate_nonuni(unit, seq).total == evaluate_wcs(w, s).total);
  }
}

TEST_CASE("reduction on one triple") {
  const auto r = reduce_3p({{6, 6, 8}, 20});
  REQUIRE(r.chains.size() == 3);
  CHECK(r.chains[0] == std::vector<NonUniJob>{{25200, 6}, {1, 1}});
  CHECK(r.chains[1] == std::vector<NonUniJob>{{25200, 6}, {1, 1}});
  CHECK(r.chains[2] == std::vector<NonUniJob>{{33600, 8}, {1, 1}});
  CHECK(r.separators.empty());
  CHECK(r.threshold == 1127120);
  CHECK(reduction_threshold({6, 6, 8}, 20) == 1127120);
  CHECK(nonuni_property_violations(r).empty());

  try {
    (void)reduce_3p({{3, 3, 4}, 10});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
}

TEST_CASE("reduction threshold and certificate") {
  const std::vector<ThreePartitionInstance> cases{
      {{6, 6, 8, 6, 6, 8}, 20},
      {{8, 10, 10, 8, 8, 12}, 28},
      {{10, 8, 12, 10, 12, 8, 10, 10, 10}, 30},
  };
  for (const auto& even : cases) {
    const auto r = reduce_3p(even);
    const std::size_t m = even.groups();
    CHECK(r.chains.size() == 4 * m - 1);
    CHECK(r.separators.size() == m - 1);
    CHECK(r.threshold == reduction_threshold(even.elems, even.b));
    CHECK(nonuni_property_violations(r).empty());
    const auto partition = check_3partition(even);
    REQUIRE(partition.has_value());
    const auto order = certificate_order(even, *partition);
    const auto eval = evaluate_nonuni(r, order);
    CHECK(eval.total == r.threshold);
    CHECK(eval.separator_offsets == std::vector<Int>(m - 1, 0));
  }
}

TEST_CASE("unit expansion") {
  NonUniInstance two;
  two.chains = {{{4, 2}, {1, 1}}, {{5, 1}}};
  two.threshold = 100;
  const auto c = expand_to_constrained(two);
  CHECK(c.instance.chains == std::vector<std::vector<Int>>{{2, 6, 3}, {7}});
  CHECK(c.threshold == 100 + 4 * 5);
  CHECK(constrained_violations(c.instance).empty());

  NonUniInstance odd;
  odd.chains = {{{3, 2}, {1, 1}}};
  try {
    (void)expand_to_constrained(odd);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
}

TEST_CASE("unit expansion preserves the decision") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 80; ++k) {
    auto inst = random_nonuni(rng);
    REQUIRE(nonuni_property_violations(inst).empty());
    const Wide opt = nonuni_optimum(inst);
    for (Wide q : {opt - 1, opt}) {
      inst.threshold = q;
      const auto c = expand_to_constrained(inst);
      const Wide expanded_opt = brute_force(c.instance).total;
      CHECK((expanded_opt <= c.threshold) == (opt <= q));
    }
  }
}

TEST_CASE("pipeline to min-age") {
  const auto hard = pipeline_3p_to_min_age({{3, 3, 4}, 10});
  CHECK(validate_min_age(hard.instance).empty());
  const auto expanded = expand_to_constrained(reduce_3p({{6, 6, 8}, 20}));
  CHECK(to_wcs(hard.instance) == expanded.instance);
  CHECK(2 * hard.age_threshold == expanded.threshold);
  CHECK(solve_min_age_exact(hard.instance, ExactMethod::dp).age <= hard.age_threshold);

  CHECK_THROWS_AS(pipeline_3p_to_min_age({{2, 4, 4}, 10}), Error);
}

TEST_CASE("adversarial families") {
  CHECK(gen_adversarial_wc(3).chains == std::vector<std::vector<Int>>{{1}, {1}, {2}});
  for (std::size_t n : {2u, 5u, 16u, 40u}) {
    const auto inst = gen_adversarial_wc(n);
    const Int len = static_cast<Int>(inst.chains.back().size());
    Int squares = 0;
    for (Int k = 1; k < static_cast<Int>(n); ++k) squares += k * k;
    const Int ni = static_cast<Int>(n);
    CHECK(squares <= (len + ni - 1) * (len + ni - 1));
    if (len > 1) CHECK(squares > (len + ni - 2) * (len + ni - 2));
    CHECK(inst.chains.size() == n);
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(inst.chains[i] == std::vector<Int>{1});
    CHECK(std::all_of(inst.chains.back().begin(), inst.chains.back().end(),
                      [](Int w) { return w == 2; }));
  }
  const auto cs = gen_adversarial_cs(4, 1000);
  CHECK(cs.chains == std::vector<std::vector<Int>>{{1}, {1}, {1}, {1000, 1}});
  CHECK(default_heavy_weight(16) == 4096000000LL);
  CHECK_THROWS_AS(gen_adversarial_wc(1), Error);
  CHECK_THROWS_AS(gen_adversarial_cs(1, 5), Error);
  CHECK_THROWS_AS(gen_adversarial_cs(3, 0), Error);
}
