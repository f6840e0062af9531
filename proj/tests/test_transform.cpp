#include <doctest.h>

#include <random>

#include "aoi/transform.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace aoi;

namespace {

// Constrained instance: even positive internal weights, odd leaves.
WcsInstance random_constrained(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> chains(1, 5), len(1, 5), half(1, 20);
  WcsInstance inst;
  const int n = chains(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<Int> c(static_cast<std::size_t>(len(rng)));
    for (auto& w : c) w = 2 * half(rng);
    c.back() = 2 * half(rng) - 1;
    inst.chains.push_back(c);
  }
  inst.indicators.assign(inst.chains.size(), 1);
  return inst;
}

}  // namespace

TEST_CASE("two-pair instance maps to the doubled weights") {
  const auto w = to_wcs(fixtures::two_pair_age());
  CHECK(w.chains == std::vector<std::vector<Int>>{{6, 2, 15}, {4, 19}});
  CHECK(w.all_indicators_one());
  CHECK(w.constant == 0);

  MinAgeInstance single;
  single.t0 = 5;
  single.pairs = {{2, {5}}};
  CHECK(to_wcs(single).chains == std::vector<std::vector<Int>>{{5}});
}

TEST_CASE("to_wcs refuses special receivers and invalid instances") {
  auto inst = fixtures::two_pair_age();
  inst.special = {0};
  try {
    (void)to_wcs(inst);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
  inst = fixtures::two_pair_age();
  inst.t0 = 9;
  try {
    (void)to_wcs(inst);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::validation);
  }
}

TEST_CASE("to_wcs parity") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    const auto w = to_wcs(oracle::random_age(rng, 5, 10, 5));
    CHECK(constrained_violations(w).empty());
    for (const auto& c : w.chains) {
      for (std::size_t j = 0; j + 1 < c.size(); ++j) CHECK((c[j] > 0 && c[j] % 2 == 0));
      CHECK((c.back() > 0 && c.back() % 2 == 1));
    }
  }
}

TEST_CASE("special receivers") {
  auto inst = fixtures::two_pair_age();
  inst.special = {1};
  const auto w = to_wcs_special(inst);
  CHECK(w.chains == std::vector<std::vector<Int>>{{6, 2, 15}, {4, 10}});
  CHECK(w.indicators == std::vector<int>{1, 0});
  CHECK(w.constant == 90);

  CHECK(to_wcs_special(fixtures::two_pair_age()) == to_wcs(fixtures::two_pair_age()));

  // Last birthday equal to t0 leaves only the T(T+1) term.
  MinAgeInstance tight;
  tight.t0 = 7;
  tight.pairs = {{1, {4, 7}}};
  tight.special = {0};
  CHECK(to_wcs_special(tight).constant == 2 * 3);
}

TEST_CASE("schedule shift") {
  const auto job = age_to_job(fixtures::two_pair_schedule(), 15);
  CHECK(job == fixtures::two_chain_schedule());
  CHECK(job_to_age(job, 15) == fixtures::two_pair_schedule());

  const AgeSchedule bad{{{19, 16, 20}, {17, 18}}};
  CHECK_FALSE(is_feasible_wcs(fixtures::two_chain_wcs(), age_to_job(bad, 15)));
  CHECK(job_to_age(age_to_job(bad, 15), 15) == bad);

  try {
    (void)age_to_job({{{15, 19, 20}, {17, 18}}}, 15);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain);
  }
  CHECK_THROWS_AS((void)job_to_age({{{1, 4, 6}, {2, 3}}}, 15), Error);
}

TEST_CASE("doubled age equals the transformed objective") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 500; ++k) {
    const auto inst = oracle::random_age(rng, 4, 9, 5, k % 2 == 1);
    const auto s = oracle::random_age_schedule(rng, inst);
    const auto w = to_wcs_special(inst);
    const auto job = age_to_job(s, inst.t0);
    CHECK(is_feasible_wcs(w, job));
    CHECK(2 * oracle::direct_age(inst, s) == evaluate_wcs(w, job).total);
  }
}

TEST_CASE("optima correspond") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 100; ++k) {
    const auto inst = oracle::random_age(rng, 3, 7, 4, k % 3 == 0);
    const auto w = to_wcs_special(inst);
    Wide best_age = -1;
    oracle::for_each_sequence(w, [&](const std::vector<std::size_t>& seq) {
      AgeSchedule s;
      s.times.resize(inst.pairs.size());
      for (std::size_t t = 0; t < seq.size(); ++t) {
        s.times[seq[t]].push_back(inst.t0 + static_cast<Int>(t + 1));
      }
      const Wide a = oracle::direct_age(inst, s);
      if (best_age < 0 || a < best_age) best_age = a;
    });
    CHECK(2 * best_age == oracle::permutation_optimum(w).total);
  }
}

TEST_CASE("from_constrained") {
  const auto back = from_constrained(WcsInstance::from_chains({{2, 3}}));
  CHECK(back.t0 == 3);
  REQUIRE(back.pairs.size() == 1);
  CHECK(back.pairs[0].b0 == 0);
  CHECK(back.pairs[0].births == std::vector<Int>{1, 3});

  const auto unit = from_constrained(WcsInstance::from_chains({{1}}));
  CHECK(unit.t0 == 1);
  CHECK(unit.pairs[0] == BirthdayChain{0, {1}});

  for (auto bad : {WcsInstance::from_chains({{2}}), WcsInstance::from_chains({{3, 3}}),
                   WcsInstance::from_chains({{0, 1}})}) {
    try {
      (void)from_constrained(bad);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::precondition);
    }
  }
  auto with_constant = WcsInstance::from_chains({{1}});
  with_constant.constant = 2;
  CHECK_THROWS_AS((void)from_constrained(with_constant), Error);
}

TEST_CASE("constrained round trip") {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 200; ++k) {
    const auto inst = random_constrained(rng);
    const auto age = from_constrained(inst);
    CHECK(validate_min_age(age).empty());
    CHECK(to_wcs(age) == inst);
  }
}
