#include "doctest.h"

#include <cmath>

#include "beadlab/mc_oracles.hpp"
#include "beadlab/torus.hpp"

using namespace beadlab;

namespace {
BeadConfiguration make(int n, int k, std::vector<std::vector<double>> strings) {
  BeadConfiguration cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.strings = std::move(strings);
  return cfg;
}
}  // namespace

TEST_CASE("empty configuration is vacuously valid") {
  CHECK(torus::validate_configuration(make(2, 0, {{}, {}})));
  CHECK_THROWS_AS(torus::occupation_number(make(2, 0, {{}, {}})), domain_error);
}

TEST_CASE("one bead per string on two strings") {
  const auto cfg = make(2, 1, {{0.2}, {0.5}});
  CHECK(torus::validate_configuration(cfg));
  CHECK(torus::occupation_number(cfg) == 1);
  CHECK(torus::tilt(cfg) == doctest::Approx(0.5).epsilon(1e-14));

  const OccupationPath path = torus::build_occupation_path(cfg);
  CHECK(path.initial == RingSet::from_members(2, {0}));
  REQUIRE(path.jumps.size() == 2);
  CHECK(path.jumps[0].time == 0.2);
  CHECK(path.jumps[0].string == 0);
  CHECK(path.jumps[1].time == 0.5);
  CHECK(path.jumps[1].string == 1);
  CHECK(path.state_at(0.3) == RingSet::from_members(2, {1}));
  CHECK(path.state_at(0.9) == RingSet::from_members(2, {0}));
}

TEST_CASE("interlacing violation is a false verdict") {
  // no bead of string 1 separates 0.1 and 0.2 on string 0
  const auto bad = make(3, 2, {{0.1, 0.2}, {0.5, 0.6}, {0.7, 0.8}});
  CHECK_FALSE(torus::validate_configuration(bad));
  CHECK_THROWS_AS(torus::occupation_number(bad), domain_error);
}

TEST_CASE("staircase of singletons and its reflection") {
  // The path oracle pins the value: jumps 0->1->2->0 keep a single walker.
  const auto cfg = make(3, 1, {{0.1}, {0.2}, {0.3}});
  CHECK(torus::validate_configuration(cfg));
  const OccupationPath path = torus::build_occupation_path(cfg);
  CHECK(path.initial.size() == 1);
  CHECK(torus::occupation_number(cfg) == 1);
  CHECK(torus::tilt(cfg) == doctest::Approx(1.0 / 3).epsilon(1e-14));

  const auto mirrored = torus::reflect(cfg);
  CHECK(torus::occupation_number(mirrored) == 2);
}

TEST_CASE("coordinate ties are rejected, not resolved") {
  CHECK_FALSE(torus::validate_configuration(make(2, 1, {{0.4}, {0.4}})));
  CHECK_FALSE(torus::validate_configuration(
      make(3, 2, {{0.1, 0.5}, {0.3, 0.7}, {0.3, 0.9}})));
}

TEST_CASE("structural problems throw instead of returning false") {
  CHECK_THROWS_AS(torus::validate_configuration(make(2, 1, {{0.2}})), domain_error);
  CHECK_THROWS_AS(torus::validate_configuration(make(2, 1, {{1.2}, {0.5}})), domain_error);
  CHECK_THROWS_AS(torus::validate_configuration(make(2, 2, {{0.6, 0.2}, {0.1, 0.5}})),
                  domain_error);
  CHECK_THROWS_AS(torus::validate_configuration(make(1, 1, {{0.5}})), domain_error);
}

TEST_CASE("occupation number ranges over 1..n-1 on sampled configurations") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto cfg = mc::sample_uniform_config(5, 2, 3, seed);
    const int ell = torus::occupation_number(cfg);
    CHECK(ell == 3);
    CHECK(std::abs(torus::tilt(cfg) * 5 - ell) < 1e-12);
    const auto sums = torus::gap_sums(cfg);
    CHECK(sums.p_sum == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(sums.q_sum == doctest::Approx(3.0).epsilon(1e-14));
  }
}

TEST_CASE("occupation path cardinality is constant in time") {
  const auto cfg = mc::sample_uniform_config(4, 3, 2, 7);
  const OccupationPath path = torus::build_occupation_path(cfg);
  Rng rng(13);
  for (int i = 0; i < 64; ++i) {
    const double t = rng.uniform01();
    CHECK(path.state_at(t).size() == 2);
    CHECK(path.state_at(t) == torus::occupied_set_at(cfg, t));
  }
}

TEST_CASE("configuration json uses decimal strings and round trips") {
  const auto cfg = BeadConfiguration::from_json_text(
      R"({"n":2,"k":1,"strings":[["0.2"],["0.5"]]})");
  CHECK(cfg.n == 2);
  CHECK(cfg.strings[1][0] == 0.5);
  const auto again = BeadConfiguration::from_json_text(cfg.to_json_text());
  CHECK(again.strings == cfg.strings);
}
