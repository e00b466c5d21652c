#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "kmdecomp/estimator.hpp"
#include "kmdecomp/simulation.hpp"

using namespace kmdecomp;

TEST_SUITE("simulation") {

TEST_CASE("weibull_sample inverse transform") {
  const double u = 1.0 - std::exp(-1.0);
  CHECK(weibull_sample({1.0, 1.0}, u) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(weibull_sample({2.0, 3.0}, u) == doctest::Approx(3.0).epsilon(1e-12));

  SUBCASE("monotone in u") {
    const WeibullSpec spec{1.4, 1.0};
    double prev = 0.0;
    for (double x = 0.05; x < 1.0; x += 0.05) {
      const double sample = weibull_sample(spec, x);
      CHECK(sample > prev);
      prev = sample;
    }
  }
  SUBCASE("u outside (0,1) is rejected") {
    CHECK_THROWS_AS(weibull_sample({1, 1}, 0.0), std::domain_error);
    CHECK_THROWS_AS(weibull_sample({1, 1}, 1.0), std::domain_error);
    CHECK_THROWS_AS(weibull_sample({1, 1}, -0.5), std::domain_error);
    CHECK_THROWS_AS(weibull_sample({1, 1}, std::nan("")), std::domain_error);
  }
  SUBCASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(weibull_sample({0.0, 1.0}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(weibull_sample({1.0, -2.0}, 0.5), std::invalid_argument);
  }
}

TEST_CASE("true_weibull_cdf") {
  CHECK(true_weibull_cdf({1.0, 1.0}, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  CHECK(true_weibull_cdf({1.4, 1.0}, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  CHECK(true_weibull_cdf({1.4, 1.0}, 0.0) == 0.0);
  CHECK_THROWS_AS(true_weibull_cdf({1.4, 1.0}, -0.1), std::domain_error);
}

TEST_CASE("simulation is deterministic per seed") {
  SimConfig cfg;
  cfg.n = 50;
  cfg.failure = {1.4, 1.0};
  cfg.censoring = {1.0, 1.5};
  cfg.seed = 20260808;

  const SimulationResult a = simulate_population(cfg);
  const SimulationResult b = simulate_population(cfg);
  REQUIRE(a.observed.size() == b.observed.size());
  for (std::size_t i = 0; i < a.observed.size(); ++i) {
    CHECK(a.observed[i] == b.observed[i]);
    CHECK(a.latent[i].failure_age == b.latent[i].failure_age);
    CHECK(a.latent[i].censor_age == b.latent[i].censor_age);
  }
  CHECK(a.population == b.population);

  cfg.seed = 20260809;
  const SimulationResult c = simulate_population(cfg);
  bool any_different = false;
  for (std::size_t i = 0; i < c.observed.size(); ++i) {
    if (c.observed[i].age != a.observed[i].age) any_different = true;
  }
  CHECK(any_different);
}

TEST_CASE("observations agree with the latent draws") {
  SimConfig cfg;
  cfg.n = 500;
  cfg.failure = {1.4, 1.0};
  cfg.censoring = {1.0, 1.5};
  cfg.seed = 99;

  const SimulationResult sim = simulate_population(cfg);
  REQUIRE(sim.observed.size() == 500);
  REQUIRE(sim.latent.size() == 500);
  for (std::size_t i = 0; i < sim.observed.size(); ++i) {
    const LatentDraw& latent = sim.latent[i];
    CHECK(sim.observed[i].event == (latent.failure_age <= latent.censor_age));
    CHECK(sim.observed[i].age == std::min(latent.failure_age, latent.censor_age));
  }
}

TEST_CASE("a far-away censoring process observes every failure") {
  SimConfig cfg;
  cfg.n = 200;
  cfg.failure = {1.4, 1.0};
  cfg.censoring = {1.0, 1e9};
  cfg.seed = 7;

  const SimulationResult sim = simulate_population(cfg);
  for (const ObservedUnit& u : sim.observed) CHECK(u.event);
}

TEST_CASE("the reference configuration censors some units but not all") {
  SimConfig cfg;
  cfg.n = 100;
  cfg.failure = {1.4, 1.0};
  cfg.censoring = {1.0, 1.5};
  cfg.seed = 20260808;

  const SimulationResult sim = simulate_population(cfg);
  const std::size_t censored = static_cast<std::size_t>(
      std::count_if(sim.observed.begin(), sim.observed.end(),
                    [](const ObservedUnit& u) { return !u.event; }));
  CHECK(censored > 0);
  CHECK(censored < sim.observed.size());
}

TEST_CASE("invalid configurations are rejected") {
  SimConfig cfg;
  cfg.n = 0;
  CHECK_THROWS_AS(simulate_population(cfg), std::invalid_argument);
  cfg.n = 10;
  cfg.failure = {0.0, 1.0};
  CHECK_THROWS_AS(simulate_population(cfg), std::invalid_argument);
}

TEST_CASE("the estimator tracks the true CDF on a large uncensored sample") {
  SimConfig cfg;
  cfg.n = 10000;
  cfg.failure = {1.4, 1.0};
  cfg.censoring = {1.0, 1e12};  // effectively no censoring
  cfg.seed = 424242;

  const SimulationResult sim = simulate_population(cfg);
  const StepFunction km = km_product(sim.population);

  // Sup distance up to the 95th percentile of the failure process.
  const double q95 = weibull_sample(cfg.failure, 0.95);
  double sup = 0.0;
  double previous = 0.0;
  for (std::size_t i = 0; i < km.breakpoints().size(); ++i) {
    const double b = km.breakpoints()[i];
    if (b > q95) break;
    const double truth = true_weibull_cdf(cfg.failure, b);
    sup = std::max(sup, std::fabs(km.post_values()[i] - truth));
    sup = std::max(sup, std::fabs(previous - truth));  // approach from the left
    previous = km.post_values()[i];
  }
  sup = std::max(sup, std::fabs(km.evaluate(q95) - true_weibull_cdf(cfg.failure, q95)));
  CHECK(sup < 0.03);
}

}  // TEST_SUITE
