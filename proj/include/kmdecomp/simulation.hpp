#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kmdecomp/population.hpp"

namespace kmdecomp {

struct WeibullSpec {
  double shape = 1.0;
  double scale = 1.0;
};

struct SimConfig {
  std::size_t n = 0;
  WeibullSpec failure;
  WeibullSpec censoring;
  std::uint64_t seed = 0;
};

struct LatentDraw {
  double failure_age = 0.0;
  double censor_age = 0.0;
};

// observed and latent are in draw order and aligned index-by-index; the
// population is the tie-resolved view of observed.
struct SimulationResult {
  std::vector<ObservedUnit> observed;
  std::vector<LatentDraw> latent;
  Population population;
};

// Inverse-CDF transform: scale * (-ln(1 - u))^(1/shape), u in (0, 1).
double weibull_sample(const WeibullSpec& spec, double u);

// 1 - exp(-(tau/scale)^shape), tau >= 0.
double true_weibull_cdf(const WeibullSpec& spec, double tau);

// Draws, per unit, a failure age T and a censoring age C from the two
// Weibull processes; the observation is (min(T, C), T <= C). The generator
// is mt19937_64 seeded with cfg.seed, draws mapped to (0, 1) by the top 53
// bits, consumed strictly in T-then-C order unit by unit. Identical configs
// give bit-identical results.
SimulationResult simulate_population(const SimConfig& cfg);

}  // namespace kmdecomp
