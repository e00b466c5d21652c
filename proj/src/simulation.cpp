#include "kmdecomp/simulation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace kmdecomp {

namespace {

// Top 53 bits mapped to (0, 1), both endpoints excluded. Built from raw
// generator words so the stream is identical across standard libraries.
double uniform_open01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

void check_spec(const WeibullSpec& spec) {
  if (!(spec.shape > 0.0) || !(spec.scale > 0.0)) {
    throw std::invalid_argument("Weibull shape and scale must be positive");
  }
}

}  // namespace

double weibull_sample(const WeibullSpec& spec, double u) {
  check_spec(spec);
  if (!(u > 0.0) || !(u < 1.0)) {
    throw std::domain_error("weibull_sample: u must lie strictly in (0, 1)");
  }
  return spec.scale * std::pow(-std::log1p(-u), 1.0 / spec.shape);
}

double true_weibull_cdf(const WeibullSpec& spec, double tau) {
  check_spec(spec);
  if (!(tau >= 0.0)) throw std::domain_error("true_weibull_cdf: age must be non-negative");
  return -std::expm1(-std::pow(tau / spec.scale, spec.shape));
}

SimulationResult simulate_population(const SimConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("simulate_population: n must be at least 1");
  check_spec(cfg.failure);
  check_spec(cfg.censoring);

  std::mt19937_64 rng(cfg.seed);
  SimulationResult out;
  out.observed.reserve(cfg.n);
  out.latent.reserve(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const double t_fail = weibull_sample(cfg.failure, uniform_open01(rng));
    const double t_cens = weibull_sample(cfg.censoring, uniform_open01(rng));
    const bool failed = t_fail <= t_cens;  // a tie counts as an observed failure
    out.observed.push_back({failed ? t_fail : t_cens, failed});
    out.latent.push_back({t_fail, t_cens});
  }
  out.population = build_population(out.observed);
  return out;
}

}  // namespace kmdecomp
