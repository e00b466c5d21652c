#include "kmdecomp/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kmdecomp/estimator.hpp"

namespace kmdecomp {

StepFunction unit_estimator(const Population& pop, std::size_t j) {
  const ObservedUnit& u = pop.unit(j);
  if (u.event) return unit_step(u.age);
  return km_product(tail(pop, j));
}

UnitDecomposition decompose(const Population& pop) {
  if (pop.empty()) throw std::domain_error("decompose: empty population");
  UnitDecomposition d;
  d.population = pop;
  d.unit_curves.reserve(pop.size());
  for (std::size_t j = 1; j <= pop.size(); ++j) {
    d.unit_curves.push_back(unit_estimator(pop, j));
  }
  d.weight = 1.0 / static_cast<double>(pop.size());
  return d;
}

StepFunction aggregate(const UnitDecomposition& d) {
  std::vector<double> weights(d.unit_curves.size(), d.weight);
  return weighted_sum(d.unit_curves, weights);
}

AttributionSplit split_empirical_predicted(const UnitDecomposition& d) {
  const std::size_t n = d.population.size();

  // The empirical part is built directly as count/n so its values are exact
  // failure fractions, not accumulated sums of 1/n.
  std::vector<double> failure_ages;
  std::vector<double> censored_weights(n, 0.0);
  for (std::size_t j = 1; j <= n; ++j) {
    if (d.population.unit(j).event) {
      failure_ages.push_back(d.population.unit(j).age);
    } else {
      censored_weights[j - 1] = d.weight;
    }
  }

  AttributionSplit split;
  if (!failure_ages.empty()) {
    std::sort(failure_ages.begin(), failure_ages.end());
    std::vector<double> bps;
    std::vector<double> vals;
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < failure_ages.size()) {
      std::size_t j = i;
      while (j < failure_ages.size() && failure_ages[j] == failure_ages[i]) ++j;
      count += j - i;
      bps.push_back(failure_ages[i]);
      vals.push_back(static_cast<double>(count) / static_cast<double>(n));
      i = j;
    }
    split.empirical_part = StepFunction::from_steps(std::move(bps), std::move(vals));
  }
  split.predicted_part = weighted_sum(d.unit_curves, censored_weights);
  return split;
}

std::vector<StackedRow> stacked_contributions(const UnitDecomposition& d,
                                              std::span<const double> tau_grid) {
  for (std::size_t i = 1; i < tau_grid.size(); ++i) {
    if (tau_grid[i] < tau_grid[i - 1]) {
      throw std::domain_error("stacked_contributions: tau grid must be sorted ascending");
    }
  }
  std::vector<StackedRow> rows;
  rows.reserve(tau_grid.size());
  for (double tau : tau_grid) {
    StackedRow row;
    row.tau = tau;
    row.layers.reserve(d.unit_curves.size());
    double running = 0.0;
    for (const StepFunction& g : d.unit_curves) {
      running += d.weight * g.evaluate(tau);
      row.layers.push_back(running);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double consistency_deviation(const Population& pop, std::size_t j) {
  const ObservedUnit& u = pop.unit(j);
  if (u.event) {
    throw std::invalid_argument("consistency_deviation: unit must be censored");
  }
  const StepFunction lhs = km_product(tail(pop, j));
  const StepFunction rhs = conditional_cdf(km_product(pop), u.age);
  const StepFunction curves[] = {lhs, rhs};
  double worst = 0.0;
  for (double tau : merged_grid(curves)) {
    if (tau > u.age) {
      worst = std::max(worst, std::fabs(lhs.evaluate(tau) - rhs.evaluate(tau)));
    }
  }
  return worst;
}

bool consistency_check(const Population& pop, std::size_t j, double tol) {
  return consistency_deviation(pop, j) <= tol;
}

std::vector<StepFunction> fixed_point_step(std::span<const StepFunction> family,
                                           const Population& pop) {
  if (family.size() != pop.size()) {
    throw std::invalid_argument("fixed_point_step: family size differs from population size");
  }
  const StepFunction family_mean = mean(family);
  std::vector<StepFunction> next;
  next.reserve(pop.size());
  for (std::size_t j = 1; j <= pop.size(); ++j) {
    const ObservedUnit& u = pop.unit(j);
    if (u.event) {
      next.push_back(unit_step(u.age));
    } else {
      next.push_back(conditional_cdf(family_mean, u.age));
    }
  }
  return next;
}

RedistributionResult redistribute_to_right(const Population& pop) {
  const std::size_t n = pop.size();
  if (n == 0) throw std::domain_error("redistribute_to_right: empty population");

  std::vector<double> mass(n, 1.0 / static_cast<double>(n));
  std::vector<double> bps;
  std::vector<double> vals;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const ObservedUnit& u = pop.units()[i];
    if (u.event) {
      cumulative += mass[i];
      if (!bps.empty() && bps.back() == u.age) {
        vals.back() = cumulative;
      } else {
        bps.push_back(u.age);
        vals.push_back(cumulative);
      }
    } else {
      const std::size_t later = n - 1 - i;
      if (later > 0) {
        const double share = mass[i] / static_cast<double>(later);
        for (std::size_t k = i + 1; k < n; ++k) mass[k] += share;
      }
      // A terminal censored unit's mass leaves the sweep entirely.
    }
  }

  RedistributionResult out;
  out.curve = StepFunction::from_steps(std::move(bps), std::move(vals));
  out.lost_mass = 1.0 - out.curve.final_value();
  return out;
}

}  // namespace kmdecomp
