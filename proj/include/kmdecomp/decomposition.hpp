#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kmdecomp/population.hpp"
#include "kmdecomp/step_function.hpp"

namespace kmdecomp {

// The family of per-unit curves G_j whose uniform average reproduces the
// population's Kaplan-Meier curve. A failed unit contributes its empirical
// unit step; a censored unit contributes the Kaplan-Meier curve of the units
// observed after it.
struct UnitDecomposition {
  Population population;
  std::vector<StepFunction> unit_curves;  // unit_curves[j-1] belongs to unit j
  double weight = 0.0;                    // 1 / n
};

// The estimator split into what was actually observed and what is imputed:
// empirical_part sums the failed units' steps, predicted_part the censored
// units' curves, both scaled by 1/n. The parts add up to the Kaplan-Meier
// curve, and empirical_part(tau) is exactly (#failures with t_j <= tau) / n.
struct AttributionSplit {
  StepFunction empirical_part;
  StepFunction predicted_part;
};

// One grid age with the cumulative per-unit layers
// s_m = (1/n) * sum_{j<=m} G_j(tau), m = 1..n. The last layer is the full
// estimator value.
struct StackedRow {
  double tau = 0.0;
  std::vector<double> layers;
};

// Mass-redistribution estimate plus the probability mass a terminal censored
// unit carried out of the sweep (1 - final curve value).
struct RedistributionResult {
  StepFunction curve;
  double lost_mass = 0.0;
};

// Per-unit estimator: unit_step(t_j) for a failed unit, the Kaplan-Meier
// curve of units j+1..n for a censored one. j is 1-based.
StepFunction unit_estimator(const Population& pop, std::size_t j);

// All n unit curves with weight 1/n. Throws std::domain_error on an empty
// population.
UnitDecomposition decompose(const Population& pop);

// Pointwise mean (1/n) * sum_j G_j over merged breakpoints; reproduces
// km_product(d.population).
StepFunction aggregate(const UnitDecomposition& d);

AttributionSplit split_empirical_predicted(const UnitDecomposition& d);

// Cumulative layers on tau_grid, which must be sorted ascending.
std::vector<StackedRow> stacked_contributions(const UnitDecomposition& d,
                                              std::span<const double> tau_grid);

// Largest gap, over comparison ages > t_j, between the tail Kaplan-Meier
// curve of censored unit j and the conditional form
// (F(tau) - F(t_j)) / (1 - F(t_j)) of the full curve. Unit j must be
// censored (std::invalid_argument otherwise).
double consistency_deviation(const Population& pop, std::size_t j);

// consistency_deviation(pop, j) <= tol.
bool consistency_check(const Population& pop, std::size_t j, double tol);

// One step of the self-consistency iteration on a family of per-unit
// sub-CDFs H_j: with H_bar the family mean,
//
//   H'_j = unit_step(t_j)                               if unit j failed,
//   H'_j = step(tau - t_j) * (H_bar(tau) - H_bar(t_j))
//                          / (1 - H_bar(t_j))           if censored.
//
// The decomposition's unit curves are a fixed point of this map. Throws
// std::domain_error when H_bar(t_j) = 1 for a censored unit.
std::vector<StepFunction> fixed_point_step(std::span<const StepFunction> family,
                                           const Population& pop);

// Efron-style sweep: every unit starts with mass 1/n; a censored unit passes
// its mass in equal shares to all later units, a failed unit turns its mass
// into a CDF jump at its age, and a censored final unit drops its mass (the
// curve plateaus below 1). The curve coincides with km_product(pop); kept as
// an independently-coded cross-check of it.
RedistributionResult redistribute_to_right(const Population& pop);

}  // namespace kmdecomp
