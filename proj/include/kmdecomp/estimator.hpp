#pragma once

#include <cstddef>
#include <vector>

#include "kmdecomp/population.hpp"
#include "kmdecomp/step_function.hpp"

namespace kmdecomp {

// Product-limit (Kaplan-Meier) cumulative failure estimator,
//
//   F(tau) = 1 - prod_j (1 - event_j * step(tau - t_j) / (n - j + 1)),
//
// computed as a running product over the effective order. Jumps occur at
// failure ages only; the empty population yields the identically-zero curve.
// The curve holds its last value beyond the largest observed age.
StepFunction km_product(const Population& pop);

// Empirical CDF of a fully observed sample: F(tau) = #{ages <= tau} / n.
// Throws std::domain_error on an empty sample or a negative age.
StepFunction empirical_cdf(std::vector<double> ages);

// CDF conditioned on survival to age t:
//
//   G(tau) = step(tau - t) * (F(tau) - F(t)) / (1 - F(t)).
//
// Throws std::domain_error when F(t) = 1 (conditioning on survival past a
// certain failure is degenerate).
StepFunction conditional_cdf(const StepFunction& f, double t);

// Per-unit estimator built by using the population's Kaplan-Meier curve as
// the imputation function for censored units: a failed unit j yields
// unit_step(t_j), a censored unit yields conditional_cdf(km_product(pop),
// t_j). For a censored unit the conditioning is never degenerate: F(t_j) = 1
// would require a failure with at-risk count 1 at some k <= j, i.e. k = n
// failed, contradicting unit j being censored with j <= n. j is 1-based.
StepFunction unit_km_via_imputation(const Population& pop, std::size_t j);

}  // namespace kmdecomp
