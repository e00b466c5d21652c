#include "kmdecomp/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kmdecomp {

StepFunction km_product(const Population& pop) {
  const std::size_t n = pop.size();
  std::vector<double> bps;
  std::vector<double> vals;
  double surviving = 1.0;
  for (std::size_t j = 1; j <= n; ++j) {
    const ObservedUnit& u = pop.unit(j);
    if (!u.event) continue;
    surviving *= 1.0 - 1.0 / static_cast<double>(n - j + 1);
    const double value = 1.0 - surviving;
    // Failures at a tied stored age share one jump.
    if (!bps.empty() && bps.back() == u.age) {
      vals.back() = value;
    } else {
      bps.push_back(u.age);
      vals.push_back(value);
    }
  }
  return StepFunction::from_steps(std::move(bps), std::move(vals));
}

StepFunction empirical_cdf(std::vector<double> ages) {
  if (ages.empty()) throw std::domain_error("empirical_cdf: empty sample");
  for (double a : ages) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw std::domain_error("empirical_cdf: ages must be finite and non-negative");
    }
  }
  std::sort(ages.begin(), ages.end());

  const double n = static_cast<double>(ages.size());
  std::vector<double> bps;
  std::vector<double> vals;
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < ages.size()) {
    std::size_t j = i;
    while (j < ages.size() && ages[j] == ages[i]) ++j;
    count += j - i;
    bps.push_back(ages[i]);
    vals.push_back(static_cast<double>(count) / n);
    i = j;
  }
  return StepFunction::from_steps(std::move(bps), std::move(vals));
}

StepFunction conditional_cdf(const StepFunction& f, double t) {
  const double ft = f.evaluate(t);
  if (ft >= 1.0) {
    throw std::domain_error("conditional_cdf: conditioning on survival past a certain failure");
  }
  const double denom = 1.0 - ft;
  std::vector<double> bps;
  std::vector<double> vals;
  const std::vector<double>& b = f.breakpoints();
  const std::vector<double>& v = f.post_values();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] > t) {
      bps.push_back(b[i]);
      vals.push_back((v[i] - ft) / denom);
    }
  }
  return StepFunction::from_steps(std::move(bps), std::move(vals));
}

StepFunction unit_km_via_imputation(const Population& pop, std::size_t j) {
  const ObservedUnit& u = pop.unit(j);
  if (u.event) return unit_step(u.age);
  return conditional_cdf(km_product(pop), u.age);
}

}  // namespace kmdecomp
