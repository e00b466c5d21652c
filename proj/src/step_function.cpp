#include "kmdecomp/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kmdecomp {

StepFunction StepFunction::from_steps(std::vector<double> breakpoints,
                                      std::vector<double> values, double base) {
  if (breakpoints.size() != values.size()) {
    throw std::invalid_argument("from_steps: breakpoints and values differ in length");
  }
  StepFunction out(base);
  double current = base;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const double b = breakpoints[i];
    if (!std::isfinite(b) || b < 0.0) {
      throw std::invalid_argument("from_steps: breakpoints must be finite and non-negative");
    }
    if (i > 0 && !(b > breakpoints[i - 1])) {
      throw std::invalid_argument("from_steps: breakpoints must be strictly increasing");
    }
    if (values[i] != current) {
      out.breakpoints_.push_back(b);
      out.values_.push_back(values[i]);
      current = values[i];
    }
  }
  return out;
}

double StepFunction::evaluate(double tau) const {
  if (!(tau >= 0.0)) throw std::domain_error("evaluate: age must be non-negative");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), tau);
  if (it == breakpoints_.begin()) return base_;
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

bool StepFunction::is_monotone_cdf() const {
  double prev = base_;
  if (prev < 0.0 || prev > 1.0) return false;
  for (double v : values_) {
    if (v < prev || v > 1.0) return false;
    prev = v;
  }
  return true;
}

StepFunction unit_step(double t) {
  if (!(t >= 0.0)) throw std::domain_error("unit_step: age must be non-negative");
  return StepFunction::from_steps({t}, {1.0});
}

StepFunction weighted_sum(std::span<const StepFunction> curves,
                          std::span<const double> weights) {
  if (curves.size() != weights.size()) {
    throw std::invalid_argument("weighted_sum: curves and weights differ in length");
  }
  double base = 0.0;
  std::vector<double> bps;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    base += weights[i] * curves[i].base_value();
    bps.insert(bps.end(), curves[i].breakpoints().begin(), curves[i].breakpoints().end());
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  std::vector<double> vals(bps.size());
  for (std::size_t k = 0; k < bps.size(); ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      s += weights[i] * curves[i].evaluate(bps[k]);
    }
    vals[k] = s;
  }
  return StepFunction::from_steps(std::move(bps), std::move(vals), base);
}

StepFunction mean(std::span<const StepFunction> curves) {
  if (curves.empty()) return StepFunction(0.0);
  std::vector<double> weights(curves.size(), 1.0 / static_cast<double>(curves.size()));
  return weighted_sum(curves, weights);
}

std::vector<double> merged_grid(std::span<const StepFunction> curves,
                                std::span<const double> extra) {
  std::vector<double> ages{0.0};
  for (const StepFunction& c : curves) {
    ages.insert(ages.end(), c.breakpoints().begin(), c.breakpoints().end());
  }
  ages.insert(ages.end(), extra.begin(), extra.end());
  std::sort(ages.begin(), ages.end());
  ages.erase(std::unique(ages.begin(), ages.end()), ages.end());

  std::vector<double> grid = ages;
  for (std::size_t i = 0; i + 1 < ages.size(); ++i) {
    grid.push_back(ages[i] + 0.5 * (ages[i + 1] - ages[i]));
  }
  grid.push_back(ages.back() + 1.0);  // final plateau
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double max_abs_difference(const StepFunction& a, const StepFunction& b,
                          std::span<const double> extra) {
  const StepFunction curves[] = {a, b};
  double worst = 0.0;
  for (double tau : merged_grid(curves, extra)) {
    worst = std::max(worst, std::fabs(a.evaluate(tau) - b.evaluate(tau)));
  }
  return worst;
}

bool approx_equal(const StepFunction& a, const StepFunction& b, double tol) {
  return max_abs_difference(a, b) <= tol;
}

}  // namespace kmdecomp
