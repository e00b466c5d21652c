#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace kmdecomp {

// Right-continuous piecewise-constant function on [0, inf).
//
// The function equals base_value() on [0, b_0), post_values()[i] on
// [b_i, b_{i+1}) and the last post value from the last breakpoint on. The
// jump value is taken exactly at the breakpoint, i.e. a unit step placed at
// t already equals 1 at tau = t. Storage is canonical: consecutive equal
// values are merged, so breakpoints carry actual jumps only.
class StepFunction {
 public:
  // Identically equal to base everywhere.
  explicit StepFunction(double base = 0.0) : base_(base) {}

  // breakpoints must be strictly increasing, finite and non-negative;
  // values[i] is the function value on [breakpoints[i], breakpoints[i+1]).
  // Zero-size jumps are dropped.
  static StepFunction from_steps(std::vector<double> breakpoints,
                                 std::vector<double> values,
                                 double base = 0.0);

  // Value at tau. Throws std::domain_error for tau < 0 (or NaN).
  double evaluate(double tau) const;
  double operator()(double tau) const { return evaluate(tau); }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& post_values() const { return values_; }
  double base_value() const { return base_; }

  // Value on [last breakpoint, inf); base when there are no jumps.
  double final_value() const { return values_.empty() ? base_ : values_.back(); }

  bool has_jumps() const { return !breakpoints_.empty(); }

  // True when the function is a sub-CDF: non-decreasing and within [0, 1].
  bool is_monotone_cdf() const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  double base_ = 0.0;
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

// CDF of a unit known to fail at age t: 0 on [0, t), 1 from t on.
StepFunction unit_step(double t);

// Pointwise sum_i weights[i] * curves[i] over the merged breakpoints.
StepFunction weighted_sum(std::span<const StepFunction> curves,
                          std::span<const double> weights);

// Uniform average of the family; the empty family averages to 0.
StepFunction mean(std::span<const StepFunction> curves);

// Evaluation grid on which piecewise-constant equality is decided: 0, every
// breakpoint of every curve, every extra point, the midpoints between
// consecutive ages of that set, and one point past the largest age. Sorted
// and duplicate-free. Two step functions equal on this grid are equal
// everywhere up to the largest grid age and on the final plateau.
std::vector<double> merged_grid(std::span<const StepFunction> curves,
                                std::span<const double> extra = {});

// max over merged_grid({a, b}, extra) of |a - b|.
double max_abs_difference(const StepFunction& a, const StepFunction& b,
                          std::span<const double> extra = {});

// Equality at absolute tolerance tol on the merged grid.
bool approx_equal(const StepFunction& a, const StepFunction& b,
                  double tol = 1e-12);

}  // namespace kmdecomp
