#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "kmdecomp/step_function.hpp"

using namespace kmdecomp;

TEST_SUITE("step_function") {

TEST_CASE("evaluation takes the jump value exactly at the breakpoint") {
  const StepFunction f = unit_step(1.2);
  CHECK(f.evaluate(1.2) == 1.0);
  CHECK(f.evaluate(1.1999) == 0.0);
  CHECK(f.evaluate(100.0) == 1.0);
}

TEST_CASE("the empty step function is its base value everywhere") {
  const StepFunction f;
  CHECK(f.evaluate(0.0) == 0.0);
  CHECK(f.evaluate(123.0) == 0.0);
  CHECK(f.final_value() == 0.0);
  CHECK_FALSE(f.has_jumps());
}

TEST_CASE("negative ages are rejected") {
  const StepFunction f = unit_step(1.0);
  CHECK_THROWS_AS(f.evaluate(-0.1), std::domain_error);
  CHECK_THROWS_AS(unit_step(-1.0), std::domain_error);
}

TEST_CASE("unit_step") {
  const StepFunction f = unit_step(1.2);
  REQUIRE(f.breakpoints() == std::vector<double>{1.2});
  REQUIRE(f.post_values() == std::vector<double>{1.0});

  CHECK(unit_step(0.0).evaluate(0.0) == 1.0);
  CHECK(unit_step(5.0).evaluate(4.9) == 0.0);
}

TEST_CASE("from_steps canonicalizes away zero-size jumps") {
  const StepFunction f = StepFunction::from_steps({1.0, 2.0, 3.0}, {0.25, 0.25, 0.5});
  CHECK(f.breakpoints() == std::vector<double>{1.0, 3.0});
  CHECK(f.post_values() == std::vector<double>{0.25, 0.5});

  const StepFunction flat = StepFunction::from_steps({1.0, 2.0}, {0.0, 0.0});
  CHECK_FALSE(flat.has_jumps());
}

TEST_CASE("from_steps validates its inputs") {
  CHECK_THROWS_AS(StepFunction::from_steps({2.0, 1.0}, {0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction::from_steps({1.0, 1.0}, {0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction::from_steps({-1.0}, {0.1}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction::from_steps({1.0}, {0.1, 0.2}), std::invalid_argument);
}

TEST_CASE("weighted_sum combines curves pointwise") {
  const StepFunction curves[] = {unit_step(1.0), unit_step(2.0)};
  const double weights[] = {0.25, 0.5};
  const StepFunction sum = weighted_sum(curves, weights);
  CHECK(sum.evaluate(0.5) == 0.0);
  CHECK(sum.evaluate(1.0) == 0.25);
  CHECK(sum.evaluate(2.0) == 0.75);
  CHECK(sum.breakpoints() == std::vector<double>{1.0, 2.0});

  CHECK_THROWS_AS(weighted_sum(curves, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("mean of an empty family is zero") {
  CHECK_FALSE(mean({}).has_jumps());
  CHECK(mean({}).base_value() == 0.0);
}

TEST_CASE("mean averages uniformly") {
  const StepFunction curves[] = {unit_step(1.0), unit_step(3.0)};
  const StepFunction m = mean(curves);
  CHECK(m.evaluate(2.0) == 0.5);
  CHECK(m.evaluate(3.0) == 1.0);
}

TEST_CASE("merged_grid covers breakpoints, midpoints, zero and the tail") {
  const StepFunction curves[] = {unit_step(2.0), unit_step(4.0)};
  const std::vector<double> grid = merged_grid(curves);
  // 0, midpoint 1, 2, midpoint 3, 4, past-the-end 5.
  CHECK(grid == std::vector<double>{0.0, 1.0, 2.0, 3.0, 4.0, 5.0});

  const double extra[] = {6.0};
  const std::vector<double> wide = merged_grid(curves, extra);
  CHECK(wide.back() == 7.0);
  CHECK(std::find(wide.begin(), wide.end(), 6.0) != wide.end());
  CHECK(std::find(wide.begin(), wide.end(), 5.0) != wide.end());
}

TEST_CASE("approx_equal sees through representation differences") {
  const StepFunction a = StepFunction::from_steps({1.0, 2.0}, {0.5, 1.0});
  const StepFunction b = weighted_sum(std::vector<StepFunction>{unit_step(1.0), unit_step(2.0)},
                                      std::vector<double>{0.5, 0.5});
  CHECK(approx_equal(a, b));
  CHECK(max_abs_difference(a, b) == 0.0);

  const StepFunction c = StepFunction::from_steps({1.0, 2.0}, {0.5, 1.0 - 1e-9});
  CHECK_FALSE(approx_equal(a, c));
  CHECK(max_abs_difference(a, c) == doctest::Approx(1e-9));
}

TEST_CASE("is_monotone_cdf") {
  CHECK(unit_step(1.0).is_monotone_cdf());
  CHECK(StepFunction().is_monotone_cdf());
  CHECK_FALSE(StepFunction::from_steps({1.0, 2.0}, {0.5, 0.25}).is_monotone_cdf());
  CHECK_FALSE(StepFunction::from_steps({1.0}, {1.5}).is_monotone_cdf());
}

}  // TEST_SUITE
