#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gvm/dataset.hpp"
#include "gvm/params.hpp"

namespace gvm {

enum class GoalId { Sin, Sinc, Hermite5, Hermite7, SquareWave, Sinc2d };

std::string to_string(GoalId id);
GoalId goal_from_string(const std::string& name);

// Synthetic goal functions behind the regression benchmarks. All are defined
// on [-c_x, c_x] per input dimension.
struct GoalFunction {
  GoalId id = GoalId::Sin;
  double c_x = 3.141592653589793;

  // Square wave shape: value +/- amplitude, sign(sin(2 pi x / period)),
  // with the zero crossings counted as +1. The exact shape is configurable.
  double square_period = 10.0;
  double square_amplitude = 1.0;

  int input_dim() const { return id == GoalId::Sinc2d ? 2 : 1; }

  double value(double x) const;             // 1D goals
  double value2(double x, double y) const;  // Sinc2d
  double value_at(const double* x) const {
    return input_dim() == 1 ? value(x[0]) : value2(x[0], x[1]);
  }

  // Analytic second derivative (1D goals; SquareWave is 0 almost everywhere).
  double second_derivative(double x) const;
};

// `count` evenly spaced points on [lo, hi], endpoints included.
std::vector<double> uniform_grid(double lo, double hi, int count);

// P samples on a uniform grid over [-c_x, c_x] (sqrt(P) x sqrt(P) for the 2D
// goal) with targets g(x) + Gaussian noise of the given sigma.
Dataset gen_regression(const GoalFunction& goal, int sample_count, double noise_sigma,
                       std::uint64_t seed);

// The input-rescaling convention: c_w = 10 / c_x so hidden fields land in a
// fixed interval, hence c_b = 10; c_beta defaults to 0.5.
ControlParams default_regression_controls(double c_x);

}  // namespace gvm
