#include "gvm/goals.hpp"

#include <cmath>

#include "gvm/errors.hpp"
#include "gvm/rng.hpp"

namespace gvm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}
}  // namespace

std::string to_string(GoalId id) {
  switch (id) {
    case GoalId::Sin: return "sin";
    case GoalId::Sinc: return "sinc";
    case GoalId::Hermite5: return "hermite5";
    case GoalId::Hermite7: return "hermite7";
    case GoalId::SquareWave: return "square";
    case GoalId::Sinc2d: return "sinc2d";
  }
  return "?";
}

GoalId goal_from_string(const std::string& name) {
  if (name == "sin") return GoalId::Sin;
  if (name == "sinc") return GoalId::Sinc;
  if (name == "hermite5") return GoalId::Hermite5;
  if (name == "hermite7") return GoalId::Hermite7;
  if (name == "square") return GoalId::SquareWave;
  if (name == "sinc2d") return GoalId::Sinc2d;
  throw ConfigError("unknown goal function: " + name);
}

double GoalFunction::value(double x) const {
  switch (id) {
    case GoalId::Sin:
      return std::sin(x);
    case GoalId::Sinc:
      return sinc(x);
    case GoalId::Hermite5:
      return (63.0 * std::pow(x, 5) - 70.0 * x * x * x + 15.0 * x) / 8.0;
    case GoalId::Hermite7:
      return (429.0 * std::pow(x, 7) - 693.0 * std::pow(x, 5) + 315.0 * x * x * x -
              35.0 * x) /
             16.0;
    case GoalId::SquareWave:
      return std::sin(2.0 * kPi * x / square_period) >= 0.0 ? square_amplitude
                                                            : -square_amplitude;
    case GoalId::Sinc2d:
      throw ConfigError("sinc2d is a 2D goal");
  }
  return 0.0;
}

double GoalFunction::value2(double x, double y) const {
  if (id != GoalId::Sinc2d) throw ConfigError("value2 is only defined for sinc2d");
  return sinc(std::sqrt(x * x + y * y));
}

double GoalFunction::second_derivative(double x) const {
  switch (id) {
    case GoalId::Sin:
      return -std::sin(x);
    case GoalId::Sinc: {
      if (std::abs(x) < 1e-2) {
        const double x2 = x * x;
        return -1.0 / 3.0 + x2 / 10.0 - x2 * x2 / 168.0;
      }
      const double x2 = x * x;
      return -std::sin(x) / x - 2.0 * std::cos(x) / x2 + 2.0 * std::sin(x) / (x2 * x);
    }
    case GoalId::Hermite5:
      return (1260.0 * x * x * x - 420.0 * x) / 8.0;
    case GoalId::Hermite7:
      return (18018.0 * std::pow(x, 5) - 13860.0 * x * x * x + 1890.0 * x) / 16.0;
    case GoalId::SquareWave:
      return 0.0;  // flat almost everywhere
    case GoalId::Sinc2d:
      throw ConfigError("second_derivative is only defined for 1D goals");
  }
  return 0.0;
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
  if (count < 2) throw ConfigError("uniform_grid: need at least 2 points");
  std::vector<double> grid(count);
  const double step = (hi - lo) / (count - 1);
  for (int k = 0; k < count; ++k) grid[k] = lo + step * k;
  grid.back() = hi;
  return grid;
}

Dataset gen_regression(const GoalFunction& goal, int sample_count, double noise_sigma,
                       std::uint64_t seed) {
  if (sample_count < 2) throw ConfigError("gen_regression: need at least 2 samples");
  Dataset data;
  data.task = TaskKind::Regression;
  data.output_dim = 1;
  Rng rng(seed);

  if (goal.input_dim() == 1) {
    data.input_dim = 1;
    data.inputs = uniform_grid(-goal.c_x, goal.c_x, sample_count);
    data.targets.resize(sample_count);
    for (int k = 0; k < sample_count; ++k) {
      double t = goal.value(data.inputs[k]);
      if (noise_sigma > 0.0) t += noise_sigma * rng.normal();
      data.targets[k] = t;
    }
  } else {
    const int side = static_cast<int>(std::lround(std::sqrt(double(sample_count))));
    if (side * side != sample_count)
      throw ConfigError("gen_regression: 2D goal needs a perfect-square sample count");
    if (side < 2) throw ConfigError("gen_regression: 2D grid side must be >= 2");
    data.input_dim = 2;
    const std::vector<double> axis = uniform_grid(-goal.c_x, goal.c_x, side);
    data.inputs.reserve(static_cast<std::size_t>(sample_count) * 2);
    data.targets.reserve(sample_count);
    for (int r = 0; r < side; ++r)
      for (int c = 0; c < side; ++c) {
        data.inputs.push_back(axis[r]);
        data.inputs.push_back(axis[c]);
        double t = goal.value2(axis[r], axis[c]);
        if (noise_sigma > 0.0) t += noise_sigma * rng.normal();
        data.targets.push_back(t);
      }
  }
  data.provenance = to_string(goal.id) + " c_x=" + std::to_string(goal.c_x) +
                    " sigma=" + std::to_string(noise_sigma);
  data.validate();
  return data;
}

ControlParams default_regression_controls(double c_x) {
  if (!(c_x > 0.0)) throw ConfigError("default_regression_controls: c_x must be > 0");
  ControlParams control;
  control.c_w = 10.0 / c_x;
  control.c_b = 10.0;
  control.c_beta = 0.5;
  control.n_hidden = 100;
  control.cost_kind = CostKind::Fe;
  control.stop_cost = 1e-4;
  control.stop_steps = 100'000LL * control.n_hidden;
  return control;
}

}  // namespace gvm
