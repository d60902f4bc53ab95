#include "gvm/sensitivity.hpp"

#include <cmath>

#include "gvm/errors.hpp"

namespace gvm {

namespace {

double hidden_field(const GvmParams& params, int i, std::span<const double> x) {
  const double* w = params.hidden_weights.data() +
                    static_cast<std::size_t>(i) * params.input_dim;
  double field = -params.biases[i];
  for (int j = 0; j < params.input_dim; ++j) field += w[j] * x[j];
  return field;
}

}  // namespace

double neuron_gamma(const GvmParams& params, int i, int j, int k,
                    std::span<const double> x) {
  if (i < 0 || i >= params.hidden_count || j < 0 || j >= params.input_dim || k < 0 ||
      k >= params.input_dim)
    throw ConfigError("neuron_gamma: index out of range");
  const double beta = params.betas[i];
  const double fpp =
      transfer_eval(params.transfer, beta * hidden_field(params, i, x)).second_derivative;
  return beta * beta * params.weight(i, j) * params.weight(i, k) * fpp;
}

double machine_second_derivative(const GvmParams& params, int l, int j, int k,
                                 std::span<const double> x) {
  double acc = 0.0;
  for (int i = 0; i < params.hidden_count; ++i)
    acc += params.out_weight(l, i) * neuron_gamma(params, i, j, k, x);
  return acc;
}

SensitivityReport machine_rs(const GvmParams& params, std::span<const double> inputs,
                             RsMode mode, std::string input_descriptor) {
  const int m = params.input_dim;
  const int n = params.hidden_count;
  const int l_dim = params.output_dim;
  if (inputs.empty() || inputs.size() % static_cast<std::size_t>(m) != 0)
    throw ConfigError("machine_rs: need a nonempty list of M-dimensional inputs");
  const int n_inputs = static_cast<int>(inputs.size() / m);

  double acc = 0.0;
  std::size_t terms = 0;
  std::vector<double> a(n);  // w_li-independent part: beta^2 f''(beta hbar)
  for (int q = 0; q < n_inputs; ++q) {
    std::span<const double> x{inputs.data() + static_cast<std::size_t>(q) * m,
                              static_cast<std::size_t>(m)};
    for (int i = 0; i < n; ++i) {
      const double beta = params.betas[i];
      a[i] = beta * beta *
             transfer_eval(params.transfer, beta * hidden_field(params, i, x))
                 .second_derivative;
    }
    for (int l = 0; l < l_dim; ++l) {
      if (mode == RsMode::Diagonal) {
        for (int j = 0; j < m; ++j) {
          double sum = 0.0;
          for (int i = 0; i < n; ++i) {
            const double w = params.weight(i, j);
            sum += params.out_weight(l, i) * a[i] * w * w;
          }
          acc += std::abs(sum);
          ++terms;
        }
      } else {
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k) {
            double sum = 0.0;
            for (int i = 0; i < n; ++i)
              sum += params.out_weight(l, i) * a[i] * params.weight(i, j) *
                     params.weight(i, k);
            acc += std::abs(sum);
            ++terms;
          }
      }
    }
  }

  SensitivityReport report;
  report.mode = mode;
  report.n_inputs = n_inputs;
  report.r_s = acc / static_cast<double>(terms);
  report.input_descriptor = std::move(input_descriptor);
  return report;
}

double goal_curvature(const GoalFunction& goal, int grid_points) {
  if (goal.input_dim() != 1)
    throw ConfigError("goal_curvature: only defined for 1D goals");
  const std::vector<double> grid = uniform_grid(-goal.c_x, goal.c_x, grid_points);
  double acc = 0.0;
  for (double x : grid) {
    const double g2 = goal.second_derivative(x);
    acc += g2 * g2;
  }
  return std::sqrt(acc / grid.size());
}

}  // namespace gvm
