#pragma once

#include <span>
#include <vector>

#include "gvm/goals.hpp"
#include "gvm/params.hpp"

namespace gvm {

enum class RsMode { Full, Diagonal };

struct SensitivityReport {
  double r_s = 0.0;
  RsMode mode = RsMode::Full;
  int n_inputs = 0;
  std::string input_descriptor;
};

// Second derivative of hidden output i with respect to inputs j and k:
//   gamma^i_jk = beta_i^2 w_ij w_ik f''(beta_i hbar_i(x)).
double neuron_gamma(const GvmParams& params, int i, int j, int k,
                    std::span<const double> x);

// Machine-level second derivative d^2 y_l / dx_j dx_k = sum_i w_li gamma^i_jk.
double machine_second_derivative(const GvmParams& params, int l, int j, int k,
                                 std::span<const double> x);

// Average |sum_i w_li gamma^i_jk| over (l, j, k) triples — all (j, k) pairs in
// Full mode, j == k only in Diagonal mode — and over the given inputs
// (row-major, n_inputs x M).
SensitivityReport machine_rs(const GvmParams& params, std::span<const double> inputs,
                             RsMode mode, std::string input_descriptor = {});

// Reference curvature of a goal function: RMS of g'' over a uniform grid on
// [-c_x, c_x]. 1D goals only.
double goal_curvature(const GoalFunction& goal, int grid_points = 1001);

}  // namespace gvm
