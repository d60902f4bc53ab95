#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gvm/params.hpp"

namespace gvm {

struct ForwardResult {
  std::vector<double> hidden_fields;   // h_bar, length N (pre-beta local fields)
  std::vector<double> hidden_outputs;  // y_bar, length N
  std::vector<double> output_fields;   // h, length L
};

// One pass through the three-layer map:
//   h_bar_i = sum_j w_ij x_j - b_i,  y_bar_i = f(beta_i h_bar_i),
//   h_l = sum_i w_li y_bar_i  (linear output layer).
ForwardResult forward(const GvmParams& params, std::span<const double> x);

// Output fields only, written into `fields` (length L). Hot path for
// test-set evaluation.
void forward_fields(const GvmParams& params, std::span<const double> x,
                    std::span<double> fields);

// argmax over output fields; ties broken by lowest index.
int classify(std::span<const double> output_fields);

// Fresh machine with every hidden parameter uniform in its control range and
// fair +/-1 output weights. Deterministic in `seed`.
GvmParams init_random(const ControlParams& control, int input_dim, int output_dim,
                      const Transfer& transfer, std::uint64_t seed);

}  // namespace gvm
