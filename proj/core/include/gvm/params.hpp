#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gvm/transfer.hpp"

namespace gvm {

enum class CostKind { Fe, F1, F2, F3, F2bar };

std::string to_string(CostKind kind);
CostKind cost_kind_from_string(const std::string& name);

// The control-parameter set defining a family of statistically identical
// machines: parameter ranges, margin(s), size and stop conditions. The search
// object of the design procedure.
struct ControlParams {
  double c_w = 1.0;     // hidden weight range [-c_w, c_w]
  double c_beta = 0.5;  // transfer coefficient range
  double c_b = 10.0;    // bias range
  int n_hidden = 100;

  double margin_d = 1.0;   // F1/F2/F2bar separation margin
  double margin_d1 = 1.0;  // F3 lower margin
  double margin_d2 = 2.0;  // F3 upper margin

  CostKind cost_kind = CostKind::Fe;
  double stop_cost = 1e-4;             // F0
  long long stop_steps = 10'000'000;   // t0
  double proposal_fraction = 0.05;     // delta: step scale as a fraction of the full range

  // Restrict which hidden-parameter classes the Monte Carlo adaptation may
  // touch (all on by default).
  bool adapt_weights = true;
  bool adapt_betas = true;
  bool adapt_biases = true;

  // Throws ConfigError on an invalid combination.
  void validate() const;
};

// All parameters of one trained machine. Output weights are +/-1 and frozen
// at initialization; only the hidden layer adapts.
struct GvmParams {
  int input_dim = 0;     // M
  int hidden_count = 0;  // N
  int output_dim = 0;    // L

  std::vector<double> hidden_weights;       // N x M, row-major
  std::vector<double> betas;                // N
  std::vector<double> biases;               // N
  std::vector<std::int8_t> output_weights;  // L x N, entries +/-1
  Transfer transfer;

  double weight(int i, int j) const { return hidden_weights[static_cast<std::size_t>(i) * input_dim + j]; }
  int out_weight(int l, int i) const { return output_weights[static_cast<std::size_t>(l) * hidden_count + i]; }

  bool same_shape(const GvmParams& other) const {
    return input_dim == other.input_dim && hidden_count == other.hidden_count &&
           output_dim == other.output_dim;
  }
};

}  // namespace gvm
