#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "gvm/cost.hpp"
#include "gvm/dataset.hpp"
#include "gvm/network.hpp"
#include "gvm/rng.hpp"

namespace gvm {

// Optional training trace: one CSV row (step, cost, accept_rate) every
// `every` steps.
struct TrainTrace {
  std::ostream* sink = nullptr;
  long long every = 0;
};

// Cached local fields for every training sample, kept incrementally in sync
// with the machine parameters across Monte Carlo steps. One instance is
// strictly single-threaded.
struct TrainerState {
  std::vector<double> hbar;  // N x P, neuron-major: pre-beta fields sum_j w_ij x_j - b_i
  std::vector<double> ybar;  // N x P, neuron-major: f(beta_i * hbar)
  std::vector<double> hout;  // P x L, sample-major: output fields
  std::vector<double> sample_costs;  // P per-sample cost contributions
  double cost_total = 0.0;           // sum of sample_costs
  double cost = 0.0;                 // finalized F
  long long step_count = 0;
  long long accept_count = 0;

  // Incremental updates accumulate rounding; the full caches are rebuilt
  // every refresh_interval accepted steps.
  long long refresh_interval = 100'000;

  // internal layout/scratch
  std::vector<double> inputs_t;            // M x P, feature-major copy of the inputs
  std::vector<std::int8_t> out_weights_t;  // N x L transposed output weights
  SignMatrix signs;                        // F1/F2/F3 only
  std::vector<double> scratch_ybar;        // P
  std::vector<double> scratch_costs;       // P
  std::vector<double> scratch_fields;      // L
  long long accepts_since_refresh = 0;
  long long accepts_since_resum = 0;
};

// Full forward pass over the training set; caches and cost from scratch.
TrainerState init_state(const GvmParams& params, const Dataset& data, const CostSpec& spec);

// Rebuilds every cache from params (drift control; also the test oracle).
void refresh_state(TrainerState& state, const GvmParams& params, const Dataset& data,
                   const CostSpec& spec);

// Largest relative deviation between the cached fields/cost and a fresh
// recomputation.
double max_cache_deviation(const TrainerState& state, const GvmParams& params,
                           const Dataset& data, const CostSpec& spec);

// One proposal: pick a hidden parameter, perturb it within its range, accept
// iff the cost does not get worse. Returns whether the change was kept.
bool mc_step(TrainerState& state, GvmParams& params, const Dataset& data,
             const CostSpec& spec, const ControlParams& control, Rng& rng);

struct TrainResult {
  GvmParams params;
  bool converged = false;  // reached F <= F0 (t0 exhaustion is a normal outcome)
  long long steps = 0;
  long long accepts = 0;
  double final_cost = 0.0;
  std::vector<std::pair<long long, double>> history;  // (step, cost), non-increasing
};

// Runs mc_step until F <= control.stop_cost or step count reaches
// control.stop_steps.
TrainResult train(GvmParams initial, const Dataset& data, const CostSpec& spec,
                  const ControlParams& control, std::uint64_t seed,
                  const TrainTrace& trace = {});

// init_random + train in one call (the ensemble member recipe).
TrainResult design_machine(const ControlParams& control, const Dataset& data,
                           const Transfer& transfer, std::uint64_t seed,
                           const TrainTrace& trace = {});

// Retries training with successively larger hidden layers until one
// converges. Throws ConvergenceError when the schedule is exhausted.
TrainResult auto_grow_train(const Dataset& data, const CostSpec& spec,
                            ControlParams control, const Transfer& transfer,
                            std::uint64_t seed, std::span<const int> hidden_schedule);

}  // namespace gvm
