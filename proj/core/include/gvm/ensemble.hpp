#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gvm/dataset.hpp"
#include "gvm/goals.hpp"
#include "gvm/params.hpp"
#include "gvm/trainer.hpp"

namespace gvm {

// Evaluation points for regression response curves (K x M, row-major).
struct EvalGrid {
  int input_dim = 1;
  std::vector<double> points;

  int point_count() const {
    return input_dim == 0 ? 0 : static_cast<int>(points.size()) / input_dim;
  }

  static EvalGrid line(double c_x, int count = 1001);
  static EvalGrid plane(double c_x, int per_axis = 101);
};

struct EnsembleConfig {
  int n_members = 50;
  ControlParams control;
  Transfer transfer;
  std::uint64_t base_seed = 1;
  int threads = 0;        // 0 = hardware concurrency
  int rs_max_inputs = 64; // cap on inputs used for the R_s estimate
};

struct DesignedEnsemble {
  std::vector<GvmParams> members;  // converged members, in seed order
  std::vector<double> final_costs;
  int n_requested = 0;
  int n_nonconverged = 0;
};

// Trains n statistically identical machines on the same data, differing only
// by their RNG stream. Members that miss the stop cost are dropped (and
// counted). Throws ConvergenceError if nothing converges.
DesignedEnsemble design_ensemble(const EnsembleConfig& config, const Dataset& train);

// Scalar response of one machine over the grid (L = 1).
std::vector<double> response_curve(const GvmParams& params, const EvalGrid& grid);

struct RegressionRisk {
  double design_risk = 0.0;        // E[Pi]
  std::vector<double> mean_curve;  // <Pi(x)> on the grid
};

// E[Pi] = sqrt( (1/n) sum_i ||Pi_i - <Pi>||^2 ) with the RMS grid norm.
RegressionRisk design_risk_regression(std::span<const GvmParams> members,
                                      const EvalGrid& grid);
RegressionRisk design_risk_curves(const std::vector<std::vector<double>>& curves);

// <Theta> = sqrt( (1/n) sum_i ||Pi_i - g||^2 ).
double avg_fit_error(std::span<const GvmParams> members, const GoalFunction& goal,
                     const EvalGrid& grid);
double avg_fit_error_curves(const std::vector<std::vector<double>>& curves,
                            std::span<const double> goal_values);

struct ClassificationStats {
  double mean_accuracy = 0.0;  // <Pi>
  double design_risk = 0.0;    // population std of member accuracies
  std::vector<double> member_accuracies;
};

ClassificationStats classification_stats(std::span<const GvmParams> members,
                                         const Dataset& test);

struct JgvmPrediction {
  std::vector<double> mean_fields;
  int class_index = 0;
};

// The joint machine: average the L output fields over members, then decide.
JgvmPrediction jgvm_predict(std::span<const GvmParams> members, std::span<const double> x);
double jgvm_accuracy(std::span<const GvmParams> members, const Dataset& test);
std::vector<double> jgvm_curve(std::span<const GvmParams> members, const EvalGrid& grid);

enum class ScanAxis { CBeta, MarginD, HiddenCount };

std::string to_string(ScanAxis axis);
ScanAxis scan_axis_from_string(const std::string& name);

// What to evaluate each scan point against.
struct ScanEval {
  const Dataset* test = nullptr;       // classification path
  const GoalFunction* goal = nullptr;  // regression path
  EvalGrid grid;                       // regression evaluation grid
  bool compute_rs = true;
};

struct EnsembleReport {
  double axis_value = 0.0;
  // regression: <Theta> (Eq. 17 norm); classification: mean accuracy
  double mean_metric = 0.0;
  double design_risk = 0.0;
  double avg_rs = 0.0;
  // regression: ||<Pi> - g||; classification: J-GVM accuracy
  double jgvm_metric = 0.0;
  int n_converged = 0;
  int n_requested = 0;
  std::vector<double> member_metrics;
};

std::vector<EnsembleReport> scan(ScanAxis axis, std::span<const double> values,
                                 const EnsembleConfig& config, const Dataset& train,
                                 const ScanEval& eval);

// Header + one row per report.
void write_report_csv(std::ostream& out, std::span<const EnsembleReport> reports);

}  // namespace gvm
