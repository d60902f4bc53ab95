#include "gvm/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <ostream>
#include <thread>

#include "gvm/errors.hpp"
#include "gvm/network.hpp"
#include "gvm/rng.hpp"
#include "gvm/sensitivity.hpp"

namespace gvm {

namespace {

// Runs body(index) for index in [0, count) across a small thread pool.
// Results must be written to disjoint slots; aggregation stays deterministic
// because it happens by index afterwards.
void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (threads == 1 || count <= 1) {
    for (int k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int n_workers = std::min(threads, count);
  pool.reserve(n_workers);
  for (int w = 0; w < n_workers; ++w)
    pool.emplace_back([&] {
      for (int k = next.fetch_add(1); k < count; k = next.fetch_add(1)) body(k);
    });
  for (auto& t : pool) t.join();
}

double rms(std::span<const double> values) {
  double acc = 0.0;
  for (double v : values) acc += v * v;
  return std::sqrt(acc / values.size());
}

}  // namespace

EvalGrid EvalGrid::line(double c_x, int count) {
  EvalGrid grid;
  grid.input_dim = 1;
  grid.points = uniform_grid(-c_x, c_x, count);
  return grid;
}

EvalGrid EvalGrid::plane(double c_x, int per_axis) {
  EvalGrid grid;
  grid.input_dim = 2;
  const std::vector<double> axis = uniform_grid(-c_x, c_x, per_axis);
  grid.points.reserve(static_cast<std::size_t>(per_axis) * per_axis * 2);
  for (double x : axis)
    for (double y : axis) {
      grid.points.push_back(x);
      grid.points.push_back(y);
    }
  return grid;
}

DesignedEnsemble design_ensemble(const EnsembleConfig& config, const Dataset& train) {
  if (config.n_members < 1) throw ConfigError("design_ensemble: n_members must be >= 1");
  config.control.validate();

  std::vector<TrainResult> results(config.n_members);
  parallel_for(config.n_members, config.threads, [&](int k) {
    results[k] = design_machine(config.control, train, config.transfer,
                                stream_seed(config.base_seed, k));
  });

  DesignedEnsemble out;
  out.n_requested = config.n_members;
  for (auto& r : results) {
    if (r.converged) {
      out.members.push_back(std::move(r.params));
      out.final_costs.push_back(r.final_cost);
    } else {
      ++out.n_nonconverged;
    }
  }
  if (out.members.empty())
    throw ConvergenceError("design_ensemble: no member reached the stop cost");
  return out;
}

std::vector<double> response_curve(const GvmParams& params, const EvalGrid& grid) {
  if (params.output_dim != 1)
    throw ConfigError("response_curve: machine must have a single output");
  if (params.input_dim != grid.input_dim)
    throw ConfigError("response_curve: grid dimension mismatch");
  const int k_points = grid.point_count();
  std::vector<double> curve(k_points);
  double field = 0.0;
  for (int k = 0; k < k_points; ++k) {
    forward_fields(params,
                   {grid.points.data() + static_cast<std::size_t>(k) * grid.input_dim,
                    static_cast<std::size_t>(grid.input_dim)},
                   {&field, 1});
    curve[k] = field;
  }
  return curve;
}

RegressionRisk design_risk_curves(const std::vector<std::vector<double>>& curves) {
  if (curves.empty()) throw ConfigError("design_risk: no members");
  const std::size_t k_points = curves.front().size();
  if (k_points == 0) throw ConfigError("design_risk: empty grid");
  for (const auto& c : curves)
    if (c.size() != k_points) throw ConfigError("design_risk: curve length mismatch");

  RegressionRisk out;
  out.mean_curve.assign(k_points, 0.0);
  for (const auto& curve : curves)
    for (std::size_t k = 0; k < k_points; ++k) out.mean_curve[k] += curve[k];
  for (auto& v : out.mean_curve) v /= curves.size();

  double acc = 0.0;
  for (const auto& curve : curves) {
    double sq = 0.0;
    for (std::size_t k = 0; k < k_points; ++k) {
      const double d = curve[k] - out.mean_curve[k];
      sq += d * d;
    }
    acc += sq / k_points;  // ||Pi_i - <Pi>||^2 with the RMS norm
  }
  out.design_risk = std::sqrt(acc / curves.size());
  return out;
}

RegressionRisk design_risk_regression(std::span<const GvmParams> members,
                                      const EvalGrid& grid) {
  std::vector<std::vector<double>> curves;
  curves.reserve(members.size());
  for (const auto& m : members) curves.push_back(response_curve(m, grid));
  return design_risk_curves(curves);
}

double avg_fit_error_curves(const std::vector<std::vector<double>>& curves,
                            std::span<const double> goal_values) {
  if (curves.empty()) throw ConfigError("avg_fit_error: no members");
  double acc = 0.0;
  for (const auto& curve : curves) {
    if (curve.size() != goal_values.size())
      throw ConfigError("avg_fit_error: curve/goal length mismatch");
    double sq = 0.0;
    for (std::size_t k = 0; k < curve.size(); ++k) {
      const double d = curve[k] - goal_values[k];
      sq += d * d;
    }
    acc += sq / curve.size();
  }
  return std::sqrt(acc / curves.size());
}

double avg_fit_error(std::span<const GvmParams> members, const GoalFunction& goal,
                     const EvalGrid& grid) {
  std::vector<std::vector<double>> curves;
  curves.reserve(members.size());
  for (const auto& m : members) curves.push_back(response_curve(m, grid));
  std::vector<double> goal_values(grid.point_count());
  for (int k = 0; k < grid.point_count(); ++k)
    goal_values[k] =
        goal.value_at(grid.points.data() + static_cast<std::size_t>(k) * grid.input_dim);
  return avg_fit_error_curves(curves, goal_values);
}

ClassificationStats classification_stats(std::span<const GvmParams> members,
                                         const Dataset& test) {
  if (members.empty()) throw ConfigError("classification_stats: no members");
  if (test.sample_count() == 0) throw ConfigError("classification_stats: empty test set");

  ClassificationStats stats;
  stats.member_accuracies.resize(members.size());
  const int p = test.sample_count();
  std::vector<double> fields(test.output_dim);
  for (std::size_t k = 0; k < members.size(); ++k) {
    int correct = 0;
    for (int mu = 0; mu < p; ++mu) {
      forward_fields(members[k], test.input(mu), fields);
      if (classify(fields) == test.labels[mu]) ++correct;
    }
    stats.member_accuracies[k] = static_cast<double>(correct) / p;
  }

  double mean = 0.0;
  for (double a : stats.member_accuracies) mean += a;
  mean /= members.size();
  double var = 0.0;
  for (double a : stats.member_accuracies) var += (a - mean) * (a - mean);
  stats.mean_accuracy = mean;
  stats.design_risk = std::sqrt(var / members.size());  // population convention
  return stats;
}

JgvmPrediction jgvm_predict(std::span<const GvmParams> members, std::span<const double> x) {
  if (members.empty()) throw ConfigError("jgvm_predict: no members");
  const int l_dim = members.front().output_dim;
  JgvmPrediction pred;
  pred.mean_fields.assign(l_dim, 0.0);
  std::vector<double> fields(l_dim);
  for (const auto& m : members) {
    forward_fields(m, x, fields);
    for (int l = 0; l < l_dim; ++l) pred.mean_fields[l] += fields[l];
  }
  for (auto& f : pred.mean_fields) f /= members.size();
  pred.class_index = classify(pred.mean_fields);
  return pred;
}

double jgvm_accuracy(std::span<const GvmParams> members, const Dataset& test) {
  if (members.empty()) throw ConfigError("jgvm_accuracy: no members");
  const int p = test.sample_count();
  const int l_dim = test.output_dim;
  std::vector<double> mean_fields(l_dim);
  std::vector<double> fields(l_dim);
  int correct = 0;
  for (int mu = 0; mu < p; ++mu) {
    std::fill(mean_fields.begin(), mean_fields.end(), 0.0);
    for (const auto& m : members) {
      forward_fields(m, test.input(mu), fields);
      for (int l = 0; l < l_dim; ++l) mean_fields[l] += fields[l];
    }
    for (auto& f : mean_fields) f /= members.size();
    if (classify(mean_fields) == test.labels[mu]) ++correct;
  }
  return static_cast<double>(correct) / p;
}

std::vector<double> jgvm_curve(std::span<const GvmParams> members, const EvalGrid& grid) {
  if (members.empty()) throw ConfigError("jgvm_curve: no members");
  std::vector<double> mean(grid.point_count(), 0.0);
  for (const auto& m : members) {
    const std::vector<double> curve = response_curve(m, grid);
    for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += curve[k];
  }
  for (auto& v : mean) v /= members.size();
  return mean;
}

std::string to_string(ScanAxis axis) {
  switch (axis) {
    case ScanAxis::CBeta: return "c_beta";
    case ScanAxis::MarginD: return "d";
    case ScanAxis::HiddenCount: return "n_hidden";
  }
  return "?";
}

ScanAxis scan_axis_from_string(const std::string& name) {
  if (name == "c_beta") return ScanAxis::CBeta;
  if (name == "d") return ScanAxis::MarginD;
  if (name == "n_hidden") return ScanAxis::HiddenCount;
  throw ConfigError("unknown scan axis: " + name + " (use c_beta, d, or n_hidden)");
}

std::vector<EnsembleReport> scan(ScanAxis axis, std::span<const double> values,
                                 const EnsembleConfig& config, const Dataset& train,
                                 const ScanEval& eval) {
  if (values.empty()) throw ConfigError("scan: empty axis value list");
  const bool regression = train.task == TaskKind::Regression;
  if (regression && (eval.goal == nullptr || eval.grid.point_count() == 0))
    throw ConfigError("scan: regression scans need a goal and a grid");
  if (!regression && eval.test == nullptr)
    throw ConfigError("scan: classification scans need a test set");

  std::vector<EnsembleReport> reports;
  reports.reserve(values.size());

  for (double value : values) {
    EnsembleConfig point = config;
    switch (axis) {
      case ScanAxis::CBeta: point.control.c_beta = value; break;
      case ScanAxis::MarginD: point.control.margin_d = value; break;
      case ScanAxis::HiddenCount:
        point.control.n_hidden = static_cast<int>(value);
        break;
    }

    EnsembleReport report;
    report.axis_value = value;
    report.n_requested = point.n_members;

    DesignedEnsemble ensemble = design_ensemble(point, train);
    report.n_converged = static_cast<int>(ensemble.members.size());

    if (regression) {
      std::vector<std::vector<double>> curves;
      curves.reserve(ensemble.members.size());
      for (const auto& m : ensemble.members)
        curves.push_back(response_curve(m, eval.grid));
      std::vector<double> goal_values(eval.grid.point_count());
      for (int k = 0; k < eval.grid.point_count(); ++k)
        goal_values[k] = eval.goal->value_at(
            eval.grid.points.data() + static_cast<std::size_t>(k) * eval.grid.input_dim);

      const RegressionRisk risk = design_risk_curves(curves);
      report.design_risk = risk.design_risk;
      report.mean_metric = avg_fit_error_curves(curves, goal_values);
      report.member_metrics.reserve(curves.size());
      for (const auto& c : curves) {
        double sq = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k) {
          const double d = c[k] - goal_values[k];
          sq += d * d;
        }
        report.member_metrics.push_back(std::sqrt(sq / c.size()));
      }
      std::vector<double> jerr(risk.mean_curve.size());
      for (std::size_t k = 0; k < jerr.size(); ++k)
        jerr[k] = risk.mean_curve[k] - goal_values[k];
      report.jgvm_metric = rms(jerr);
    } else {
      const ClassificationStats stats = classification_stats(ensemble.members, *eval.test);
      report.mean_metric = stats.mean_accuracy;
      report.design_risk = stats.design_risk;
      report.member_metrics = stats.member_accuracies;
      report.jgvm_metric = jgvm_accuracy(ensemble.members, *eval.test);
    }

    if (eval.compute_rs) {
      // Regression: average over the evaluation grid. Classification: over
      // (capped) training inputs. Full pair average only at small M.
      std::span<const double> rs_inputs;
      std::vector<double> capped;
      if (regression) {
        rs_inputs = eval.grid.points;
      } else {
        const int p = train.sample_count();
        const int cap = std::min(p, config.rs_max_inputs);
        const int stride = std::max(1, p / cap);
        for (int mu = 0; mu < p && static_cast<int>(capped.size()) / train.input_dim < cap;
             mu += stride) {
          const auto x = train.input(mu);
          capped.insert(capped.end(), x.begin(), x.end());
        }
        rs_inputs = capped;
      }
      const RsMode mode = train.input_dim > 100 ? RsMode::Diagonal : RsMode::Full;
      double acc = 0.0;
      for (const auto& m : ensemble.members)
        acc += machine_rs(m, rs_inputs, mode).r_s;
      report.avg_rs = acc / ensemble.members.size();
    }

    reports.push_back(std::move(report));
  }
  return reports;
}

void write_report_csv(std::ostream& out, std::span<const EnsembleReport> reports) {
  out << "axis_value,mean_metric,design_risk,avg_rs,jgvm_metric,n_converged,n_requested\n";
  out.precision(12);
  for (const auto& r : reports)
    out << r.axis_value << ',' << r.mean_metric << ',' << r.design_risk << ',' << r.avg_rs
        << ',' << r.jgvm_metric << ',' << r.n_converged << ',' << r.n_requested << '\n';
}

}  // namespace gvm
