#include "gvm/trainer.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>

#include "gvm/errors.hpp"

namespace gvm {

namespace {

enum class ParamClass { Weight, Beta, Bias };

double class_bound(ParamClass c, const ControlParams& control) {
  switch (c) {
    case ParamClass::Weight: return control.c_w;
    case ParamClass::Beta: return control.c_beta;
    case ParamClass::Bias: return control.c_b;
  }
  return 0.0;
}

void recompute_caches(TrainerState& state, const GvmParams& params, const Dataset& data,
                      const CostSpec& spec, std::vector<double>& hbar,
                      std::vector<double>& ybar, std::vector<double>& hout,
                      std::vector<double>& sample_costs, double& total) {
  const int p = data.sample_count();
  const int m = params.input_dim;
  const int n = params.hidden_count;
  const int l_dim = params.output_dim;

  hbar.assign(static_cast<std::size_t>(n) * p, 0.0);
  ybar.assign(static_cast<std::size_t>(n) * p, 0.0);
  hout.assign(static_cast<std::size_t>(p) * l_dim, 0.0);
  for (int i = 0; i < n; ++i) {
    const double* w = params.hidden_weights.data() + static_cast<std::size_t>(i) * m;
    const double beta = params.betas[i];
    const double bias = params.biases[i];
    double* hb = hbar.data() + static_cast<std::size_t>(i) * p;
    double* yb = ybar.data() + static_cast<std::size_t>(i) * p;
    for (int mu = 0; mu < p; ++mu) {
      const double* x = data.inputs.data() + static_cast<std::size_t>(mu) * m;
      double field = -bias;
      for (int j = 0; j < m; ++j) field += w[j] * x[j];
      hb[mu] = field;
      yb[mu] = params.transfer.value(beta * field);
    }
    const std::int8_t* wt = state.out_weights_t.data() + static_cast<std::size_t>(i) * l_dim;
    for (int mu = 0; mu < p; ++mu) {
      double* h = hout.data() + static_cast<std::size_t>(mu) * l_dim;
      const double y = yb[mu];
      for (int l = 0; l < l_dim; ++l) h[l] += wt[l] * y;
    }
  }

  sample_costs.resize(p);
  total = 0.0;
  const SignMatrix* signs = state.signs.sample_count > 0 ? &state.signs : nullptr;
  for (int mu = 0; mu < p; ++mu) {
    sample_costs[mu] =
        sample_cost(spec, hout.data() + static_cast<std::size_t>(mu) * l_dim, data, signs, mu);
    total += sample_costs[mu];
  }
}

}  // namespace

TrainerState init_state(const GvmParams& params, const Dataset& data, const CostSpec& spec) {
  data.validate();
  spec.validate();
  if (data.input_dim != params.input_dim)
    throw ConfigError("init_state: dataset input dimension does not match machine");
  if (data.output_dim != params.output_dim)
    throw ConfigError("init_state: dataset output dimension does not match machine");
  if ((spec.kind == CostKind::Fe) != (data.task == TaskKind::Regression))
    throw ConfigError("init_state: cost kind does not match dataset task");

  TrainerState state;
  const int p = data.sample_count();
  const int m = params.input_dim;
  const int n = params.hidden_count;
  const int l_dim = params.output_dim;

  state.inputs_t.resize(static_cast<std::size_t>(m) * p);
  for (int mu = 0; mu < p; ++mu)
    for (int j = 0; j < m; ++j)
      state.inputs_t[static_cast<std::size_t>(j) * p + mu] =
          data.inputs[static_cast<std::size_t>(mu) * m + j];

  state.out_weights_t.resize(static_cast<std::size_t>(n) * l_dim);
  for (int l = 0; l < l_dim; ++l)
    for (int i = 0; i < n; ++i)
      state.out_weights_t[static_cast<std::size_t>(i) * l_dim + l] =
          params.output_weights[static_cast<std::size_t>(l) * n + i];

  if (spec.kind == CostKind::F1 || spec.kind == CostKind::F2 || spec.kind == CostKind::F3)
    state.signs = SignMatrix::from_labels(data.labels, l_dim);

  recompute_caches(state, params, data, spec, state.hbar, state.ybar, state.hout,
                   state.sample_costs, state.cost_total);
  state.cost = finalize_cost(spec, state.cost_total, p, l_dim);
  state.scratch_ybar.resize(p);
  state.scratch_costs.resize(p);
  state.scratch_fields.resize(l_dim);
  return state;
}

void refresh_state(TrainerState& state, const GvmParams& params, const Dataset& data,
                   const CostSpec& spec) {
  recompute_caches(state, params, data, spec, state.hbar, state.ybar, state.hout,
                   state.sample_costs, state.cost_total);
  state.cost = finalize_cost(spec, state.cost_total, data.sample_count(), data.output_dim);
  state.accepts_since_refresh = 0;
  state.accepts_since_resum = 0;
}

double max_cache_deviation(const TrainerState& state, const GvmParams& params,
                           const Dataset& data, const CostSpec& spec) {
  TrainerState fresh;
  fresh.out_weights_t = state.out_weights_t;
  fresh.signs = state.signs;
  std::vector<double> hbar, ybar, hout, costs;
  double total = 0.0;
  recompute_caches(fresh, params, data, spec, hbar, ybar, hout, costs, total);

  double worst = 0.0;
  auto relative = [&worst](double cached, double exact) {
    const double dev = std::abs(cached - exact) / (1.0 + std::abs(exact));
    if (dev > worst) worst = dev;
  };
  for (std::size_t k = 0; k < hbar.size(); ++k) relative(state.hbar[k], hbar[k]);
  for (std::size_t k = 0; k < ybar.size(); ++k) relative(state.ybar[k], ybar[k]);
  for (std::size_t k = 0; k < hout.size(); ++k) relative(state.hout[k], hout[k]);
  relative(state.cost,
           finalize_cost(spec, total, data.sample_count(), data.output_dim));
  return worst;
}

bool mc_step(TrainerState& state, GvmParams& params, const Dataset& data,
             const CostSpec& spec, const ControlParams& control, Rng& rng) {
  const int p = data.sample_count();
  const int m = params.input_dim;
  const int n = params.hidden_count;
  const int l_dim = params.output_dim;

  // A class is proposable when enabled and its range has interior room.
  ParamClass classes[3];
  int n_classes = 0;
  if (control.adapt_weights && control.c_w > 0.0) classes[n_classes++] = ParamClass::Weight;
  if (control.adapt_betas && control.c_beta > 0.0) classes[n_classes++] = ParamClass::Beta;
  if (control.adapt_biases && control.c_b > 0.0) classes[n_classes++] = ParamClass::Bias;
  if (n_classes == 0) {
    ++state.step_count;
    return false;
  }

  const ParamClass cls = classes[rng.uniform_index(n_classes)];
  const double bound = class_bound(cls, control);

  int i = 0, j = 0;
  double* value = nullptr;
  if (cls == ParamClass::Weight) {
    const std::uint64_t flat = rng.uniform_index(static_cast<std::uint64_t>(n) * m);
    i = static_cast<int>(flat / m);
    j = static_cast<int>(flat % m);
    value = &params.hidden_weights[static_cast<std::size_t>(i) * m + j];
  } else {
    i = static_cast<int>(rng.uniform_index(n));
    value = (cls == ParamClass::Beta) ? &params.betas[i] : &params.biases[i];
  }

  const double eps = rng.uniform(-control.proposal_fraction * 2.0 * bound,
                                 control.proposal_fraction * 2.0 * bound);
  const double proposed = *value + eps;
  ++state.step_count;
  if (std::abs(proposed) > bound) return false;  // out of range: rejected outright

  const double beta_eff = (cls == ParamClass::Beta) ? proposed : params.betas[i];
  const double* hb = state.hbar.data() + static_cast<std::size_t>(i) * p;
  const double* yb = state.ybar.data() + static_cast<std::size_t>(i) * p;
  const std::int8_t* wt = state.out_weights_t.data() + static_cast<std::size_t>(i) * l_dim;
  const double* xj =
      (cls == ParamClass::Weight) ? state.inputs_t.data() + static_cast<std::size_t>(j) * p
                                  : nullptr;
  const SignMatrix* signs = state.signs.sample_count > 0 ? &state.signs : nullptr;

  double* new_yb = state.scratch_ybar.data();
  double* new_costs = state.scratch_costs.data();
  double* fields = state.scratch_fields.data();
  const Transfer transfer = params.transfer;

  double delta_total = 0.0;
  for (int mu = 0; mu < p; ++mu) {
    double hb_mu = hb[mu];
    if (cls == ParamClass::Weight) {
      const double x = xj[mu];
      if (x == 0.0) continue;  // this sample's fields are unaffected
      hb_mu += eps * x;
    } else if (cls == ParamClass::Bias) {
      hb_mu -= eps;
    }
    const double y_new = transfer.value(beta_eff * hb_mu);
    new_yb[mu] = y_new;
    const double dy = y_new - yb[mu];
    if (dy == 0.0) continue;
    const double* h = state.hout.data() + static_cast<std::size_t>(mu) * l_dim;
    for (int l = 0; l < l_dim; ++l) fields[l] = h[l] + wt[l] * dy;
    const double c_new = sample_cost(spec, fields, data, signs, mu);
    new_costs[mu] = c_new;
    delta_total += c_new - state.sample_costs[mu];
  }

  if (!(delta_total <= 0.0)) return false;  // "if it does not become worse"

  // Commit: parameter, caches, cost.
  *value = proposed;
  double* hb_w = state.hbar.data() + static_cast<std::size_t>(i) * p;
  double* yb_w = state.ybar.data() + static_cast<std::size_t>(i) * p;
  for (int mu = 0; mu < p; ++mu) {
    if (cls == ParamClass::Weight) {
      const double x = xj[mu];
      if (x == 0.0) continue;
      hb_w[mu] += eps * x;
    } else if (cls == ParamClass::Bias) {
      hb_w[mu] -= eps;
    }
    const double dy = new_yb[mu] - yb_w[mu];
    yb_w[mu] = new_yb[mu];
    if (dy == 0.0) continue;
    double* h = state.hout.data() + static_cast<std::size_t>(mu) * l_dim;
    for (int l = 0; l < l_dim; ++l) h[l] += wt[l] * dy;
    state.sample_costs[mu] = new_costs[mu];
  }
  state.cost_total += delta_total;
  ++state.accept_count;

  // Drift control: re-sum the per-sample costs often (cheap), rebuild all
  // caches at the spec'd interval.
  if (++state.accepts_since_resum >= 1024) {
    double total = 0.0;
    for (int mu = 0; mu < p; ++mu) total += state.sample_costs[mu];
    state.cost_total = total;
    state.accepts_since_resum = 0;
  }
  if (++state.accepts_since_refresh >= state.refresh_interval)
    refresh_state(state, params, data, spec);

  state.cost = finalize_cost(spec, state.cost_total, p, l_dim);
  return true;
}

TrainResult train(GvmParams initial, const Dataset& data, const CostSpec& spec,
                  const ControlParams& control, std::uint64_t seed, const TrainTrace& trace) {
  control.validate();
  TrainerState state = init_state(initial, data, spec);
  Rng rng(seed);

  TrainResult result;
  result.history.reserve(256);
  result.history.emplace_back(0, state.cost);

  long long record_stride = 1;
  long long improvements = 0;
  const long long t0 = control.stop_steps;
  const double f0 = control.stop_cost;

  double last_cost = state.cost;
  while (state.cost > f0 && state.step_count < t0) {
    const bool accepted = mc_step(state, initial, data, spec, control, rng);
    if (accepted && state.cost < last_cost) {
      last_cost = state.cost;
      if (++improvements % record_stride == 0) {
        result.history.emplace_back(state.step_count, state.cost);
        if (result.history.size() >= 4096) {
          // thin to keep the trace bounded
          std::vector<std::pair<long long, double>> kept;
          kept.reserve(2048);
          for (std::size_t k = 0; k < result.history.size(); k += 2)
            kept.push_back(result.history[k]);
          result.history.swap(kept);
          record_stride *= 2;
        }
      }
    }
    if (trace.sink && trace.every > 0 && state.step_count % trace.every == 0) {
      (*trace.sink) << state.step_count << ',' << state.cost << ','
                    << static_cast<double>(state.accept_count) / state.step_count << '\n';
    }
  }

  if (result.history.back().second != state.cost ||
      result.history.back().first != state.step_count)
    result.history.emplace_back(state.step_count, state.cost);

  result.params = std::move(initial);
  result.converged = state.cost <= f0;
  result.steps = state.step_count;
  result.accepts = state.accept_count;
  result.final_cost = state.cost;
  return result;
}

TrainResult design_machine(const ControlParams& control, const Dataset& data,
                           const Transfer& transfer, std::uint64_t seed,
                           const TrainTrace& trace) {
  const CostSpec spec = CostSpec::from_control(control);
  std::uint64_t s = seed;
  const std::uint64_t init_seed = splitmix64(s);
  const std::uint64_t walk_seed = splitmix64(s);
  GvmParams params =
      init_random(control, data.input_dim, data.output_dim, transfer, init_seed);
  return train(std::move(params), data, spec, control, walk_seed, trace);
}

TrainResult auto_grow_train(const Dataset& data, const CostSpec& spec,
                            ControlParams control, const Transfer& transfer,
                            std::uint64_t seed, std::span<const int> hidden_schedule) {
  if (hidden_schedule.empty())
    throw ConfigError("auto_grow_train: empty hidden-layer schedule");
  for (std::size_t attempt = 0; attempt < hidden_schedule.size(); ++attempt) {
    control.n_hidden = hidden_schedule[attempt];
    control.cost_kind = spec.kind;
    control.margin_d = spec.d;
    control.margin_d1 = spec.d1;
    control.margin_d2 = spec.d2;
    TrainResult result =
        design_machine(control, data, transfer, stream_seed(seed, attempt));
    if (result.converged) return result;
  }
  throw ConvergenceError(
      "training did not reach the stop cost with any hidden-layer size in the schedule "
      "(largest tried: " +
      std::to_string(hidden_schedule.back()) + ")");
}

}  // namespace gvm
