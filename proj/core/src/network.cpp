#include "gvm/network.hpp"

#include "gvm/errors.hpp"
#include "gvm/rng.hpp"

namespace gvm {

void forward_fields(const GvmParams& params, std::span<const double> x,
                    std::span<double> fields) {
  const int m = params.input_dim;
  const int n = params.hidden_count;
  const int l_dim = params.output_dim;
  if (static_cast<int>(x.size()) != m)
    throw ConfigError("forward: input length does not match machine input dimension");

  for (int l = 0; l < l_dim; ++l) fields[l] = 0.0;
  for (int i = 0; i < n; ++i) {
    const double* w = params.hidden_weights.data() + static_cast<std::size_t>(i) * m;
    double field = -params.biases[i];
    for (int j = 0; j < m; ++j) field += w[j] * x[j];
    const double y = params.transfer.value(params.betas[i] * field);
    for (int l = 0; l < l_dim; ++l)
      fields[l] += params.out_weight(l, i) * y;
  }
}

ForwardResult forward(const GvmParams& params, std::span<const double> x) {
  const int m = params.input_dim;
  const int n = params.hidden_count;
  const int l_dim = params.output_dim;
  if (static_cast<int>(x.size()) != m)
    throw ConfigError("forward: input length does not match machine input dimension");

  ForwardResult r;
  r.hidden_fields.resize(n);
  r.hidden_outputs.resize(n);
  r.output_fields.assign(l_dim, 0.0);
  for (int i = 0; i < n; ++i) {
    const double* w = params.hidden_weights.data() + static_cast<std::size_t>(i) * m;
    double field = -params.biases[i];
    for (int j = 0; j < m; ++j) field += w[j] * x[j];
    r.hidden_fields[i] = field;
    const double y = params.transfer.value(params.betas[i] * field);
    r.hidden_outputs[i] = y;
    for (int l = 0; l < l_dim; ++l)
      r.output_fields[l] += params.out_weight(l, i) * y;
  }
  return r;
}

int classify(std::span<const double> output_fields) {
  int best = 0;
  for (int l = 1; l < static_cast<int>(output_fields.size()); ++l)
    if (output_fields[l] > output_fields[best]) best = l;
  return best;
}

GvmParams init_random(const ControlParams& control, int input_dim, int output_dim,
                      const Transfer& transfer, std::uint64_t seed) {
  control.validate();
  if (input_dim < 1 || output_dim < 1)
    throw ConfigError("init_random: dimensions must be positive");

  GvmParams p;
  p.input_dim = input_dim;
  p.hidden_count = control.n_hidden;
  p.output_dim = output_dim;
  p.transfer = transfer;

  const std::size_t n = static_cast<std::size_t>(control.n_hidden);
  p.hidden_weights.resize(n * input_dim);
  p.betas.resize(n);
  p.biases.resize(n);
  p.output_weights.resize(static_cast<std::size_t>(output_dim) * n);

  Rng rng(seed);
  for (auto& w : p.hidden_weights) w = rng.uniform(-control.c_w, control.c_w);
  for (auto& b : p.betas) b = rng.uniform(-control.c_beta, control.c_beta);
  for (auto& b : p.biases) b = rng.uniform(-control.c_b, control.c_b);
  for (auto& w : p.output_weights) w = rng.flip() ? 1 : -1;
  return p;
}

}  // namespace gvm
