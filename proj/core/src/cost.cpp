#include "gvm/cost.hpp"

#include <cmath>

#include "gvm/errors.hpp"

namespace gvm {

SignMatrix SignMatrix::from_labels(const std::vector<int>& labels, int output_dim) {
  SignMatrix m;
  m.sample_count = static_cast<int>(labels.size());
  m.output_dim = output_dim;
  m.s.assign(static_cast<std::size_t>(m.sample_count) * output_dim, -1);
  for (int mu = 0; mu < m.sample_count; ++mu) {
    if (labels[mu] < 0 || labels[mu] >= output_dim)
      throw ConfigError("sign matrix: label out of range");
    m.s[static_cast<std::size_t>(mu) * output_dim + labels[mu]] = 1;
  }
  return m;
}

CostSpec CostSpec::from_control(const ControlParams& control) {
  CostSpec spec;
  spec.kind = control.cost_kind;
  spec.d = control.margin_d;
  spec.d1 = control.margin_d1;
  spec.d2 = control.margin_d2;
  spec.validate();
  return spec;
}

void CostSpec::validate() const {
  if (kind == CostKind::F3) {
    if (!(d1 > 0.0 && d2 > d1)) throw ConfigError("cost: F3 requires d2 > d1 > 0");
  } else if (kind != CostKind::Fe) {
    if (!(d > 0.0)) throw ConfigError("cost: margin d must be > 0");
  }
}

double empirical_risk(std::span<const double> outputs, std::span<const double> targets,
                      int sample_count, int output_dim) {
  if (sample_count <= 0) throw ConfigError("empirical_risk: empty sample set");
  if (outputs.size() != targets.size() ||
      outputs.size() != static_cast<std::size_t>(sample_count) * output_dim)
    throw ConfigError("empirical_risk: shape mismatch");
  double total = 0.0;
  for (std::size_t k = 0; k < outputs.size(); ++k) {
    const double e = targets[k] - outputs[k];
    total += e * e;
  }
  return std::sqrt(total / sample_count);
}

double cost_f1(std::span<const double> fields, const SignMatrix& s, double d) {
  double total = 0.0;
  for (int mu = 0; mu < s.sample_count; ++mu)
    total += sample_cost_f1(fields.data() + static_cast<std::size_t>(mu) * s.output_dim,
                            s.row(mu), s.output_dim, d);
  return total / (static_cast<double>(s.sample_count) * s.output_dim);
}

double cost_f2(std::span<const double> fields, const SignMatrix& s, double d) {
  double total = 0.0;
  for (int mu = 0; mu < s.sample_count; ++mu)
    total += sample_cost_f2(fields.data() + static_cast<std::size_t>(mu) * s.output_dim,
                            s.row(mu), s.output_dim, d);
  return total / (static_cast<double>(s.sample_count) * s.output_dim);
}

double cost_f3(std::span<const double> fields, const SignMatrix& s, double d1, double d2) {
  double total = 0.0;
  for (int mu = 0; mu < s.sample_count; ++mu)
    total += sample_cost_f3(fields.data() + static_cast<std::size_t>(mu) * s.output_dim,
                            s.row(mu), s.output_dim, d1, d2);
  return total / (static_cast<double>(s.sample_count) * s.output_dim);
}

double cost_f2bar(std::span<const double> fields, const std::vector<int>& labels,
                  int output_dim, double d) {
  const int p = static_cast<int>(labels.size());
  double total = 0.0;
  for (int mu = 0; mu < p; ++mu)
    total += sample_cost_f2bar(fields.data() + static_cast<std::size_t>(mu) * output_dim,
                               labels[mu], output_dim, d);
  return total / (static_cast<double>(p) * output_dim);
}

double sample_cost(const CostSpec& spec, const double* fields, const Dataset& data,
                   const SignMatrix* signs, int mu) {
  const int l_dim = data.output_dim;
  switch (spec.kind) {
    case CostKind::Fe:
      return sample_cost_fe(fields, data.targets.data() + static_cast<std::size_t>(mu) * l_dim,
                            l_dim);
    case CostKind::F1:
      return sample_cost_f1(fields, signs->row(mu), l_dim, spec.d);
    case CostKind::F2:
      return sample_cost_f2(fields, signs->row(mu), l_dim, spec.d);
    case CostKind::F3:
      return sample_cost_f3(fields, signs->row(mu), l_dim, spec.d1, spec.d2);
    case CostKind::F2bar:
      return sample_cost_f2bar(fields, data.labels[mu], l_dim, spec.d);
  }
  return 0.0;
}

double finalize_cost(const CostSpec& spec, double total, int sample_count, int output_dim) {
  if (total < 0.0) total = 0.0;  // guard against incremental-update rounding
  if (spec.kind == CostKind::Fe) return std::sqrt(total / sample_count);
  return total / (static_cast<double>(sample_count) * output_dim);
}

double evaluate_cost(const CostSpec& spec, std::span<const double> fields,
                     const Dataset& data, const SignMatrix* signs) {
  const int p = data.sample_count();
  if (p == 0) throw ConfigError("evaluate_cost: empty dataset");
  double total = 0.0;
  for (int mu = 0; mu < p; ++mu)
    total += sample_cost(spec, fields.data() + static_cast<std::size_t>(mu) * data.output_dim,
                         data, signs, mu);
  return finalize_cost(spec, total, p, data.output_dim);
}

}  // namespace gvm
