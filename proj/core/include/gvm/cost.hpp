#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gvm/dataset.hpp"
#include "gvm/params.hpp"

namespace gvm {

// s_l^mu = +1 if l is the true class of sample mu, else -1.
struct SignMatrix {
  int sample_count = 0;  // P
  int output_dim = 0;    // L
  std::vector<std::int8_t> s;

  static SignMatrix from_labels(const std::vector<int>& labels, int output_dim);

  const std::int8_t* row(int mu) const {
    return s.data() + static_cast<std::size_t>(mu) * output_dim;
  }
};

struct CostSpec {
  CostKind kind = CostKind::Fe;
  double d = 1.0;
  double d1 = 1.0, d2 = 2.0;  // F3 only

  static CostSpec from_control(const ControlParams& control);
  void validate() const;
};

// --- whole-matrix cost functions (fields are P x L, sample-major) ---

// sqrt( (1/P) sum_mu |t^mu - y^mu|^2 )
double empirical_risk(std::span<const double> outputs, std::span<const double> targets,
                      int sample_count, int output_dim);

// (1/PL) sum over entries with h s < d of (h s - d)^2
double cost_f1(std::span<const double> fields, const SignMatrix& s, double d);

// (1/PL) sum over all entries of (h s - d)^2
double cost_f2(std::span<const double> fields, const SignMatrix& s, double d);

// interval margin: (h s - d1)^2 below d1, (h s - d2)^2 above d2, 0 inside
double cost_f3(std::span<const double> fields, const SignMatrix& s, double d1, double d2);

// (1/PL) sum_mu sum_{l != nu} (h_nu - h_l - d)^2
double cost_f2bar(std::span<const double> fields, const std::vector<int>& labels,
                  int output_dim, double d);

// --- per-sample machinery used by the incremental trainer ---
// Total cost = finalize_cost(sum_mu sample_cost(mu)).

inline double sample_cost_fe(const double* fields, const double* targets, int l_dim) {
  double acc = 0.0;
  for (int l = 0; l < l_dim; ++l) {
    const double e = targets[l] - fields[l];
    acc += e * e;
  }
  return acc;
}

inline double sample_cost_f1(const double* fields, const std::int8_t* srow, int l_dim,
                             double d) {
  double acc = 0.0;
  for (int l = 0; l < l_dim; ++l) {
    const double hs = fields[l] * srow[l];
    if (hs < d) {
      const double e = hs - d;
      acc += e * e;
    }
  }
  return acc;
}

inline double sample_cost_f2(const double* fields, const std::int8_t* srow, int l_dim,
                             double d) {
  double acc = 0.0;
  for (int l = 0; l < l_dim; ++l) {
    const double e = fields[l] * srow[l] - d;
    acc += e * e;
  }
  return acc;
}

inline double sample_cost_f3(const double* fields, const std::int8_t* srow, int l_dim,
                             double d1, double d2) {
  double acc = 0.0;
  for (int l = 0; l < l_dim; ++l) {
    const double hs = fields[l] * srow[l];
    if (hs < d1) {
      const double e = hs - d1;
      acc += e * e;
    } else if (hs > d2) {
      const double e = hs - d2;
      acc += e * e;
    }
  }
  return acc;
}

inline double sample_cost_f2bar(const double* fields, int label, int l_dim, double d) {
  double acc = 0.0;
  const double h_true = fields[label];
  for (int l = 0; l < l_dim; ++l) {
    if (l == label) continue;
    const double e = h_true - fields[l] - d;
    acc += e * e;
  }
  return acc;
}

// Contribution of one sample given its L output fields.
double sample_cost(const CostSpec& spec, const double* fields, const Dataset& data,
                   const SignMatrix* signs, int mu);

// Turns the accumulated per-sample total into the cost value F.
double finalize_cost(const CostSpec& spec, double total, int sample_count, int output_dim);

// Full evaluation on a sample-major P x L field matrix.
double evaluate_cost(const CostSpec& spec, std::span<const double> fields,
                     const Dataset& data, const SignMatrix* signs);

}  // namespace gvm
