#include "gvm/params.hpp"

#include "gvm/errors.hpp"

namespace gvm {

std::string to_string(CostKind kind) {
  switch (kind) {
    case CostKind::Fe: return "fe";
    case CostKind::F1: return "f1";
    case CostKind::F2: return "f2";
    case CostKind::F3: return "f3";
    case CostKind::F2bar: return "f2bar";
  }
  return "?";
}

CostKind cost_kind_from_string(const std::string& name) {
  if (name == "fe") return CostKind::Fe;
  if (name == "f1") return CostKind::F1;
  if (name == "f2") return CostKind::F2;
  if (name == "f3") return CostKind::F3;
  if (name == "f2bar") return CostKind::F2bar;
  throw ConfigError("unknown cost function: " + name);
}

void ControlParams::validate() const {
  if (!(c_w > 0.0)) throw ConfigError("control: c_w must be > 0");
  if (!(c_beta > 0.0)) throw ConfigError("control: c_beta must be > 0");
  if (!(c_b >= 0.0)) throw ConfigError("control: c_b must be >= 0");
  if (n_hidden < 1) throw ConfigError("control: n_hidden must be >= 1");
  if (cost_kind == CostKind::F3) {
    if (!(margin_d1 > 0.0 && margin_d2 > margin_d1))
      throw ConfigError("control: F3 requires d2 > d1 > 0");
  } else if (cost_kind != CostKind::Fe) {
    if (!(margin_d > 0.0)) throw ConfigError("control: margin d must be > 0");
  }
  if (!(stop_cost >= 0.0)) throw ConfigError("control: stop cost F0 must be >= 0");
  if (stop_steps < 1) throw ConfigError("control: stop steps t0 must be >= 1");
  if (!(proposal_fraction > 0.0 && proposal_fraction <= 1.0))
    throw ConfigError("control: proposal fraction must be in (0, 1]");
  if (!adapt_weights && !adapt_betas && !adapt_biases)
    throw ConfigError("control: at least one parameter class must be adaptable");
}

}  // namespace gvm
