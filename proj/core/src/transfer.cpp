#include "gvm/transfer.hpp"

#include "gvm/errors.hpp"

namespace gvm {

TransferEval transfer_eval(const Transfer& transfer, double z) {
  TransferEval out;
  switch (transfer.kind) {
    case TransferKind::Gauss: {
      const double e = std::exp(-z * z);
      out.value = e;
      out.second_derivative = (4.0 * z * z - 2.0) * e;
      break;
    }
    case TransferKind::Sigmoid: {
      const double t = std::tanh(z);
      out.value = t;
      out.second_derivative = -2.0 * t * (1.0 - t * t);
      break;
    }
    case TransferKind::Polynomial: {
      const int n = transfer.poly_exponent;
      out.value = Transfer::pow_int(z, n);
      if (n == 1) {
        out.second_derivative = 0.0;
      } else {
        out.second_derivative =
            static_cast<double>(n) * (n - 1) * Transfer::pow_int(z, n - 2);
      }
      break;
    }
    case TransferKind::ReLU: {
      out.value = z > 0.0 ? z : 0.0;
      out.second_derivative = 0.0;
      out.degenerate = (z == 0.0);
      break;
    }
  }
  return out;
}

std::string to_string(TransferKind kind) {
  switch (kind) {
    case TransferKind::Gauss: return "gauss";
    case TransferKind::Sigmoid: return "sigmoid";
    case TransferKind::Polynomial: return "polynomial";
    case TransferKind::ReLU: return "relu";
  }
  return "?";
}

Transfer transfer_from_string(const std::string& name, int poly_exponent) {
  Transfer t;
  t.poly_exponent = poly_exponent;
  if (name == "gauss") {
    t.kind = TransferKind::Gauss;
  } else if (name == "sigmoid") {
    t.kind = TransferKind::Sigmoid;
  } else if (name == "polynomial") {
    t.kind = TransferKind::Polynomial;
    if (poly_exponent < 1) throw ConfigError("polynomial exponent must be >= 1");
  } else if (name == "relu") {
    t.kind = TransferKind::ReLU;
  } else {
    throw ConfigError("unknown transfer function: " + name);
  }
  return t;
}

}  // namespace gvm
