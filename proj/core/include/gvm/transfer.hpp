#pragma once

#include <cmath>
#include <string>

namespace gvm {

enum class TransferKind { Gauss, Sigmoid, Polynomial, ReLU };

// Hidden-neuron transfer function. A machine uses one kind for all hidden
// neurons; Polynomial carries its exponent.
struct Transfer {
  TransferKind kind = TransferKind::Gauss;
  int poly_exponent = 6;  // Polynomial only, n >= 1

  // f(z). Kept inline: this is the training inner loop.
  double value(double z) const {
    switch (kind) {
      case TransferKind::Gauss:
        return std::exp(-z * z);
      case TransferKind::Sigmoid:
        return std::tanh(z);
      case TransferKind::Polynomial:
        return pow_int(z, poly_exponent);
      case TransferKind::ReLU:
        return z > 0.0 ? z : 0.0;
    }
    return 0.0;
  }

  static double pow_int(double z, int n) {
    double acc = 1.0;
    double base = z;
    for (int e = n; e > 0; e >>= 1) {
      if (e & 1) acc *= base;
      base *= base;
    }
    return acc;
  }
};

struct TransferEval {
  double value = 0.0;
  double second_derivative = 0.0;
  // ReLU is not twice differentiable at z = 0; flagged instead of "fixed".
  bool degenerate = false;
};

// f(z) and the analytic f''(z).
TransferEval transfer_eval(const Transfer& transfer, double z);

std::string to_string(TransferKind kind);
Transfer transfer_from_string(const std::string& name, int poly_exponent = 6);

}  // namespace gvm
