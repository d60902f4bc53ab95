#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gvm {

enum class TaskKind { Regression, Classification };

// Immutable after construction; safe to share across concurrent readers.
struct Dataset {
  TaskKind task = TaskKind::Regression;
  int input_dim = 0;   // M
  int output_dim = 0;  // L
  std::vector<double> inputs;   // P x M, row-major
  std::vector<double> targets;  // P x L (regression)
  std::vector<int> labels;      // P (classification), values in [0, L)

  // Set when samples are 2D images (enables the image pretreatments).
  int image_rows = 0;
  int image_cols = 0;

  std::string provenance;

  int sample_count() const {
    return input_dim == 0 ? 0 : static_cast<int>(inputs.size()) / input_dim;
  }

  std::span<const double> input(int mu) const {
    return {inputs.data() + static_cast<std::size_t>(mu) * input_dim,
            static_cast<std::size_t>(input_dim)};
  }

  std::span<const double> target(int mu) const {
    return {targets.data() + static_cast<std::size_t>(mu) * output_dim,
            static_cast<std::size_t>(output_dim)};
  }

  // Throws ConfigError if the shape bookkeeping is inconsistent.
  void validate() const;

  // FNV-1a over the raw payload; identifies the training set in model files.
  std::uint64_t digest() const;
};

}  // namespace gvm
