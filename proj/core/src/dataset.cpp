#include "gvm/dataset.hpp"

#include <cstring>

#include "gvm/errors.hpp"

namespace gvm {

void Dataset::validate() const {
  if (input_dim <= 0 || output_dim <= 0)
    throw ConfigError("dataset: dimensions must be positive");
  if (inputs.size() % static_cast<std::size_t>(input_dim) != 0)
    throw ConfigError("dataset: input payload is not a whole number of samples");
  const int p = sample_count();
  if (task == TaskKind::Regression) {
    if (targets.size() != static_cast<std::size_t>(p) * output_dim)
      throw ConfigError("dataset: target shape mismatch");
  } else {
    if (labels.size() != static_cast<std::size_t>(p))
      throw ConfigError("dataset: label count mismatch");
    for (int lab : labels)
      if (lab < 0 || lab >= output_dim)
        throw ConfigError("dataset: label out of range");
  }
  if (image_rows > 0 && image_rows * image_cols != input_dim)
    throw ConfigError("dataset: image shape does not match input dimension");
}

std::uint64_t Dataset::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix_bytes = [&h](const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ULL;
    }
  };
  mix_bytes(inputs.data(), inputs.size() * sizeof(double));
  mix_bytes(targets.data(), targets.size() * sizeof(double));
  mix_bytes(labels.data(), labels.size() * sizeof(int));
  return h;
}

}  // namespace gvm
