#pragma once

#include <cstdint>
#include <string>

#include "gvm/params.hpp"

namespace gvm {

struct ModelMetadata {
  std::uint64_t seed = 0;
  long long steps = 0;
  double final_cost = 0.0;
  std::uint64_t dataset_digest = 0;
};

// On-disk model: everything needed to reload and run a trained machine,
// plus the control set and training provenance. JSON, numbers serialized
// with round-trip precision.
struct ModelFile {
  int format_version = 1;
  GvmParams params;
  ControlParams control;
  ModelMetadata metadata;
};

void save_model(const ModelFile& model, const std::string& path);

// Throws DataError on unreadable/corrupt files or a version mismatch.
ModelFile load_model(const std::string& path);

}  // namespace gvm
