#pragma once

#include <string>

#include "gvm/dataset.hpp"

namespace gvm {

// Generic fallback for externally pretreated feature vectors: one sample per
// row, "label,f1,...,fM". M is taken from the first row; L is
// max(label) + 1 unless n_classes forces it.
Dataset load_feature_csv(const std::string& path, int n_classes = 0);

}  // namespace gvm
