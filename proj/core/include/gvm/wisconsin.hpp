#pragma once

#include <string>
#include <utility>

#include "gvm/dataset.hpp"
#include "gvm/params.hpp"

namespace gvm {

// Reads the 11-column comma-separated file (sample id, 9 integer attributes
// in 1..10 or '?', class code 2=benign or 4=malignant). Splits first 2/3 for
// training (466/233 on the canonical 699-row file). Missing attributes are
// imputed with the per-column mode computed on the training portion. Labels:
// benign -> 0, malignant -> 1.
std::pair<Dataset, Dataset> load_wisconsin(const std::string& path);

// The reference control set for this task: c_beta=1, c_w=1, c_b=10, N=200,
// F1 cost with d=16.
ControlParams wisconsin_controls();

}  // namespace gvm
