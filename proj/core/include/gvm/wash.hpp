#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "gvm/dataset.hpp"
#include "gvm/params.hpp"

namespace gvm {

struct WashEntry {
  int index = 0;      // position in the training set
  double score = 0.0; // min over l of s_l h_l; far below d marks a bad sample
  int label = 0;
  std::vector<double> fields;
};

// Ranks training samples by their worst margin under the (ensemble-averaged)
// output fields and returns the top_k lowest scorers, ascending. Only the
// training set is consulted.
std::vector<WashEntry> wash_scores(std::span<const GvmParams> members,
                                   const Dataset& train, int top_k);

void write_wash_csv(std::ostream& out, std::span<const WashEntry> entries);

}  // namespace gvm
