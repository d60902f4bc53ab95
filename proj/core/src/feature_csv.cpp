#include "gvm/feature_csv.hpp"

#include <fstream>
#include <sstream>

#include "gvm/errors.hpp"

namespace gvm {

Dataset load_feature_csv(const std::string& path, int n_classes) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open");

  Dataset data;
  data.task = TaskKind::Classification;
  int dim = -1;
  std::string line;
  int line_no = 0;
  int max_label = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    int col = 0;
    int label = -1;
    std::vector<double> features;
    while (std::getline(ss, cell, ',')) {
      try {
        if (col == 0) {
          label = std::stoi(cell);
        } else {
          features.push_back(std::stod(cell));
        }
      } catch (const std::exception&) {
        throw DataError(path + ":" + std::to_string(line_no) + ": bad value '" + cell +
                        "'");
      }
      ++col;
    }
    if (label < 0)
      throw DataError(path + ":" + std::to_string(line_no) + ": negative label");
    if (dim == -1) {
      dim = static_cast<int>(features.size());
      if (dim == 0) throw DataError(path + ": rows need at least one feature");
    } else if (static_cast<int>(features.size()) != dim) {
      throw DataError(path + ":" + std::to_string(line_no) + ": expected " +
                      std::to_string(dim) + " features, got " +
                      std::to_string(features.size()));
    }
    max_label = std::max(max_label, label);
    data.labels.push_back(label);
    data.inputs.insert(data.inputs.end(), features.begin(), features.end());
  }
  if (data.labels.empty()) throw DataError(path + ": no samples");

  data.input_dim = dim;
  data.output_dim = n_classes > 0 ? n_classes : max_label + 1;
  if (max_label >= data.output_dim)
    throw DataError(path + ": label " + std::to_string(max_label) +
                    " exceeds class count " + std::to_string(data.output_dim));
  data.provenance = path;
  data.validate();
  return data;
}

}  // namespace gvm
