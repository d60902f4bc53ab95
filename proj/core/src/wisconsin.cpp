#include "gvm/wisconsin.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <vector>

#include "gvm/errors.hpp"

namespace gvm {

namespace {
constexpr int kAttributes = 9;

struct Row {
  std::array<int, kAttributes> values;  // -1 marks '?'
  int label;                            // 0 benign, 1 malignant
};

Row parse_row(const std::string& line, int line_no, const std::string& path) {
  std::stringstream ss(line);
  std::string cell;
  std::vector<std::string> cells;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (cells.size() != kAttributes + 2)
    throw DataError(path + ":" + std::to_string(line_no) + ": expected 11 columns, got " +
                    std::to_string(cells.size()));

  Row row{};
  for (int a = 0; a < kAttributes; ++a) {
    const std::string& v = cells[a + 1];
    if (v == "?") {
      row.values[a] = -1;
      continue;
    }
    try {
      const int parsed = std::stoi(v);
      if (parsed < 1 || parsed > 10) throw std::out_of_range("range");
      row.values[a] = parsed;
    } catch (const std::exception&) {
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": bad attribute value '" + v + "'");
    }
  }
  if (cells.back() == "2") {
    row.label = 0;
  } else if (cells.back() == "4") {
    row.label = 1;
  } else {
    throw DataError(path + ":" + std::to_string(line_no) + ": unknown class code '" +
                    cells.back() + "'");
  }
  return row;
}

}  // namespace

std::pair<Dataset, Dataset> load_wisconsin(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open");

  std::vector<Row> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(parse_row(line, line_no, path));
  }
  if (rows.size() < 3) throw DataError(path + ": too few rows");

  const int total = static_cast<int>(rows.size());
  const int n_train = (2 * total + 2) / 3;  // ceil(2/3): 466 of the canonical 699

  // Column mode over the training portion, ignoring missing entries; ties go
  // to the smaller value.
  std::array<int, kAttributes> modes{};
  for (int a = 0; a < kAttributes; ++a) {
    std::array<int, 11> counts{};
    for (int r = 0; r < n_train; ++r)
      if (rows[r].values[a] > 0) ++counts[rows[r].values[a]];
    int best = 1;
    for (int v = 2; v <= 10; ++v)
      if (counts[v] > counts[best]) best = v;
    modes[a] = best;
  }

  auto build = [&](int begin, int end) {
    Dataset data;
    data.task = TaskKind::Classification;
    data.input_dim = kAttributes;
    data.output_dim = 2;
    data.inputs.reserve(static_cast<std::size_t>(end - begin) * kAttributes);
    data.labels.reserve(end - begin);
    for (int r = begin; r < end; ++r) {
      for (int a = 0; a < kAttributes; ++a) {
        const int v = rows[r].values[a] > 0 ? rows[r].values[a] : modes[a];
        data.inputs.push_back(static_cast<double>(v));
      }
      data.labels.push_back(rows[r].label);
    }
    data.provenance = path + (begin == 0 ? " train" : " test");
    data.validate();
    return data;
  };

  return {build(0, n_train), build(n_train, total)};
}

ControlParams wisconsin_controls() {
  ControlParams control;
  control.c_beta = 1.0;
  control.c_w = 1.0;
  control.c_b = 10.0;
  control.n_hidden = 200;
  control.cost_kind = CostKind::F1;
  control.margin_d = 16.0;
  control.stop_cost = 1e-3;
  control.stop_steps = 20'000'000;
  return control;
}

}  // namespace gvm
