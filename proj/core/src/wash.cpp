#include "gvm/wash.hpp"

#include <algorithm>
#include <ostream>

#include "gvm/errors.hpp"
#include "gvm/network.hpp"

namespace gvm {

std::vector<WashEntry> wash_scores(std::span<const GvmParams> members,
                                   const Dataset& train, int top_k) {
  if (members.empty()) throw ConfigError("wash: no machines given");
  if (train.task != TaskKind::Classification)
    throw ConfigError("wash: expected a classification training set");
  const int p = train.sample_count();
  if (top_k < 0 || top_k > p)
    throw ConfigError("wash: top_k must be in [0, P]");
  if (top_k == 0) return {};

  const int l_dim = train.output_dim;
  std::vector<WashEntry> entries(p);
  std::vector<double> fields(l_dim);
  std::vector<double> mean_fields(l_dim);
  for (int mu = 0; mu < p; ++mu) {
    std::fill(mean_fields.begin(), mean_fields.end(), 0.0);
    for (const auto& m : members) {
      forward_fields(m, train.input(mu), fields);
      for (int l = 0; l < l_dim; ++l) mean_fields[l] += fields[l];
    }
    for (auto& f : mean_fields) f /= members.size();

    const int nu = train.labels[mu];
    double worst = mean_fields[nu];  // s = +1 on the true class
    for (int l = 0; l < l_dim; ++l) {
      if (l == nu) continue;
      worst = std::min(worst, -mean_fields[l]);  // s = -1 elsewhere
    }
    entries[mu] = WashEntry{mu, worst, nu, mean_fields};
  }

  std::sort(entries.begin(), entries.end(), [](const WashEntry& a, const WashEntry& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.index < b.index;
  });
  entries.resize(top_k);
  return entries;
}

void write_wash_csv(std::ostream& out, std::span<const WashEntry> entries) {
  out << "rank,sample_index,badness_score,label";
  const int l_dim = entries.empty() ? 0 : static_cast<int>(entries.front().fields.size());
  for (int l = 0; l < l_dim; ++l) out << ",field_" << l;
  out << '\n';
  out.precision(12);
  for (std::size_t r = 0; r < entries.size(); ++r) {
    const auto& e = entries[r];
    out << r << ',' << e.index << ',' << e.score << ',' << e.label;
    for (double f : e.fields) out << ',' << f;
    out << '\n';
  }
}

}  // namespace gvm
