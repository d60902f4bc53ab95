#include "gvm/model_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "gvm/errors.hpp"

namespace gvm {

namespace {
using nlohmann::json;
constexpr int kFormatVersion = 1;
}  // namespace

void save_model(const ModelFile& model, const std::string& path) {
  json j;
  j["format_version"] = kFormatVersion;
  j["input_dim"] = model.params.input_dim;
  j["hidden_count"] = model.params.hidden_count;
  j["output_dim"] = model.params.output_dim;
  j["transfer"] = {{"kind", to_string(model.params.transfer.kind)},
                   {"exponent", model.params.transfer.poly_exponent}};
  j["control"] = {{"c_w", model.control.c_w},
                  {"c_beta", model.control.c_beta},
                  {"c_b", model.control.c_b},
                  {"n_hidden", model.control.n_hidden},
                  {"d", model.control.margin_d},
                  {"d1", model.control.margin_d1},
                  {"d2", model.control.margin_d2},
                  {"cost", to_string(model.control.cost_kind)},
                  {"stop_cost", model.control.stop_cost},
                  {"stop_steps", model.control.stop_steps},
                  {"proposal_fraction", model.control.proposal_fraction}};
  j["hidden_weights"] = model.params.hidden_weights;
  j["betas"] = model.params.betas;
  j["biases"] = model.params.biases;
  j["output_weights"] = model.params.output_weights;
  j["metadata"] = {{"seed", model.metadata.seed},
                   {"steps", model.metadata.steps},
                   {"final_cost", model.metadata.final_cost},
                   {"dataset_digest", model.metadata.dataset_digest}};

  std::ofstream out(path);
  if (!out) throw DataError(path + ": cannot open for writing");
  out << j.dump(1) << '\n';
  if (!out) throw DataError(path + ": write failed");
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError(path + ": corrupt model file (" + e.what() + ")");
  }

  ModelFile model;
  try {
    model.format_version = j.at("format_version").get<int>();
    if (model.format_version != kFormatVersion)
      throw DataError(path + ": unsupported model format version " +
                      std::to_string(model.format_version));

    model.params.input_dim = j.at("input_dim").get<int>();
    model.params.hidden_count = j.at("hidden_count").get<int>();
    model.params.output_dim = j.at("output_dim").get<int>();
    model.params.transfer = transfer_from_string(
        j.at("transfer").at("kind").get<std::string>(),
        j.at("transfer").value("exponent", 6));

    const json& c = j.at("control");
    model.control.c_w = c.at("c_w").get<double>();
    model.control.c_beta = c.at("c_beta").get<double>();
    model.control.c_b = c.at("c_b").get<double>();
    model.control.n_hidden = c.at("n_hidden").get<int>();
    model.control.margin_d = c.at("d").get<double>();
    model.control.margin_d1 = c.at("d1").get<double>();
    model.control.margin_d2 = c.at("d2").get<double>();
    model.control.cost_kind = cost_kind_from_string(c.at("cost").get<std::string>());
    model.control.stop_cost = c.at("stop_cost").get<double>();
    model.control.stop_steps = c.at("stop_steps").get<long long>();
    model.control.proposal_fraction = c.at("proposal_fraction").get<double>();

    model.params.hidden_weights = j.at("hidden_weights").get<std::vector<double>>();
    model.params.betas = j.at("betas").get<std::vector<double>>();
    model.params.biases = j.at("biases").get<std::vector<double>>();
    model.params.output_weights = j.at("output_weights").get<std::vector<std::int8_t>>();

    const json& meta = j.at("metadata");
    model.metadata.seed = meta.at("seed").get<std::uint64_t>();
    model.metadata.steps = meta.at("steps").get<long long>();
    model.metadata.final_cost = meta.at("final_cost").get<double>();
    model.metadata.dataset_digest = meta.at("dataset_digest").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw DataError(path + ": corrupt model file (" + e.what() + ")");
  }

  const auto n = static_cast<std::size_t>(model.params.hidden_count);
  if (model.params.hidden_weights.size() != n * model.params.input_dim ||
      model.params.betas.size() != n || model.params.biases.size() != n ||
      model.params.output_weights.size() != n * model.params.output_dim)
    throw DataError(path + ": parameter array sizes do not match dimensions");
  for (auto w : model.params.output_weights)
    if (w != 1 && w != -1)
      throw DataError(path + ": output weights must be +/-1");
  return model;
}

}  // namespace gvm
