#include "gvm/mnist.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "gvm/errors.hpp"
#include "gvm/rng.hpp"

namespace gvm {

namespace {

std::uint32_t read_be32(std::istream& in, const std::string& path) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4))
    throw DataError(path + ": truncated header");
  return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) |
         (std::uint32_t(b[2]) << 8) | std::uint32_t(b[3]);
}

void require_image(const Dataset& data, const char* op) {
  if (data.image_rows <= 0 || data.image_cols <= 0 ||
      data.image_rows * data.image_cols != data.input_dim)
    throw ConfigError(std::string(op) + ": dataset is not image-shaped");
}

}  // namespace

ControlParams mnist_controls() {
  ControlParams control;
  control.c_w = 1.0;
  control.c_b = 100.0;
  control.c_beta = 0.005;
  control.n_hidden = 1000;
  control.cost_kind = CostKind::F2;
  control.margin_d = 30.0;
  control.stop_cost = 1.0;
  control.stop_steps = 100'000LL * control.n_hidden;
  return control;
}

Dataset load_mnist(const std::string& images_path, const std::string& labels_path,
                   double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw ConfigError("load_mnist: fraction must be in (0, 1]");

  std::ifstream images(images_path, std::ios::binary);
  if (!images) throw DataError(images_path + ": cannot open");
  std::ifstream labels(labels_path, std::ios::binary);
  if (!labels) throw DataError(labels_path + ": cannot open");

  if (read_be32(images, images_path) != 0x00000803u)
    throw DataError(images_path + ": bad magic (expected IDX image file)");
  const std::uint32_t image_count = read_be32(images, images_path);
  const std::uint32_t rows = read_be32(images, images_path);
  const std::uint32_t cols = read_be32(images, images_path);
  if (rows != 28 || cols != 28)
    throw DataError(images_path + ": expected 28x28 images");

  if (read_be32(labels, labels_path) != 0x00000801u)
    throw DataError(labels_path + ": bad magic (expected IDX label file)");
  const std::uint32_t label_count = read_be32(labels, labels_path);
  if (label_count != image_count)
    throw DataError("image/label count mismatch: " + std::to_string(image_count) +
                    " vs " + std::to_string(label_count));

  const int keep = static_cast<int>(
      std::ceil(fraction * static_cast<double>(image_count)));

  Dataset data;
  data.task = TaskKind::Classification;
  data.input_dim = 28 * 28;
  data.output_dim = 10;
  data.image_rows = 28;
  data.image_cols = 28;
  data.inputs.resize(static_cast<std::size_t>(keep) * data.input_dim);
  data.labels.resize(keep);

  std::vector<unsigned char> pixel_row(data.input_dim);
  for (int mu = 0; mu < keep; ++mu) {
    if (!images.read(reinterpret_cast<char*>(pixel_row.data()), data.input_dim))
      throw DataError(images_path + ": truncated image payload");
    double* out = data.inputs.data() + static_cast<std::size_t>(mu) * data.input_dim;
    for (int j = 0; j < data.input_dim; ++j) out[j] = 0.1 * pixel_row[j];
    char lab = 0;
    if (!labels.read(&lab, 1)) throw DataError(labels_path + ": truncated label payload");
    const int value = static_cast<unsigned char>(lab);
    if (value > 9) throw DataError(labels_path + ": label out of range");
    data.labels[mu] = value;
  }

  data.provenance = images_path + " fraction=" + std::to_string(fraction);
  data.validate();
  return data;
}

Dataset augment_shift(const Dataset& data, int pixels) {
  require_image(data, "augment_shift");
  if (data.task != TaskKind::Classification)
    throw ConfigError("augment_shift: expected a classification dataset");

  const int rows = data.image_rows;
  const int cols = data.image_cols;
  const int p = data.sample_count();
  static constexpr std::array<std::array<int, 2>, 8> kDirections{
      {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {-1, 1}, {1, -1}, {1, 1}}};

  Dataset out;
  out.task = TaskKind::Classification;
  out.input_dim = data.input_dim;
  out.output_dim = data.output_dim;
  out.image_rows = rows;
  out.image_cols = cols;
  out.inputs.assign(static_cast<std::size_t>(p) * 8 * data.input_dim, 0.0);
  out.labels.resize(static_cast<std::size_t>(p) * 8);

  std::size_t dst_index = 0;
  for (int mu = 0; mu < p; ++mu) {
    const double* src = data.inputs.data() + static_cast<std::size_t>(mu) * data.input_dim;
    for (const auto& dir : kDirections) {
      const int dr = dir[0] * pixels;
      const int dc = dir[1] * pixels;
      double* dst = out.inputs.data() + dst_index * data.input_dim;
      for (int r = 0; r < rows; ++r) {
        const int sr = r - dr;
        if (sr < 0 || sr >= rows) continue;
        for (int c = 0; c < cols; ++c) {
          const int sc = c - dc;
          if (sc < 0 || sc >= cols) continue;
          dst[r * cols + c] = src[sr * cols + sc];
        }
      }
      out.labels[dst_index] = data.labels[mu];
      ++dst_index;
    }
  }
  out.provenance = data.provenance + " +shift" + std::to_string(pixels);
  out.validate();
  return out;
}

Dataset augment_noise(const Dataset& data, double sigma_raw, int copies,
                      std::uint64_t seed) {
  require_image(data, "augment_noise");
  if (copies < 1) throw ConfigError("augment_noise: copies must be >= 1");
  const int p = data.sample_count();
  const double sigma = 0.1 * sigma_raw;  // raw pixel units -> rescaled input units

  Dataset out;
  out.task = data.task;
  out.input_dim = data.input_dim;
  out.output_dim = data.output_dim;
  out.image_rows = data.image_rows;
  out.image_cols = data.image_cols;
  out.inputs.resize(static_cast<std::size_t>(p) * copies * data.input_dim);
  out.labels.resize(static_cast<std::size_t>(p) * copies);

  Rng rng(seed);
  std::size_t dst_index = 0;
  for (int mu = 0; mu < p; ++mu) {
    const double* src = data.inputs.data() + static_cast<std::size_t>(mu) * data.input_dim;
    for (int c = 0; c < copies; ++c) {
      double* dst = out.inputs.data() + dst_index * data.input_dim;
      for (int j = 0; j < data.input_dim; ++j)
        dst[j] = sigma > 0.0 ? src[j] + sigma * rng.normal() : src[j];
      out.labels[dst_index] = data.labels[mu];
      ++dst_index;
    }
  }
  out.provenance = data.provenance + " +noise" + std::to_string(sigma_raw);
  out.validate();
  return out;
}

Dataset gauss_smooth(const Dataset& data) {
  require_image(data, "gauss_smooth");
  const int rows = data.image_rows;
  const int cols = data.image_cols;
  const int p = data.sample_count();
  constexpr int kRadius = 3;

  // unit-sigma kernel, truncated and renormalized
  double kernel[2 * kRadius + 1][2 * kRadius + 1];
  double sum = 0.0;
  for (int dr = -kRadius; dr <= kRadius; ++dr)
    for (int dc = -kRadius; dc <= kRadius; ++dc) {
      const double v = std::exp(-0.5 * (dr * dr + dc * dc));
      kernel[dr + kRadius][dc + kRadius] = v;
      sum += v;
    }
  for (auto& row : kernel)
    for (auto& v : row) v /= sum;

  Dataset out = data;
  out.provenance = data.provenance + " +smooth";
  for (int mu = 0; mu < p; ++mu) {
    const double* src = data.inputs.data() + static_cast<std::size_t>(mu) * data.input_dim;
    double* dst = out.inputs.data() + static_cast<std::size_t>(mu) * data.input_dim;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        double acc = 0.0;
        for (int dr = -kRadius; dr <= kRadius; ++dr) {
          const int sr = r + dr;
          if (sr < 0 || sr >= rows) continue;
          for (int dc = -kRadius; dc <= kRadius; ++dc) {
            const int sc = c + dc;
            if (sc < 0 || sc >= cols) continue;
            acc += kernel[dr + kRadius][dc + kRadius] * src[sr * cols + sc];
          }
        }
        dst[r * cols + c] = acc;
      }
  }
  return out;
}

}  // namespace gvm
