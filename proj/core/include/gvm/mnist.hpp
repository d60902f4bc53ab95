#pragma once

#include <cstdint>
#include <string>

#include "gvm/dataset.hpp"
#include "gvm/params.hpp"

namespace gvm {

// Reference controls for the digit task: c_w=1, c_b=100, c_beta=0.005,
// N=1000, F2 with d=30 and stop F2 < 1.
ControlParams mnist_controls();

// Reads the big-endian IDX pair (magic 0x803 images, 0x801 labels), keeps the
// first ceil(fraction * count) samples in file order, and rescales pixels by
// 0.1 (so components lie in [0, 25.5]). L is 10.
Dataset load_mnist(const std::string& images_path, const std::string& labels_path,
                   double fraction = 1.0);

// 8 copies per sample, shifted `pixels` toward each neighbor (axes and
// diagonals), zero-filled at the exposed border.
Dataset augment_shift(const Dataset& data, int pixels = 2);

// `copies` noisy copies per sample. sigma is in raw 0-255 pixel units and is
// applied after the 0.1 rescale (sigma=80 adds noise of std 8.0 to the
// rescaled components).
Dataset augment_noise(const Dataset& data, double sigma_raw = 80.0, int copies = 10,
                      std::uint64_t seed = 1);

// 2D Gaussian blur, sigma = 1 pixel, kernel radius 3 renormalized to sum 1,
// zero padding at the border.
Dataset gauss_smooth(const Dataset& data);

}  // namespace gvm
