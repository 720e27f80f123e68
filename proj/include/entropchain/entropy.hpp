#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "entropchain/common.hpp"
#include "entropchain/image.hpp"

// Shannon entropy of 8-bit signals, neighborhood entropy maps, and the
// second-degree-entropy complexity score behind the "interesting image"
// predicate.

namespace entropchain {

/// Row-major 8-bit grayscale raster.
struct GrayGrid {
  int width = 0;
  int height = 0;
  Bytes values;  // width * height

  std::uint8_t at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }

  bool operator==(const GrayGrid&) const = default;
};

/// Per-pixel neighborhood entropy. The quantized (truncated 8-bit) plane
/// drives scoring; the exact plane is for diagnostics and heatmap export.
struct EntropyMatrix {
  int width = 0;
  int height = 0;
  Bytes quantized;
  std::vector<double> exact;
};

/// H = sum over distinct symbols of p * log2(1/p), p = count / len. Bits.
inline double shannon_entropy(ByteView signal) {
  if (signal.empty()) throw Error("entropy of empty signal");
  std::array<std::uint32_t, 256> counts{};
  for (std::uint8_t s : signal) ++counts[s];
  const double n = static_cast<double>(signal.size());
  double h = 0.0;
  for (std::uint32_t c : counts) {
    if (c == 0) continue;
    const double p = c / n;
    h += p * std::log2(1.0 / p);
  }
  return h;
}

/// Entropy of the clipped window around each cell. Window bounds are
/// half-open: rows [max(0, row-N), min(height, row+N)), cols likewise, so an
/// interior window is 2N x 2N and border windows shrink asymmetrically.
inline EntropyMatrix neighborhood_entropy_matrix(const GrayGrid& grid, int N = 3) {
  if (grid.width < 1 || grid.height < 1) throw Error("empty grid");
  if (N < 1) throw Error("window radius must be at least 1");
  EntropyMatrix m{grid.width, grid.height,
                  Bytes(grid.values.size()),
                  std::vector<double>(grid.values.size())};
  Bytes window;
  window.reserve(static_cast<std::size_t>(2 * N) * (2 * N));
  for (int row = 0; row < grid.height; ++row) {
    const int ly = std::max(0, row - N);
    const int uy = std::min(grid.height, row + N);
    for (int col = 0; col < grid.width; ++col) {
      const int lx = std::max(0, col - N);
      const int ux = std::min(grid.width, col + N);
      window.clear();
      for (int y = ly; y < uy; ++y)
        for (int x = lx; x < ux; ++x) window.push_back(grid.at(x, y));
      const double h = shannon_entropy(window);
      const std::size_t i = static_cast<std::size_t>(row) * grid.width + col;
      m.exact[i] = h;
      m.quantized[i] = static_cast<std::uint8_t>(
          std::clamp(static_cast<int>(h), 0, 255));
    }
  }
  return m;
}

/// ITU-R 601-2 luma with integer truncation.
inline GrayGrid grayscale(const RgbImage& img) {
  GrayGrid g{img.width, img.height,
             Bytes(static_cast<std::size_t>(img.width) * img.height)};
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const std::uint8_t* p = img.pixels.data() + i * 3;
    g.values[i] = static_cast<std::uint8_t>(
        (299u * p[0] + 587u * p[1] + 114u * p[2]) / 1000u);
  }
  return g;
}

/// Sum of the quantized second-degree entropy map: grayscale, first-degree
/// entropy matrix, then the entropy matrix of that (truncated) map again.
inline std::int64_t complexity_score(const RgbImage& img) {
  const EntropyMatrix first = neighborhood_entropy_matrix(grayscale(img));
  const GrayGrid first_grid{first.width, first.height, first.quantized};
  const EntropyMatrix second = neighborhood_entropy_matrix(first_grid);
  std::int64_t sum = 0;
  for (std::uint8_t v : second.quantized) sum += v;
  return sum;
}

struct InterestResult {
  std::int64_t score = 0;
  bool interesting = false;
};

/// Scale to width x height, score, and compare strictly against the bottom
/// threshold.
inline InterestResult is_interesting(const RgbImage& img,
                                     std::int64_t bottom_threshold = 500,
                                     int width = 80, int height = 80) {
  const std::int64_t score = complexity_score(resize(img, width, height));
  return {score, score > bottom_threshold};
}

}  // namespace entropchain
