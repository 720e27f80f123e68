#pragma once

#include <cmath>
#include <cstdint>

#include "entropchain/image.hpp"

// Deterministic synthetic images used for the shipped evaluation corpus and
// the test fixtures. Integer arithmetic only, so any reimplementation
// (including the reference scoring script) reproduces them byte-for-byte.

namespace entropchain::synthetic {

/// splitmix64-style mixer over pixel coordinates and a seed.
inline std::uint64_t mix(std::uint64_t x, std::uint64_t y, std::uint64_t seed) {
  std::uint64_t z = x * 0x9E3779B97F4A7C15ULL + y * 0xBF58476D1CE4E5B9ULL +
                    seed * 0x94D049BB133111EBULL;
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline RgbImage flat(int size, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return RgbImage::filled(size, size, r, g, b);
}

inline RgbImage noise_color(int size, std::uint64_t seed) {
  RgbImage img{size, size, Bytes(static_cast<std::size_t>(size) * size * 3)};
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x) {
      const std::uint64_t z = mix(x, y, seed);
      std::uint8_t* p = img.at(x, y);
      p[0] = static_cast<std::uint8_t>(z & 0xFF);
      p[1] = static_cast<std::uint8_t>((z >> 8) & 0xFF);
      p[2] = static_cast<std::uint8_t>((z >> 16) & 0xFF);
    }
  return img;
}

inline RgbImage noise_mono(int size, std::uint64_t seed) {
  RgbImage img{size, size, Bytes(static_cast<std::size_t>(size) * size * 3)};
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x) {
      const auto v = static_cast<std::uint8_t>(mix(x, y, seed) & 0xFF);
      std::uint8_t* p = img.at(x, y);
      p[0] = p[1] = p[2] = v;
    }
  return img;
}

/// Concentric white rings over a vertical gradient.
inline RgbImage structured_rings(int size = 80) {
  RgbImage img{size, size, Bytes(static_cast<std::size_t>(size) * size * 3)};
  const int c = size / 2;
  for (int y = 0; y < size; ++y) {
    const auto g = static_cast<std::uint8_t>(y * 255 / (size - 1));
    for (int x = 0; x < size; ++x) {
      const std::uint64_t d2 = static_cast<std::uint64_t>((x - c) * (x - c)) +
                               static_cast<std::uint64_t>((y - c) * (y - c));
      std::uint8_t* p = img.at(x, y);
      const std::uint8_t v = (isqrt(d2) % 10 < 5) ? 255 : g;
      p[0] = p[1] = p[2] = v;
    }
  }
  return img;
}

/// 8x8 blocks with pseudo-random but spatially correlated intensities.
inline RgbImage structured_blocks(int size = 80) {
  RgbImage img{size, size, Bytes(static_cast<std::size_t>(size) * size * 3)};
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x) {
      const int bx = x / 8;
      const int by = y / 8;
      const auto v = static_cast<std::uint8_t>((bx * by * 13 + bx * 29 + by * 47) % 256);
      std::uint8_t* p = img.at(x, y);
      p[0] = p[1] = p[2] = v;
    }
  return img;
}

/// Flat sky, gradient ground, dark blobs, bright vertical frame lines.
inline RgbImage structured_scene(int size = 80) {
  RgbImage img{size, size, Bytes(static_cast<std::size_t>(size) * size * 3)};
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x) {
      int v = y < 25 ? 220 : (y - 25) * 255 / (size - 26);
      const int d2a = (x - 20) * (x - 20) + (y - 50) * (y - 50);
      const int d2b = (x - 55) * (x - 55) + (y - 35) * (y - 35);
      if (d2a < 100 || d2b < 225) v = 15;
      if (x % 20 < 2 && y >= 25) v = 250;
      std::uint8_t* p = img.at(x, y);
      p[0] = p[1] = p[2] = static_cast<std::uint8_t>(v);
    }
  return img;
}

/// Left half black, right half white.
inline RgbImage half_split(int size = 80) {
  RgbImage img{size, size, Bytes(static_cast<std::size_t>(size) * size * 3)};
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x) {
      const std::uint8_t v = x < size / 2 ? 0 : 255;
      std::uint8_t* p = img.at(x, y);
      p[0] = p[1] = p[2] = v;
    }
  return img;
}

}  // namespace entropchain::synthetic
