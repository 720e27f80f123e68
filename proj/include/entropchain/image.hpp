#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

#include "entropchain/common.hpp"

namespace entropchain {

/// Row-major 8-bit RGB raster.
struct RgbImage {
  int width = 0;
  int height = 0;
  Bytes pixels;  // width * height * 3, R G B per pixel

  static RgbImage filled(int w, int h, std::uint8_t r, std::uint8_t g,
                         std::uint8_t b) {
    RgbImage img{w, h, Bytes(static_cast<std::size_t>(w) * h * 3)};
    for (std::size_t i = 0; i < img.pixels.size(); i += 3) {
      img.pixels[i] = r;
      img.pixels[i + 1] = g;
      img.pixels[i + 2] = b;
    }
    return img;
  }

  std::uint8_t* at(int x, int y) {
    return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }
  const std::uint8_t* at(int x, int y) const {
    return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }

  bool operator==(const RgbImage&) const = default;
};

constexpr int kNonceImageSide = 80;
constexpr std::size_t kNonceImageBytes =
    static_cast<std::size_t>(kNonceImageSide) * kNonceImageSide * 3;  // 19,200

namespace detail {

// round half up to 8-bit
inline std::uint8_t quantize_channel(double v) {
  double r = std::floor(v + 0.5);
  return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

// Area-averaging resample along both axes. Each destination pixel averages
// the source rectangle it covers, with fractional edge weights.
inline RgbImage resize_box(const RgbImage& src, int w, int h) {
  RgbImage dst{w, h, Bytes(static_cast<std::size_t>(w) * h * 3)};
  const double sx = static_cast<double>(src.width) / w;
  const double sy = static_cast<double>(src.height) / h;
  for (int oy = 0; oy < h; ++oy) {
    const double y0 = oy * sy;
    const double y1 = (oy + 1) * sy;
    const int iy0 = static_cast<int>(std::floor(y0));
    const int iy1 = std::min(src.height, static_cast<int>(std::ceil(y1)));
    for (int ox = 0; ox < w; ++ox) {
      const double x0 = ox * sx;
      const double x1 = (ox + 1) * sx;
      const int ix0 = static_cast<int>(std::floor(x0));
      const int ix1 = std::min(src.width, static_cast<int>(std::ceil(x1)));
      double acc[3] = {0, 0, 0};
      double area = 0;
      for (int y = iy0; y < iy1; ++y) {
        const double wy =
            std::min(y1, static_cast<double>(y + 1)) - std::max(y0, static_cast<double>(y));
        for (int x = ix0; x < ix1; ++x) {
          const double wx = std::min(x1, static_cast<double>(x + 1)) -
                            std::max(x0, static_cast<double>(x));
          const double wgt = wx * wy;
          const std::uint8_t* p = src.at(x, y);
          acc[0] += wgt * p[0];
          acc[1] += wgt * p[1];
          acc[2] += wgt * p[2];
          area += wgt;
        }
      }
      std::uint8_t* q = dst.at(ox, oy);
      for (int c = 0; c < 3; ++c) q[c] = quantize_channel(acc[c] / area);
    }
  }
  return dst;
}

inline RgbImage resize_bilinear(const RgbImage& src, int w, int h) {
  RgbImage dst{w, h, Bytes(static_cast<std::size_t>(w) * h * 3)};
  const double sx = static_cast<double>(src.width) / w;
  const double sy = static_cast<double>(src.height) / h;
  for (int oy = 0; oy < h; ++oy) {
    const double fy = std::clamp((oy + 0.5) * sy - 0.5, 0.0,
                                 static_cast<double>(src.height - 1));
    const int y0 = static_cast<int>(std::floor(fy));
    const int y1 = std::min(y0 + 1, src.height - 1);
    const double ty = fy - y0;
    for (int ox = 0; ox < w; ++ox) {
      const double fx = std::clamp((ox + 0.5) * sx - 0.5, 0.0,
                                   static_cast<double>(src.width - 1));
      const int x0 = static_cast<int>(std::floor(fx));
      const int x1 = std::min(x0 + 1, src.width - 1);
      const double tx = fx - x0;
      const std::uint8_t* p00 = src.at(x0, y0);
      const std::uint8_t* p10 = src.at(x1, y0);
      const std::uint8_t* p01 = src.at(x0, y1);
      const std::uint8_t* p11 = src.at(x1, y1);
      std::uint8_t* q = dst.at(ox, oy);
      for (int c = 0; c < 3; ++c) {
        const double top = p00[c] + tx * (p10[c] - p00[c]);
        const double bot = p01[c] + tx * (p11[c] - p01[c]);
        q[c] = quantize_channel(top + ty * (bot - top));
      }
    }
  }
  return dst;
}

}  // namespace detail

/// Resample to w x h: area-averaging box filter when shrinking, bilinear
/// when either dimension grows. Identity when dimensions already match.
inline RgbImage resize(const RgbImage& img, int w, int h) {
  if (w < 1 || h < 1) throw ImageError("resize target must be at least 1x1");
  if (w == img.width && h == img.height) return img;
  if (w > img.width || h > img.height)
    return detail::resize_bilinear(img, w, h);
  return detail::resize_box(img, w, h);
}

/// Image-nonce wire format: exactly 19,200 bytes, row-major, R G B per pixel,
/// uncompressed. Only 80x80 images are admissible.
inline Bytes serialize_image_nonce(const RgbImage& img) {
  if (img.width != kNonceImageSide || img.height != kNonceImageSide)
    throw ImageError("image nonce must be exactly 80x80");
  return img.pixels;
}

inline RgbImage deserialize_image_nonce(ByteView bytes) {
  if (bytes.size() != kNonceImageBytes)
    throw ImageError("image nonce must be exactly 19,200 bytes");
  return RgbImage{kNonceImageSide, kNonceImageSide,
                  Bytes(bytes.begin(), bytes.end())};
}

}  // namespace entropchain
