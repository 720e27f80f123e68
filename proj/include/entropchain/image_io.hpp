#pragma once

#include <filesystem>
#include <string>

#include <opencv2/imgcodecs.hpp>

#include "entropchain/common.hpp"
#include "entropchain/entropy.hpp"
#include "entropchain/image.hpp"

// File ingestion and export (PNG, JPEG, BMP), backed by OpenCV imgcodecs.
// Everything past decode (grayscale, resize, scoring) is implemented in this
// library with pinned semantics; OpenCV is only used to get pixels in and out
// of files.

namespace entropchain {

/// Decode a PNG/JPEG/BMP file to RGB. Alpha, when present, is composited
/// over black.
inline RgbImage load_image(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path))
    throw IoError("file not found: " + path.string());
  cv::Mat mat = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
  if (mat.empty())
    throw ImageError("cannot decode image: " + path.string());
  if (mat.depth() != CV_8U)
    throw ImageError("unsupported bit depth: " + path.string());

  RgbImage img{mat.cols, mat.rows,
               Bytes(static_cast<std::size_t>(mat.cols) * mat.rows * 3)};
  for (int y = 0; y < mat.rows; ++y) {
    for (int x = 0; x < mat.cols; ++x) {
      std::uint8_t* q = img.at(x, y);
      switch (mat.channels()) {
        case 1: {
          const std::uint8_t v = mat.at<std::uint8_t>(y, x);
          q[0] = q[1] = q[2] = v;
          break;
        }
        case 3: {
          const auto& p = mat.at<cv::Vec3b>(y, x);  // BGR
          q[0] = p[2];
          q[1] = p[1];
          q[2] = p[0];
          break;
        }
        case 4: {
          const auto& p = mat.at<cv::Vec4b>(y, x);  // BGRA
          const unsigned a = p[3];
          q[0] = static_cast<std::uint8_t>((p[2] * a + 127) / 255);
          q[1] = static_cast<std::uint8_t>((p[1] * a + 127) / 255);
          q[2] = static_cast<std::uint8_t>((p[0] * a + 127) / 255);
          break;
        }
        default:
          throw ImageError("unsupported channel count: " + path.string());
      }
    }
  }
  return img;
}

/// Encode to the format implied by the file extension (.png/.bmp/.jpg).
inline void save_image(const RgbImage& img, const std::filesystem::path& path) {
  cv::Mat mat(img.height, img.width, CV_8UC3);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const std::uint8_t* p = img.at(x, y);
      mat.at<cv::Vec3b>(y, x) = cv::Vec3b(p[2], p[1], p[0]);
    }
  }
  if (!cv::imwrite(path.string(), mat))
    throw IoError("cannot write image: " + path.string());
}

/// Export a grayscale raster (entropy heatmaps, etc).
inline void save_gray(const GrayGrid& grid, const std::filesystem::path& path) {
  cv::Mat mat(grid.height, grid.width, CV_8UC1);
  for (int y = 0; y < grid.height; ++y)
    for (int x = 0; x < grid.width; ++x)
      mat.at<std::uint8_t>(y, x) = grid.at(x, y);
  if (!cv::imwrite(path.string(), mat))
    throw IoError("cannot write image: " + path.string());
}

}  // namespace entropchain
