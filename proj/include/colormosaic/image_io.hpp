#pragma once

// Raster file boundary. Decoding and encoding are delegated to OpenCV's
// imgcodecs; this header owns the 8-bit quantization rule and channel policy.

#include <algorithm>
#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "colormosaic/error.hpp"
#include "colormosaic/image.hpp"

namespace colormosaic {

enum class RasterFormat { PNG, TIFF, JPEG, BMP };

namespace detail {

inline std::optional<RasterFormat> sniff_format(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::array<unsigned char, 8> magic{};
  in.read(reinterpret_cast<char*>(magic.data()), magic.size());
  const auto n = in.gcount();
  if (n >= 8 && magic[0] == 0x89 && magic[1] == 'P' && magic[2] == 'N' && magic[3] == 'G') {
    return RasterFormat::PNG;
  }
  if (n >= 4 && ((magic[0] == 'I' && magic[1] == 'I' && magic[2] == 42 && magic[3] == 0) ||
                 (magic[0] == 'M' && magic[1] == 'M' && magic[2] == 0 && magic[3] == 42))) {
    return RasterFormat::TIFF;
  }
  if (n >= 3 && magic[0] == 0xFF && magic[1] == 0xD8 && magic[2] == 0xFF) {
    return RasterFormat::JPEG;
  }
  if (n >= 2 && magic[0] == 'B' && magic[1] == 'M') return RasterFormat::BMP;
  return std::nullopt;
}

inline std::optional<RasterFormat> format_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".png") return RasterFormat::PNG;
  if (ext == ".tif" || ext == ".tiff") return RasterFormat::TIFF;
  if (ext == ".jpg" || ext == ".jpeg") return RasterFormat::JPEG;
  if (ext == ".bmp") return RasterFormat::BMP;
  return std::nullopt;
}

inline cv::Mat to_u8(const GrayImage& img) {
  cv::Mat out(static_cast<int>(img.rows()), static_cast<int>(img.cols()), CV_8UC1);
  for (std::size_t r = 0; r < img.rows(); ++r) {
    auto* dst = out.ptr<std::uint8_t>(static_cast<int>(r));
    const auto src = img.row(r);
    for (std::size_t c = 0; c < img.cols(); ++c) dst[c] = quantize_sample(src[c]);
  }
  return out;
}

inline void write_mat(const cv::Mat& mat, const std::filesystem::path& path) {
  if (!format_from_extension(path)) {
    throw IoError("unsupported output format for '" + path.string() +
                  "' (use .png, .tif, .jpg or .bmp)");
  }
  bool ok = false;
  try {
    ok = cv::imwrite(path.string(), mat);
  } catch (const cv::Exception& e) {
    throw IoError("cannot write '" + path.string() + "': " + e.what());
  }
  if (!ok) throw IoError("cannot write '" + path.string() + "'");
}

}  // namespace detail

/// Reads an 8-bit raster as an RGB ColorImage. Grayscale inputs are replicated
/// into three planes and a fourth (alpha) channel is dropped; both cases
/// append a message to `warnings` when it is given.
inline ColorImage load_image(const std::filesystem::path& path,
                             std::vector<std::string>* warnings = nullptr) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw IoError("cannot read '" + path.string() + "': no such file");
  }
  if (!detail::sniff_format(path)) {
    throw IoError("unsupported format: '" + path.string() +
                  "' is not a PNG, TIFF, JPEG or BMP raster");
  }
  cv::Mat raw;
  try {
    raw = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
  } catch (const cv::Exception& e) {
    throw IoError("cannot decode '" + path.string() + "': " + e.what());
  }
  if (raw.empty()) throw IoError("cannot decode '" + path.string() + "'");
  if (raw.depth() != CV_8U) {
    throw IoError("unsupported format: '" + path.string() + "' is not 8 bits per sample");
  }

  auto warn = [&](std::string msg) {
    if (warnings) warnings->push_back(std::move(msg));
  };
  const int channels = raw.channels();
  const std::size_t h = static_cast<std::size_t>(raw.rows);
  const std::size_t w = static_cast<std::size_t>(raw.cols);
  std::array<GrayImage, 3> planes{GrayImage(h, w), GrayImage(h, w), GrayImage(h, w)};

  if (channels == 1 || channels == 2) {
    warn("grayscale input replicated into three identical planes");
    if (channels == 2) warn("alpha channel dropped");
    for (std::size_t r = 0; r < h; ++r) {
      const auto* src = raw.ptr<std::uint8_t>(static_cast<int>(r));
      for (std::size_t c = 0; c < w; ++c) {
        const double v = src[c * channels];
        planes[0](r, c) = v;
        planes[1](r, c) = v;
        planes[2](r, c) = v;
      }
    }
  } else if (channels == 3 || channels == 4) {
    if (channels == 4) warn("alpha channel dropped");
    for (std::size_t r = 0; r < h; ++r) {
      const auto* src = raw.ptr<std::uint8_t>(static_cast<int>(r));
      for (std::size_t c = 0; c < w; ++c) {
        // OpenCV stores BGR(A).
        const auto* px = src + c * channels;
        planes[0](r, c) = px[2];
        planes[1](r, c) = px[1];
        planes[2](r, c) = px[0];
      }
    }
  } else {
    throw IoError("unsupported format: " + std::to_string(channels) + " channels");
  }
  return ColorImage(std::move(planes), ColorModel::RGB);
}

/// Writes the three planes as an 8-bit RGB raster, whatever the color model
/// tag says. Samples are rounded half away from zero, then clamped.
inline void save_image(const ColorImage& img, const std::filesystem::path& path) {
  std::vector<cv::Mat> bgr{detail::to_u8(img.plane(2)), detail::to_u8(img.plane(1)),
                           detail::to_u8(img.plane(0))};
  cv::Mat merged;
  cv::merge(bgr, merged);
  detail::write_mat(merged, path);
}

inline void save_image(const GrayImage& img, const std::filesystem::path& path) {
  if (img.empty()) throw ShapeError("cannot save an empty image");
  detail::write_mat(detail::to_u8(img), path);
}

}  // namespace colormosaic
