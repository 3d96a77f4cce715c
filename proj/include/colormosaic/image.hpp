#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "colormosaic/error.hpp"
#include "colormosaic/matrix.hpp"

namespace colormosaic {

enum class ColorModel { RGB, XYZ, CMY, YUV };

inline std::string_view to_string(ColorModel m) {
  switch (m) {
    case ColorModel::RGB: return "rgb";
    case ColorModel::XYZ: return "xyz";
    case ColorModel::CMY: return "cmy";
    case ColorModel::YUV: return "yuv";
  }
  return "unknown";
}

inline std::optional<ColorModel> parse_color_model(std::string_view s) {
  if (s == "rgb") return ColorModel::RGB;
  if (s == "xyz") return ColorModel::XYZ;
  if (s == "cmy") return ColorModel::CMY;
  if (s == "yuv") return ColorModel::YUV;
  return std::nullopt;
}

/// Single-plane real image. Samples nominally live in [0,255] but working
/// values may leave that range until they are quantized at a file boundary.
using GrayImage = Matrix<double>;

/// Round-half-away-from-zero, then clamp to [0,255].
inline std::uint8_t quantize_sample(double v) noexcept {
  const double r = std::round(v);
  if (!(r > 0.0)) return 0;  // also maps NaN to 0
  if (r >= 255.0) return 255;
  return static_cast<std::uint8_t>(r);
}

inline double clamp_sample(double v) noexcept {
  return v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v);
}

inline GrayImage clamped(const GrayImage& img) {
  return transform(img, [](double v) { return clamp_sample(v); });
}

/// Quantizes to the integer levels 0..255 but keeps double storage.
inline GrayImage quantized(const GrayImage& img) {
  return transform(img, [](double v) { return static_cast<double>(quantize_sample(v)); });
}

inline bool all_finite(const GrayImage& img) {
  for (double v : img.values()) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

/// Three equally sized real planes tagged with the color model they encode.
/// Immutable once built.
class ColorImage {
 public:
  ColorImage(std::array<GrayImage, 3> planes, ColorModel model)
      : planes_(std::move(planes)), model_(model) {
    const auto& p0 = planes_[0];
    if (p0.rows() == 0 || p0.cols() == 0) {
      throw ShapeError("color image must be at least 1x1");
    }
    for (const auto& p : planes_) {
      if (!p.same_shape(p0)) throw ShapeError("color planes differ in size");
      if (!all_finite(p)) throw ConfigError("color image contains non-finite samples");
    }
  }

  ColorImage(GrayImage c1, GrayImage c2, GrayImage c3, ColorModel model)
      : ColorImage(std::array<GrayImage, 3>{std::move(c1), std::move(c2), std::move(c3)},
                   model) {}

  std::size_t height() const noexcept { return planes_[0].rows(); }
  std::size_t width() const noexcept { return planes_[0].cols(); }
  ColorModel model() const noexcept { return model_; }
  const GrayImage& plane(std::size_t c) const { return planes_.at(c); }
  const std::array<GrayImage, 3>& planes() const noexcept { return planes_; }

  friend bool operator==(const ColorImage&, const ColorImage&) = default;

 private:
  std::array<GrayImage, 3> planes_;
  ColorModel model_;
};

inline ColorImage clamped(const ColorImage& img) {
  return ColorImage(clamped(img.plane(0)), clamped(img.plane(1)), clamped(img.plane(2)),
                    img.model());
}

inline ColorImage quantized(const ColorImage& img) {
  return ColorImage(quantized(img.plane(0)), quantized(img.plane(1)),
                    quantized(img.plane(2)), img.model());
}

}  // namespace colormosaic
