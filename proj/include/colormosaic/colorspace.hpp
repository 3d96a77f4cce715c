#pragma once

#include <array>

#include "colormosaic/error.hpp"
#include "colormosaic/image.hpp"

namespace colormosaic {

namespace detail {

using Mat3 = std::array<std::array<double, 3>, 3>;

constexpr Mat3 invert(const Mat3& m) {
  const double c00 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const double c01 = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  const double c02 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  const double det = m[0][0] * c00 + m[0][1] * c01 + m[0][2] * c02;
  const double inv_det = 1.0 / det;
  return {{{c00 * inv_det, (m[0][2] * m[2][1] - m[0][1] * m[2][2]) * inv_det,
            (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * inv_det},
           {c01 * inv_det, (m[0][0] * m[2][2] - m[0][2] * m[2][0]) * inv_det,
            (m[0][2] * m[1][0] - m[0][0] * m[1][2]) * inv_det},
           {c02 * inv_det, (m[0][1] * m[2][0] - m[0][0] * m[2][1]) * inv_det,
            (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * inv_det}}};
}

// Linear sRGB (D65) primaries. Channel values are used without gamma
// decoding; the 1/255 and x255 scalings cancel, so the matrix acts directly.
inline constexpr Mat3 kRgbToXyz{{{0.4124564, 0.3575761, 0.1804375},
                                 {0.2126729, 0.7151522, 0.0721750},
                                 {0.0193339, 0.1191920, 0.9503041}}};
inline constexpr Mat3 kXyzToRgb = invert(kRgbToXyz);

inline ColorImage apply(const Mat3& m, const ColorImage& img, ColorModel target) {
  const std::size_t h = img.height(), w = img.width();
  std::array<GrayImage, 3> out{GrayImage(h, w), GrayImage(h, w), GrayImage(h, w)};
  const auto a = img.plane(0).values(), b = img.plane(1).values(), c = img.plane(2).values();
  for (std::size_t k = 0; k < 3; ++k) {
    auto dst = out[k].values();
    for (std::size_t i = 0; i < dst.size(); ++i) {
      dst[i] = m[k][0] * a[i] + m[k][1] * b[i] + m[k][2] * c[i];
    }
  }
  return ColorImage(std::move(out), target);
}

inline constexpr double kYr = 0.299, kYg = 0.587, kYb = 0.114;
inline constexpr double kUScale = 0.492, kVScale = 0.877, kChromaOffset = 128.0;

inline ColorImage rgb_to_yuv(const ColorImage& img) {
  const std::size_t h = img.height(), w = img.width();
  GrayImage y(h, w), u(h, w), v(h, w);
  const auto r = img.plane(0).values(), g = img.plane(1).values(), b = img.plane(2).values();
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double yy = kYr * r[i] + kYg * g[i] + kYb * b[i];
    y.values()[i] = yy;
    u.values()[i] = kUScale * (b[i] - yy) + kChromaOffset;
    v.values()[i] = kVScale * (r[i] - yy) + kChromaOffset;
  }
  return ColorImage(std::move(y), std::move(u), std::move(v), ColorModel::YUV);
}

inline ColorImage yuv_to_rgb(const ColorImage& img) {
  const std::size_t h = img.height(), w = img.width();
  GrayImage r(h, w), g(h, w), b(h, w);
  const auto y = img.plane(0).values(), u = img.plane(1).values(), v = img.plane(2).values();
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double rr = y[i] + (v[i] - kChromaOffset) / kVScale;
    const double bb = y[i] + (u[i] - kChromaOffset) / kUScale;
    r.values()[i] = rr;
    b.values()[i] = bb;
    g.values()[i] = (y[i] - kYr * rr - kYb * bb) / kYg;
  }
  return ColorImage(std::move(r), std::move(g), std::move(b), ColorModel::RGB);
}

inline ColorImage complement(const ColorImage& img, ColorModel target) {
  auto inv = [](const GrayImage& p) { return transform(p, [](double v) { return 255.0 - v; }); };
  return ColorImage(inv(img.plane(0)), inv(img.plane(1)), inv(img.plane(2)), target);
}

}  // namespace detail

inline constexpr double kLumaR = 0.3, kLumaG = 0.59, kLumaB = 0.11;

/// I = 0.3 c1 + 0.59 c2 + 0.11 c3 on arbitrary planes, without a model check.
inline GrayImage weighted_luminance(const GrayImage& c1, const GrayImage& c2,
                                    const GrayImage& c3) {
  GrayImage out(c1.rows(), c1.cols());
  const auto a = c1.values(), b = c2.values(), c = c3.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = kLumaR * a[i] + kLumaG * b[i] + kLumaB * c[i];
  }
  return out;
}

/// Luminance of an RGB image, I = 0.3R + 0.59G + 0.11B. No quantization.
inline GrayImage luminance(const ColorImage& img) {
  if (img.model() != ColorModel::RGB) {
    throw ConfigError("luminance requires an RGB image, got " +
                      std::string(to_string(img.model())));
  }
  return weighted_luminance(img.plane(0), img.plane(1), img.plane(2));
}

/// Converts between RGB and XYZ, CMY or YUV. One side of the pair must be RGB;
/// converting to the image's own model returns a copy. Results are not
/// clamped.
inline ColorImage convert(const ColorImage& img, ColorModel target) {
  const ColorModel from = img.model();
  if (from == target) return img;
  if (from == ColorModel::RGB) {
    switch (target) {
      case ColorModel::XYZ: return detail::apply(detail::kRgbToXyz, img, ColorModel::XYZ);
      case ColorModel::CMY: return detail::complement(img, ColorModel::CMY);
      case ColorModel::YUV: return detail::rgb_to_yuv(img);
      case ColorModel::RGB: break;
    }
  } else if (target == ColorModel::RGB) {
    switch (from) {
      case ColorModel::XYZ: return detail::apply(detail::kXyzToRgb, img, ColorModel::RGB);
      case ColorModel::CMY: return detail::complement(img, ColorModel::RGB);
      case ColorModel::YUV: return detail::yuv_to_rgb(img);
      case ColorModel::RGB: break;
    }
  }
  throw ConfigError("unsupported color conversion " + std::string(to_string(from)) + " -> " +
                    std::string(to_string(target)) + " (one side must be rgb)");
}

}  // namespace colormosaic
