#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "colormosaic/error.hpp"
#include "colormosaic/image.hpp"

namespace colormosaic {

inline constexpr std::size_t kLevels = 256;

struct Histogram {
  std::array<std::uint64_t, kLevels> counts{};
  std::uint64_t total = 0;
};

/// Monotone level-to-level lookup table.
struct EqualizationMap {
  std::array<double, kLevels> table{};

  double operator()(std::uint8_t level) const noexcept { return table[level]; }
};

/// Counts pixels per level after quantizing each sample to 0..255.
inline Histogram histogram(const GrayImage& img) {
  Histogram h;
  for (double v : img.values()) ++h.counts[quantize_sample(v)];
  h.total = img.size();
  return h;
}

/// table[r] = round(w_min + (w_max - w_min) * F(r)) with F the cumulative
/// normalized histogram. The defaults give the usual 8-bit equalization.
inline EqualizationMap equalization_map(const Histogram& h, double w_min = 0.0,
                                        double w_max = 255.0) {
  if (h.total == 0) throw ConfigError("cannot equalize an empty histogram");
  if (!(w_min <= w_max) || w_min < 0.0 || w_max > 255.0) {
    throw ConfigError("equalization range must satisfy 0 <= w_min <= w_max <= 255");
  }
  EqualizationMap map;
  std::uint64_t running = 0;
  const double total = static_cast<double>(h.total);
  for (std::size_t r = 0; r < kLevels; ++r) {
    running += h.counts[r];
    // F(r) is 0 below the lowest occupied level, which the running sum gives for free.
    const double cdf = static_cast<double>(running) / total;
    map.table[r] = std::round(w_min + (w_max - w_min) * cdf);
  }
  return map;
}

inline GrayImage apply(const EqualizationMap& map, const GrayImage& img) {
  return transform(img, [&](double v) { return map(quantize_sample(v)); });
}

/// Quantize, build the map from this image's own histogram, remap.
inline GrayImage equalize(const GrayImage& img) {
  if (img.empty()) return img;
  return apply(equalization_map(histogram(img)), img);
}

}  // namespace colormosaic
