#pragma once

// Block contrast measures. The image is cut into k1 x k2 non-overlapping
// blocks of L1 x L2 pixels, k = floor(size / L); trailing partial blocks are
// ignored. Each block contributes 20 log10((max + eps) / (min + eps)) and the
// measure is the mean contribution. The color variant takes max and min
// jointly over all three planes of the block.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "colormosaic/error.hpp"
#include "colormosaic/image.hpp"

namespace colormosaic {

inline constexpr double kDefaultEpsilon = 1e-4;

struct BlockGrid {
  std::size_t block_rows = 8;  // L1
  std::size_t block_cols = 8;  // L2

  friend constexpr bool operator==(const BlockGrid&, const BlockGrid&) = default;
};

namespace detail {

inline void check_grid(std::size_t rows, std::size_t cols, const BlockGrid& grid,
                       double epsilon) {
  if (grid.block_rows == 0 || grid.block_cols == 0) {
    throw ConfigError("block dimensions must be positive");
  }
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon must be a finite non-negative number");
  }
  if (rows < grid.block_rows || cols < grid.block_cols) {
    throw ShapeError("image " + std::to_string(rows) + "x" + std::to_string(cols) +
                     " is smaller than one " + std::to_string(grid.block_rows) + "x" +
                     std::to_string(grid.block_cols) + " block");
  }
}

template <std::size_t N>
double block_measure(const std::array<const GrayImage*, N>& planes, const BlockGrid& grid,
                     double epsilon) {
  const std::size_t rows = planes[0]->rows(), cols = planes[0]->cols();
  check_grid(rows, cols, grid, epsilon);
  const std::size_t k1 = rows / grid.block_rows, k2 = cols / grid.block_cols;
  double sum = 0.0;
  for (std::size_t bi = 0; bi < k1; ++bi) {
    for (std::size_t bj = 0; bj < k2; ++bj) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (const GrayImage* p : planes) {
        for (std::size_t r = bi * grid.block_rows; r < (bi + 1) * grid.block_rows; ++r) {
          const auto row = p->row(r).subspan(bj * grid.block_cols, grid.block_cols);
          const auto [mn, mx] = std::minmax_element(row.begin(), row.end());
          lo = std::min(lo, *mn);
          hi = std::max(hi, *mx);
        }
      }
      if (hi != lo) sum += 20.0 * std::log10((hi + epsilon) / (lo + epsilon));
    }
  }
  return sum / static_cast<double>(k1 * k2);
}

}  // namespace detail

/// Enhancement measure of a grayscale image.
inline double eme(const GrayImage& img, const BlockGrid& grid = {},
                  double epsilon = kDefaultEpsilon) {
  return detail::block_measure(std::array<const GrayImage*, 1>{&img}, grid, epsilon);
}

/// Color enhancement measure; per-block extremes are taken over all planes.
inline double ceme(const ColorImage& img, const BlockGrid& grid = {},
                   double epsilon = kDefaultEpsilon) {
  return detail::block_measure(
      std::array<const GrayImage*, 3>{&img.plane(0), &img.plane(1), &img.plane(2)}, grid,
      epsilon);
}

}  // namespace colormosaic
