#pragma once

// Lossless rearrangement of a three-plane color image into one 2-D grayscale
// array and back. Four layouts are provided:
//
//   2x2     each pixel becomes the 2x2 block [[I, c1], [c2, c3]]        (2M x 2N)
//   2x3     each horizontal pixel pair (n,2j),(n,2j+1) becomes the unit
//             [[c1(2j), c2(2j), c3(2j+1)], [c3(2j), c1(2j+1), c2(2j+1)]] (2M x 3N/2)
//   row     each pixel becomes a column run I, c1, c2, c3 (or c1..c3)   (4M x N / 3M x N)
//   column  each pixel becomes a row run I, c1, c2, c3 (or c1..c3)      (M x 4N / M x 3N)
//
// I is the weighted luminance 0.3 c1 + 0.59 c2 + 0.11 c3 of whatever planes
// the image carries. I samples are discarded when inverting.

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "colormosaic/colorspace.hpp"
#include "colormosaic/error.hpp"
#include "colormosaic/image.hpp"

namespace colormosaic {

enum class MosaicKind { M2x2, M2x3, Row, Column };

inline std::string_view to_string(MosaicKind k) {
  switch (k) {
    case MosaicKind::M2x2: return "2x2";
    case MosaicKind::M2x3: return "2x3";
    case MosaicKind::Row: return "row";
    case MosaicKind::Column: return "col";
  }
  return "unknown";
}

inline std::optional<MosaicKind> parse_mosaic_kind(std::string_view s) {
  if (s == "2x2") return MosaicKind::M2x2;
  if (s == "2x3") return MosaicKind::M2x3;
  if (s == "row") return MosaicKind::Row;
  if (s == "col" || s == "column") return MosaicKind::Column;
  return std::nullopt;
}

class MosaicModel {
 public:
  /// Default luminance inclusion: on for 2x2, row and column; off for 2x3.
  constexpr explicit MosaicModel(MosaicKind kind)
      : kind_(kind), include_luminance_(kind != MosaicKind::M2x3) {}

  /// 2x2 always carries I and 2x3 never does; asking otherwise throws.
  MosaicModel(MosaicKind kind, bool include_luminance)
      : kind_(kind), include_luminance_(include_luminance) {
    if (kind == MosaicKind::M2x2 && !include_luminance) {
      throw ConfigError("the 2x2 mosaic always includes the luminance plane");
    }
    if (kind == MosaicKind::M2x3 && include_luminance) {
      throw ConfigError("the 2x3 mosaic has no luminance plane");
    }
  }

  constexpr MosaicKind kind() const noexcept { return kind_; }
  constexpr bool include_luminance() const noexcept { return include_luminance_; }

  /// Number of planes laid out: 4 with I, 3 without.
  constexpr std::size_t plane_count() const noexcept { return include_luminance_ ? 4 : 3; }

  /// Mosaic dimensions for an M x N source.
  std::pair<std::size_t, std::size_t> mosaic_shape(std::size_t m, std::size_t n) const {
    switch (kind_) {
      case MosaicKind::M2x2: return {2 * m, 2 * n};
      case MosaicKind::M2x3:
        if (n % 2 != 0) {
          throw ShapeError("the 2x3 mosaic requires an even source width, got " +
                           std::to_string(n));
        }
        return {2 * m, 3 * n / 2};
      case MosaicKind::Row: return {plane_count() * m, n};
      case MosaicKind::Column: return {m, plane_count() * n};
    }
    return {0, 0};
  }

  std::string name() const {
    std::string s(to_string(kind_));
    if ((kind_ == MosaicKind::Row || kind_ == MosaicKind::Column) && !include_luminance_) {
      s += "-noi";
    }
    return s;
  }

  friend constexpr bool operator==(const MosaicModel&, const MosaicModel&) = default;

 private:
  MosaicKind kind_;
  bool include_luminance_;
};

struct GrayMosaic {
  GrayImage plane;
  MosaicModel model;
  std::size_t src_height;
  std::size_t src_width;
  ColorModel src_color_model;
};

namespace detail {

// Calls visit(mosaic_row, mosaic_col, plane_index, src_row, src_col) for every
// mosaic sample. plane_index 0 is I, 1..3 are c1..c3.
template <typename Visit>
void for_each_layout_slot(const MosaicModel& model, std::size_t m, std::size_t n,
                          Visit&& visit) {
  const std::size_t first = model.include_luminance() ? 0 : 1;
  const std::size_t count = model.plane_count();
  switch (model.kind()) {
    case MosaicKind::M2x2:
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          visit(2 * r, 2 * c, 0, r, c);
          visit(2 * r, 2 * c + 1, 1, r, c);
          visit(2 * r + 1, 2 * c, 2, r, c);
          visit(2 * r + 1, 2 * c + 1, 3, r, c);
        }
      }
      break;
    case MosaicKind::M2x3:
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n / 2; ++j) {
          const std::size_t a = 2 * j, b = 2 * j + 1, col = 3 * j;
          visit(2 * r, col, 1, r, a);
          visit(2 * r, col + 1, 2, r, a);
          visit(2 * r, col + 2, 3, r, b);
          visit(2 * r + 1, col, 3, r, a);
          visit(2 * r + 1, col + 1, 1, r, b);
          visit(2 * r + 1, col + 2, 2, r, b);
        }
      }
      break;
    case MosaicKind::Row:
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t k = 0; k < count; ++k) {
          for (std::size_t c = 0; c < n; ++c) visit(count * r + k, c, first + k, r, c);
        }
      }
      break;
    case MosaicKind::Column:
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t k = 0; k < count; ++k) visit(r, count * c + k, first + k, r, c);
        }
      }
      break;
  }
}

}  // namespace detail

/// Lays the image out as a single grayscale array.
inline GrayMosaic forward(const ColorImage& img, const MosaicModel& model) {
  const std::size_t m = img.height(), n = img.width();
  const auto [rows, cols] = model.mosaic_shape(m, n);
  GrayImage lum;
  if (model.include_luminance()) {
    lum = weighted_luminance(img.plane(0), img.plane(1), img.plane(2));
  }
  const std::array<const GrayImage*, 4> src{&lum, &img.plane(0), &img.plane(1), &img.plane(2)};
  GrayImage out(rows, cols);
  detail::for_each_layout_slot(
      model, m, n,
      [&](std::size_t mr, std::size_t mc, std::size_t p, std::size_t r, std::size_t c) {
        out(mr, mc) = (*src[p])(r, c);
      });
  return GrayMosaic{std::move(out), model, m, n, img.model()};
}

/// Reads each channel sample back from its layout slot. I slots are ignored.
inline ColorImage inverse(const GrayMosaic& mosaic) {
  const std::size_t m = mosaic.src_height, n = mosaic.src_width;
  if (m == 0 || n == 0) throw ShapeError("mosaic source dimensions must be positive");
  const auto [rows, cols] = mosaic.model.mosaic_shape(m, n);
  if (mosaic.plane.rows() != rows || mosaic.plane.cols() != cols) {
    throw ShapeError("mosaic is " + std::to_string(mosaic.plane.rows()) + "x" +
                     std::to_string(mosaic.plane.cols()) + " but model " +
                     mosaic.model.name() + " on a " + std::to_string(m) + "x" +
                     std::to_string(n) + " source needs " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
  std::array<GrayImage, 3> planes{GrayImage(m, n), GrayImage(m, n), GrayImage(m, n)};
  detail::for_each_layout_slot(
      mosaic.model, m, n,
      [&](std::size_t mr, std::size_t mc, std::size_t p, std::size_t r, std::size_t c) {
        if (p > 0) planes[p - 1](r, c) = mosaic.plane(mr, mc);
      });
  return ColorImage(std::move(planes), mosaic.src_color_model);
}

}  // namespace colormosaic
