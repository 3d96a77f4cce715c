#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string_view>
#include <vector>

#include "colormosaic/error.hpp"
#include "colormosaic/fft.hpp"
#include "colormosaic/image.hpp"
#include "colormosaic/matrix.hpp"

namespace colormosaic {

using Complex = std::complex<double>;

/// Where the DC bin sits: (0,0) for natural, (H/2, W/2) for centered.
enum class SpectrumLayout { Natural, Centered };

struct Spectrum {
  Matrix<Complex> data;
  SpectrumLayout layout = SpectrumLayout::Natural;

  std::size_t height() const noexcept { return data.rows(); }
  std::size_t width() const noexcept { return data.cols(); }
};

enum class AlphaMode { Raw, DcNormalized };

inline std::string_view to_string(AlphaMode m) {
  return m == AlphaMode::Raw ? "raw" : "dcnorm";
}

namespace detail {

inline void transform_2d(Matrix<Complex>& m, fft::Direction dir) {
  const std::size_t h = m.rows(), w = m.cols();
  if (h == 0 || w == 0) return;
  fft::Plan row_plan(w);
  for (std::size_t r = 0; r < h; ++r) row_plan.execute(m.row(r), dir);
  fft::Plan col_plan(h);
  std::vector<Complex> column(h);
  for (std::size_t c = 0; c < w; ++c) {
    for (std::size_t r = 0; r < h; ++r) column[r] = m(r, c);
    col_plan.execute(column, dir);
    for (std::size_t r = 0; r < h; ++r) m(r, c) = column[r];
  }
}

}  // namespace detail

/// Unnormalized 2-D DFT with kernel exp(-2 pi i (pn/H + sm/W)); DC at (0,0).
inline Spectrum dft2(const GrayImage& img) {
  Matrix<Complex> data = transform(img, [](double v) { return Complex{v, 0.0}; });
  detail::transform_2d(data, fft::Direction::Forward);
  return Spectrum{std::move(data), SpectrumLayout::Natural};
}

struct RealInverse {
  GrayImage image;
  double max_imag_residue = 0.0;
};

/// Inverse 2-D DFT (with the 1/(HW) factor). Keeps the real part and reports
/// the largest imaginary magnitude that was dropped.
inline RealInverse idft2(const Spectrum& spec) {
  if (spec.layout != SpectrumLayout::Natural) {
    throw ConfigError("idft2 needs a natural-layout spectrum; undo the center shift first");
  }
  Matrix<Complex> data = spec.data;
  detail::transform_2d(data, fft::Direction::Inverse);
  RealInverse out{GrayImage(data.rows(), data.cols()), 0.0};
  auto dst = out.image.values();
  const auto src = data.values();
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i] = src[i].real();
    out.max_imag_residue = std::max(out.max_imag_residue, std::abs(src[i].imag()));
  }
  return out;
}

/// out((r + dr) mod H, (c + dc) mod W) = in(r, c).
template <typename T>
Matrix<T> cyclic_shift(const Matrix<T>& in, std::size_t dr, std::size_t dc) {
  const std::size_t h = in.rows(), w = in.cols();
  Matrix<T> out(h, w);
  for (std::size_t r = 0; r < h; ++r) {
    const std::size_t rr = (r + dr) % h;
    for (std::size_t c = 0; c < w; ++c) out(rr, (c + dc) % w) = in(r, c);
  }
  return out;
}

/// Moves DC from (0,0) to (floor(H/2), floor(W/2)) for display.
inline Spectrum center_shift(const Spectrum& spec) {
  if (spec.layout != SpectrumLayout::Natural) {
    throw ConfigError("center_shift expects a natural-layout spectrum");
  }
  return Spectrum{cyclic_shift(spec.data, spec.height() / 2, spec.width() / 2),
                  SpectrumLayout::Centered};
}

/// Exact inverse of center_shift for any size, odd ones included.
inline Spectrum uncenter_shift(const Spectrum& spec) {
  if (spec.layout != SpectrumLayout::Centered) {
    throw ConfigError("uncenter_shift expects a centered spectrum");
  }
  const std::size_t h = spec.height(), w = spec.width();
  return Spectrum{cyclic_shift(spec.data, h - h / 2, w - w / 2), SpectrumLayout::Natural};
}

/// Replaces every magnitude |F| by |F|^alpha (raw) or by
/// |F(0,0)| (|F| / |F(0,0)|)^alpha (dcnorm), leaving the phase untouched.
/// Zero bins stay zero. dcnorm keeps the DC bin, hence the mean, unchanged.
inline Spectrum alpha_root(const Spectrum& spec, double alpha, AlphaMode mode) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ConfigError("alpha must be a positive finite number");
  }
  if (spec.data.empty()) return spec;
  if (spec.layout != SpectrumLayout::Natural) {
    throw ConfigError("alpha_root expects a natural-layout spectrum");
  }
  const double dc = std::abs(spec.data(0, 0));
  if (mode == AlphaMode::DcNormalized && !(dc > 0.0)) {
    throw ConfigError("dc-normalized alpha-rooting needs a nonzero DC bin");
  }
  Spectrum out = spec;
  if (alpha == 1.0) return out;
  for (Complex& f : out.data.values()) {
    const double mag = std::abs(f);
    if (mag == 0.0) continue;
    const double new_mag =
        mode == AlphaMode::Raw ? std::pow(mag, alpha) : dc * std::pow(mag / dc, alpha);
    f *= new_mag / mag;
  }
  return out;
}

/// Alpha-roots an already transformed image and returns the clamped result.
inline GrayImage alpha_root_enhance(const Spectrum& spectrum, double alpha, AlphaMode mode) {
  return clamped(idft2(alpha_root(spectrum, alpha, mode)).image);
}

/// dft2 -> alpha_root -> idft2 -> clamp to [0,255].
inline GrayImage alpha_root_enhance(const GrayImage& img, double alpha,
                                    AlphaMode mode = AlphaMode::DcNormalized) {
  return alpha_root_enhance(dft2(img), alpha, mode);
}

/// Log-magnitude display image: log(1+|F|) mapped affinely onto [0,255].
/// A flat spectrum maps to all zeros.
inline GrayImage spectrum_image(const Spectrum& spec) {
  GrayImage out = transform(spec.data, [](const Complex& f) { return std::log1p(std::abs(f)); });
  if (out.empty()) return out;
  const auto [lo, hi] = std::minmax_element(out.values().begin(), out.values().end());
  const double min = *lo, range = *hi - *lo;
  for (double& v : out.values()) v = range > 0.0 ? 255.0 * (v - min) / range : 0.0;
  return out;
}

}  // namespace colormosaic
