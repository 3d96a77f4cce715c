#pragma once

// End-to-end enhancement: color model conversion, mosaic layout (or the bare
// Y plane for YUV), grayscale enhancement, inverse layout, conversion back to
// RGB, and EME/CEME scoring.

#include <cmath>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "colormosaic/colorspace.hpp"
#include "colormosaic/error.hpp"
#include "colormosaic/image.hpp"
#include "colormosaic/metrics.hpp"
#include "colormosaic/mosaic.hpp"
#include "colormosaic/spatial.hpp"
#include "colormosaic/spectral.hpp"

namespace colormosaic {

enum class Method { AlphaRooting, HistEq };

inline std::string_view to_string(Method m) {
  return m == Method::AlphaRooting ? "alpha_rooting" : "hist_eq";
}

/// Inclusive grid lo, lo+step, ..., hi.
struct AlphaRange {
  double lo = 0.80;
  double hi = 1.00;
  double step = 0.01;

  void validate() const {
    if (!(lo > 0.0) || !(lo <= hi) || !(hi <= 2.0)) {
      throw ConfigError("alpha sweep range must satisfy 0 < lo <= hi <= 2");
    }
    if (!(step > 0.0) || !std::isfinite(step)) {
      throw ConfigError("alpha sweep step must be positive");
    }
  }

  std::vector<double> points() const {
    validate();
    const double span = (hi - lo) / step;
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      double a = lo + static_cast<double>(i) * step;
      if (std::abs(a - hi) <= 1e-9 * step || a > hi) a = hi;
      out.push_back(a);
    }
    return out;
  }
};

struct RunConfig {
  MosaicModel mosaic_model{MosaicKind::M2x2};
  Method method = Method::AlphaRooting;
  ColorModel color_model = ColorModel::RGB;
  /// A fixed alpha for enhance(), or a grid for alpha_sweep(). Ignored by hist_eq.
  std::variant<double, AlphaRange> alpha = 1.0;
  AlphaMode alpha_mode = AlphaMode::DcNormalized;
  BlockGrid block{};
  double epsilon = kDefaultEpsilon;

  void validate() const {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
      throw ConfigError("epsilon must be a finite non-negative number");
    }
    if (block.block_rows == 0 || block.block_cols == 0) {
      throw ConfigError("block dimensions must be positive");
    }
    if (method == Method::HistEq) return;
    if (const double* a = std::get_if<double>(&alpha)) {
      if (!(*a > 0.0) || !std::isfinite(*a)) throw ConfigError("alpha must be positive");
    } else {
      std::get<AlphaRange>(alpha).validate();
    }
  }
};

struct EnhancementReport {
  /// Empty on the YUV path, which enhances the Y plane without a mosaic.
  std::optional<MosaicModel> mosaic_model;
  Method method = Method::AlphaRooting;
  ColorModel color_model = ColorModel::RGB;
  std::optional<double> alpha;
  AlphaMode alpha_mode = AlphaMode::DcNormalized;
  BlockGrid block{};
  double epsilon = kDefaultEpsilon;
  double eme_before = 0.0;  // of the grayscale working plane
  double eme_after = 0.0;
  double ceme_before = 0.0;  // of the RGB image
  double ceme_after = 0.0;
};

struct EnhanceResult {
  ColorImage image;  // RGB, clamped to [0,255]
  EnhancementReport report;
};

struct SweepPoint {
  double alpha;
  double ceme;
};

struct SweepResult {
  double best_alpha;
  ColorImage image;
  EnhancementReport report;
  std::vector<SweepPoint> curve;
};

/// Everything about a run that does not depend on alpha: the converted
/// image, its grayscale working plane, the plane's spectrum, and the
/// "before" metrics. evaluate() is const and may be called concurrently.
class PreparedRun {
 public:
  PreparedRun(const ColorImage& rgb, RunConfig cfg) : cfg_(std::move(cfg)), source_(rgb) {
    if (rgb.model() != ColorModel::RGB) {
      throw ConfigError("enhancement input must be an RGB image");
    }
    cfg_.validate();
    ColorImage converted = convert(rgb, cfg_.color_model);
    if (cfg_.color_model == ColorModel::YUV) {
      plane_ = converted.plane(0);
    } else {
      GrayMosaic m = forward(converted, cfg_.mosaic_model);
      plane_ = std::move(m.plane);
      m.plane = GrayImage{};
      layout_ = std::move(m);
    }
    converted_ = std::move(converted);
    if (cfg_.method == Method::AlphaRooting) spectrum_ = dft2(plane_);
    eme_before_ = eme(plane_, cfg_.block, cfg_.epsilon);
    ceme_before_ = ceme(source_, cfg_.block, cfg_.epsilon);
  }

  const RunConfig& config() const noexcept { return cfg_; }

  /// The grayscale image that gets enhanced: the mosaic, or Y for YUV.
  const GrayImage& working_plane() const noexcept { return plane_; }

  /// Spectrum of the working plane; present for alpha-rooting runs.
  const std::optional<Spectrum>& spectrum() const noexcept { return spectrum_; }

  double eme_before() const noexcept { return eme_before_; }
  double ceme_before() const noexcept { return ceme_before_; }

  /// Runs the enhancement at `alpha` (ignored for hist_eq). The working plane
  /// is only clipped at zero so XYZ samples above 255 survive the round trip;
  /// the RGB output gets the full [0,255] clamp.
  EnhanceResult evaluate(double alpha) const {
    GrayImage enhanced = cfg_.method == Method::HistEq
                             ? equalize(plane_)
                             : transform(idft2(alpha_root(*spectrum_, alpha, cfg_.alpha_mode)).image,
                                         [](double v) { return v < 0.0 ? 0.0 : v; });
    EnhancementReport report;
    if (layout_) report.mosaic_model = layout_->model;
    report.method = cfg_.method;
    report.color_model = cfg_.color_model;
    if (cfg_.method == Method::AlphaRooting) report.alpha = alpha;
    report.alpha_mode = cfg_.alpha_mode;
    report.block = cfg_.block;
    report.epsilon = cfg_.epsilon;
    report.eme_before = eme_before_;
    report.eme_after = eme(enhanced, cfg_.block, cfg_.epsilon);

    ColorImage back = reassemble(std::move(enhanced));
    ColorImage out = clamped(convert(back, ColorModel::RGB));
    report.ceme_before = ceme_before_;
    report.ceme_after = ceme(out, cfg_.block, cfg_.epsilon);
    return EnhanceResult{std::move(out), report};
  }

 private:
  ColorImage reassemble(GrayImage enhanced) const {
    if (!layout_) {
      return ColorImage(std::move(enhanced), converted_->plane(1), converted_->plane(2),
                        ColorModel::YUV);
    }
    GrayMosaic m = *layout_;
    m.plane = std::move(enhanced);
    return inverse(m);
  }

  RunConfig cfg_;
  ColorImage source_;
  std::optional<ColorImage> converted_;
  GrayImage plane_;
  std::optional<GrayMosaic> layout_;  // layout metadata only; plane left empty
  std::optional<Spectrum> spectrum_;
  double eme_before_ = 0.0;
  double ceme_before_ = 0.0;
};

/// Single enhancement run. For alpha-rooting, cfg.alpha must hold one value.
inline EnhanceResult enhance(const ColorImage& rgb, const RunConfig& cfg) {
  double alpha = 1.0;
  if (cfg.method == Method::AlphaRooting) {
    const double* a = std::get_if<double>(&cfg.alpha);
    if (!a) throw ConfigError("enhance needs a single alpha; use alpha_sweep for a range");
    alpha = *a;
  }
  return PreparedRun(rgb, cfg).evaluate(alpha);
}

/// Evaluates every alpha on the grid and keeps the one with the largest CEME
/// of the enhanced color image. Ties go to the larger alpha. The spectrum of
/// the working plane is computed once and shared by all evaluations.
inline SweepResult alpha_sweep(const PreparedRun& run) {
  const auto* range = std::get_if<AlphaRange>(&run.config().alpha);
  if (!range) throw ConfigError("alpha_sweep needs an alpha range");
  if (run.config().method != Method::AlphaRooting) {
    throw ConfigError("alpha_sweep applies to the alpha-rooting method only");
  }
  std::optional<SweepResult> best;
  std::vector<SweepPoint> curve;
  for (double a : range->points()) {
    EnhanceResult r = run.evaluate(a);
    curve.push_back({a, r.report.ceme_after});
    if (!best || r.report.ceme_after >= best->report.ceme_after) {
      best.emplace(SweepResult{a, std::move(r.image), r.report, {}});
    }
  }
  best->curve = std::move(curve);
  return std::move(*best);
}

inline SweepResult alpha_sweep(const ColorImage& rgb, const RunConfig& cfg) {
  return alpha_sweep(PreparedRun(rgb, cfg));
}

}  // namespace colormosaic
