// colormosaic: enhance a color image through a grayscale mosaic.
//
//   colormosaic enhance in.png --model 2x2 --method alpha --sweep 0.8:1.0:0.01 -o out.png
//
// Exit codes: 0 success, 1 usage/config error, 2 I/O or decode error,
// 3 shape error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "colormosaic/colormosaic.hpp"
#include "colormosaic/image_io.hpp"
#include "colormosaic/report_json.hpp"

namespace cm = colormosaic;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kShape = 3 };

struct Options {
  std::string input;
  std::string output;
  std::string model = "2x2";
  bool no_luminance = false;
  std::string method = "alpha";
  std::optional<double> alpha;
  std::string sweep;
  std::string alpha_mode = "dcnorm";
  std::string colorspace = "rgb";
  std::string block = "8x8";
  double epsilon = cm::kDefaultEpsilon;
  std::string dump_mosaic;
  std::string dump_spectrum;
  std::string dump_spectrum_centered;
  std::string report;
};

cm::AlphaRange parse_sweep(const std::string& s) {
  cm::AlphaRange r;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> r.lo >> c1 >> r.hi >> c2 >> r.step) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw cm::ConfigError("--sweep expects LO:HI:STEP, got '" + s + "'");
  }
  r.validate();
  return r;
}

cm::BlockGrid parse_block(const std::string& s) {
  cm::BlockGrid g;
  char x = 0;
  std::istringstream in(s);
  if (!(in >> g.block_rows >> x >> g.block_cols) || (x != 'x' && x != 'X') || !in.eof() ||
      g.block_rows == 0 || g.block_cols == 0) {
    throw cm::ConfigError("--block expects L1xL2 with positive sizes, got '" + s + "'");
  }
  return g;
}

cm::RunConfig build_config(const Options& o) {
  cm::RunConfig cfg;
  const auto kind = cm::parse_mosaic_kind(o.model);
  if (!kind) throw cm::ConfigError("unknown mosaic model '" + o.model + "'");
  cfg.mosaic_model = o.no_luminance ? cm::MosaicModel(*kind, false) : cm::MosaicModel(*kind);

  if (o.method == "alpha") {
    cfg.method = cm::Method::AlphaRooting;
  } else if (o.method == "histeq") {
    cfg.method = cm::Method::HistEq;
  } else {
    throw cm::ConfigError("unknown method '" + o.method + "'");
  }

  const auto color = cm::parse_color_model(o.colorspace);
  if (!color) throw cm::ConfigError("unknown colorspace '" + o.colorspace + "'");
  cfg.color_model = *color;

  if (o.alpha_mode == "dcnorm") {
    cfg.alpha_mode = cm::AlphaMode::DcNormalized;
  } else if (o.alpha_mode == "raw") {
    cfg.alpha_mode = cm::AlphaMode::Raw;
  } else {
    throw cm::ConfigError("unknown alpha mode '" + o.alpha_mode + "'");
  }

  if (o.alpha) {
    cfg.alpha = *o.alpha;
  } else if (!o.sweep.empty()) {
    cfg.alpha = parse_sweep(o.sweep);
  } else {
    cfg.alpha = cm::AlphaRange{};
  }
  cfg.block = parse_block(o.block);
  cfg.epsilon = o.epsilon;
  cfg.validate();
  return cfg;
}

int run_enhance(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  const cm::RunConfig cfg = build_config(o);

  std::vector<std::string> warnings;
  const cm::ColorImage input = cm::load_image(o.input, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << o.input << ": " << w << "\n";

  const cm::PreparedRun run(input, cfg);
  if (!o.dump_mosaic.empty()) cm::save_image(run.working_plane(), o.dump_mosaic);
  if (!o.dump_spectrum.empty() || !o.dump_spectrum_centered.empty()) {
    const cm::Spectrum spec = run.spectrum() ? *run.spectrum() : cm::dft2(run.working_plane());
    if (!o.dump_spectrum.empty()) cm::save_image(cm::spectrum_image(spec), o.dump_spectrum);
    if (!o.dump_spectrum_centered.empty()) {
      cm::save_image(cm::spectrum_image(cm::center_shift(spec)), o.dump_spectrum_centered);
    }
  }

  std::optional<cm::EnhanceResult> result;
  if (cfg.method == cm::Method::AlphaRooting &&
      std::holds_alternative<cm::AlphaRange>(cfg.alpha)) {
    cm::SweepResult sweep = cm::alpha_sweep(run);
    result.emplace(cm::EnhanceResult{std::move(sweep.image), sweep.report});
  } else {
    const double alpha =
        std::holds_alternative<double>(cfg.alpha) ? std::get<double>(cfg.alpha) : 1.0;
    result.emplace(run.evaluate(alpha));
  }
  cm::save_image(result->image, o.output);

  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  const std::string text = cm::to_json(result->report, o.input, o.output, elapsed_ms).dump(2);
  if (o.report.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(o.report);
    out << text << "\n";
    if (!out) throw cm::IoError("cannot write report '" + o.report + "'");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Color image enhancement through grayscale mosaics"};
  app.require_subcommand(1);

  Options o;
  auto* enhance = app.add_subcommand("enhance", "Enhance one image and report EME/CEME");
  enhance->add_option("input", o.input, "Input raster (PNG, TIFF, JPEG, BMP)")->required();
  enhance->add_option("-o,--output", o.output, "Output raster")->required();
  enhance->add_option("--model", o.model, "Mosaic layout")
      ->check(CLI::IsMember({"2x2", "2x3", "row", "col"}))
      ->capture_default_str();
  enhance->add_flag("--no-luminance", o.no_luminance,
                    "Leave the luminance plane out of row/col mosaics");
  enhance->add_option("--method", o.method, "Enhancement method")
      ->check(CLI::IsMember({"alpha", "histeq"}))
      ->capture_default_str();
  auto* alpha = enhance->add_option("--alpha", o.alpha, "Fixed alpha");
  auto* sweep = enhance->add_option("--sweep", o.sweep,
                                    "Alpha grid LO:HI:STEP maximizing CEME (default 0.8:1.0:0.01)");
  alpha->excludes(sweep);
  enhance->add_option("--alpha-mode", o.alpha_mode, "Magnitude rule")
      ->check(CLI::IsMember({"raw", "dcnorm"}))
      ->capture_default_str();
  enhance->add_option("--colorspace", o.colorspace, "Color model to enhance in")
      ->check(CLI::IsMember({"rgb", "xyz", "cmy", "yuv"}))
      ->capture_default_str();
  enhance->add_option("--block", o.block, "EME block size L1xL2")->capture_default_str();
  enhance->add_option("--epsilon", o.epsilon, "EME offset for zero minima")
      ->capture_default_str();
  enhance->add_option("--dump-mosaic", o.dump_mosaic, "Write the grayscale mosaic");
  enhance->add_option("--dump-spectrum", o.dump_spectrum, "Write the mosaic's log spectrum");
  enhance->add_option("--dump-spectrum-centered", o.dump_spectrum_centered,
                      "Write the center-shifted log spectrum");
  enhance->add_option("--report", o.report, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    return run_enhance(o);
  } catch (const cm::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const cm::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const cm::ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kShape;
  }
}
