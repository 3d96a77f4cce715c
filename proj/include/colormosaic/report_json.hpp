#pragma once

#include <string>

#include <json.hpp>  // nlohmann/json, vendored

#include "colormosaic/pipeline.hpp"

namespace colormosaic {

/// One run as a JSON object. Doubles are emitted with round-trip precision.
inline nlohmann::json to_json(const EnhancementReport& r, const std::string& input,
                              const std::string& output, double elapsed_ms) {
  nlohmann::json j;
  j["input"] = input;
  j["output"] = output;
  j["mosaic_model"] = r.mosaic_model ? nlohmann::json(r.mosaic_model->name())
                                     : nlohmann::json("none");
  j["method"] = std::string(to_string(r.method));
  j["color_model"] = std::string(to_string(r.color_model));
  j["alpha"] = r.alpha ? nlohmann::json(*r.alpha) : nlohmann::json(nullptr);
  j["alpha_mode"] = std::string(to_string(r.alpha_mode));
  j["block"] = {r.block.block_rows, r.block.block_cols};
  j["epsilon"] = r.epsilon;
  j["eme_before"] = r.eme_before;
  j["eme_after"] = r.eme_after;
  j["ceme_before"] = r.ceme_before;
  j["ceme_after"] = r.ceme_after;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

}  // namespace colormosaic
