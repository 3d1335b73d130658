#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tura/model.h"

namespace tura {

inline constexpr int kModelFormatVersion = 1;

// Versioned JSON embedding the feature schema. Doubles are written in
// shortest round-trip form, so a reloaded model predicts bit-identically.
std::string model_to_json(const TrainedModel& model);
// Throws ParseError on malformed JSON and SchemaError on a version mismatch.
TrainedModel model_from_json(std::string_view json);

void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

}  // namespace tura
