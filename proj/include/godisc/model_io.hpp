#pragma once

#include <filesystem>

#include <json.hpp>

#include "godisc/discriminant.hpp"

namespace godisc {

// Model document (see docs/formats.md):
//   {"format": "godisc-model", "version": 1, "method": "go-lda", "delta": ...,
//    "k_requested": K, "n_features": M, "directions": [[M values] x K],
//    "ratios": [K values]}

nlohmann::json model_to_json(const DiscriminantModel& model);
DiscriminantModel model_from_json(const nlohmann::json& doc);

void save_model(const DiscriminantModel& model, const std::filesystem::path& path);
DiscriminantModel load_model(const std::filesystem::path& path);

}  // namespace godisc
