#pragma once

#include <string>

#include <json.hpp>

namespace godisc {

/// Serializes like nlohmann::json::dump(indent) except that floating-point
/// values are written with 17 significant digits ("%.17g"), which reproduces
/// every double exactly on reload.
std::string dump_json(const nlohmann::json& value, int indent = 2);

}  // namespace godisc
