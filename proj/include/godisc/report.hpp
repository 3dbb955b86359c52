#pragma once

#include <string>

#include <json.hpp>

#include "godisc/eval.hpp"

namespace godisc {

/// Report document; sections appear only when filled (see docs/formats.md).
nlohmann::json report_to_json(const EvalReport& report);

/// Aligned-column text: one row per report with a column per direction or
/// subspace dimension, "N/A" where the method has no such direction.
std::string format_table(const EvalReport& report);

/// Long-form CSV, one line per value.
std::string format_csv(const EvalReport& report);

}  // namespace godisc
