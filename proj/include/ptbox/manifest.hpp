#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ptbox/config.hpp"

namespace ptbox {

nlohmann::json to_json(const SimulationConfig& config);

/// Inverse of to_json; the result is validated.
SimulationConfig config_from_json(const nlohmann::json& j);

/// Run manifest written next to every output file.
nlohmann::json make_manifest(const std::string& subcommand, const nlohmann::json& resolved,
                             const std::vector<std::string>& outputs);

/// Config embedded in a manifest produced by `simulate`.
SimulationConfig config_from_manifest(const nlohmann::json& manifest);

std::string utc_timestamp();

} // namespace ptbox
