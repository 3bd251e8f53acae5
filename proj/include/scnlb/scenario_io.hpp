#pragma once

#include <filesystem>

#include <json.hpp>

#include "scnlb/scenario.hpp"

namespace scnlb {

nlohmann::json scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const nlohmann::json& j);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

}  // namespace scnlb
