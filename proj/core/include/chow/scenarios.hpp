#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chow/groebner.hpp"
#include "chow/report.hpp"

namespace chow {

struct ScenarioParams {
    std::optional<int> g;
    std::optional<int> n;  // also the m of the single-parameter catalog scenarios
    std::optional<int> a;
    std::optional<int> b;
    int dmax = 8;
    OracleMode mode = OracleMode::both;
};

struct ScenarioInfo {
    std::string id;
    std::string params;  // accepted parameters, human-readable
    std::string anchor;  // one-line summary of the certified statement
};

const std::vector<ScenarioInfo>& scenario_registry();
bool scenario_registered(const std::string& id);

// The instances run when the CLI selects a scenario without parameters.
std::vector<ScenarioParams> scenario_default_instances(const std::string& id);

Report run_scenario(const std::string& id, const ScenarioParams& p);

}  // namespace chow
