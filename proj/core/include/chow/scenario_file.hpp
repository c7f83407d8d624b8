#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chow/presentation.hpp"

namespace chow {

// Plain-text ring description:
//
//   # comment to end of line
//   [vars]
//   xi4 = 1
//   b1 = 1
//   [relations]
//   2*gam
//   [contains]        # optional membership queries checked on load
//   4*b2*gam
//   [meta]
//   validity = 8
//
// Variables are listed in precedence order (first listed is reduced first).
struct ScenarioFile {
    std::vector<std::pair<std::string, int>> vars;
    std::vector<std::string> relations;
    std::vector<std::string> contains;
    std::vector<std::pair<std::string, std::string>> meta;

    std::string meta_value(const std::string& key, const std::string& fallback = "") const;
};

ScenarioFile parse_scenario_text(const std::string& text);
ScenarioFile load_scenario_file(const std::string& path);
std::string render_scenario_file(const ScenarioFile& f);

ScenarioFile scenario_file_from_presentation(const RingPresentation& p);
RingPresentation presentation_from_scenario_file(const ScenarioFile& f);

}  // namespace chow
