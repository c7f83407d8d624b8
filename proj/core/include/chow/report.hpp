#pragma once

#include <string>
#include <utility>
#include <vector>

namespace chow {

struct Step {
    std::string anchor;
    bool pass = false;
    std::string witness;
};

struct Report {
    std::string scenario;
    std::vector<std::pair<std::string, long>> params;  // kept in insertion order
    std::string oracle;                                // groebner | snf | both
    std::vector<Step> steps;

    bool pass() const;
};

std::string report_json(const Report& r);
std::string report_text(const Report& r);

// Writes via a temp file in the same directory followed by a rename, so a
// crash never leaves a truncated report behind.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace chow
