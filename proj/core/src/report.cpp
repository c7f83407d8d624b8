#include "chow/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chow/poly.hpp"
#include "chow/error.hpp"

namespace chow {

bool Report::pass() const {
    if (steps.empty()) return false;
    for (const auto& s : steps)
        if (!s.pass) return false;
    return true;
}

std::string report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["scenario"] = r.scenario;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) p[k] = v;
    if (!r.oracle.empty()) p["oracle"] = r.oracle;
    j["params"] = p;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : r.steps) {
        nlohmann::ordered_json js;
        js["anchor"] = s.anchor;
        js["verdict"] = s.pass ? "pass" : "fail";
        js["witness"] = s.witness;
        steps.push_back(js);
    }
    j["steps"] = steps;
    j["verdict"] = r.pass() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "scenario " << r.scenario;
    if (!r.params.empty() || !r.oracle.empty()) {
        os << " (";
        bool first = true;
        for (const auto& [k, v] : r.params) {
            if (!first) os << ", ";
            os << k << "=" << v;
            first = false;
        }
        if (!r.oracle.empty()) {
            if (!first) os << ", ";
            os << "oracle=" << r.oracle;
        }
        os << ")";
    }
    os << "\n";
    for (const auto& s : r.steps)
        os << "  [" << (s.pass ? "pass" : "FAIL") << "] " << s.anchor << ": " << s.witness << "\n";
    os << "verdict: " << (r.pass() ? "pass" : "fail") << "\n";
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw UsageError("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace chow
