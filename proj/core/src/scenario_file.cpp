#include "chow/scenario_file.hpp"

#include <fstream>
#include <sstream>

#include "chow/error.hpp"

namespace chow {
namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string ScenarioFile::meta_value(const std::string& key, const std::string& fallback) const {
    for (const auto& [k, v] : meta)
        if (k == key) return v;
    return fallback;
}

ScenarioFile parse_scenario_text(const std::string& text) {
    ScenarioFile f;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = strip(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw UsageError("line " + std::to_string(lineno) + ": unterminated section header");
            section = strip(line.substr(1, line.size() - 2));
            if (section != "vars" && section != "relations" && section != "contains" &&
                section != "meta")
                throw UsageError("line " + std::to_string(lineno) + ": unknown section [" +
                                 section + "]");
            continue;
        }
        if (section == "vars") {
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw UsageError("line " + std::to_string(lineno) + ": expected name = degree");
            std::string name = strip(line.substr(0, eq));
            std::string deg = strip(line.substr(eq + 1));
            try {
                size_t used = 0;
                int d = std::stoi(deg, &used);
                if (used != deg.size() || d <= 0) throw std::invalid_argument(deg);
                f.vars.emplace_back(name, d);
            } catch (const std::exception&) {
                throw UsageError("line " + std::to_string(lineno) + ": bad degree '" + deg + "'");
            }
        } else if (section == "relations") {
            f.relations.push_back(line);
        } else if (section == "contains") {
            f.contains.push_back(line);
        } else if (section == "meta") {
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw UsageError("line " + std::to_string(lineno) + ": expected key = value");
            f.meta.emplace_back(strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
        } else {
            throw UsageError("line " + std::to_string(lineno) + ": content before any section");
        }
    }
    if (f.vars.empty()) throw UsageError("scenario file has no [vars] section");
    return f;
}

ScenarioFile load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

std::string render_scenario_file(const ScenarioFile& f) {
    std::ostringstream os;
    os << "[vars]\n";
    for (const auto& [n, d] : f.vars) os << n << " = " << d << "\n";
    os << "\n[relations]\n";
    for (const auto& r : f.relations) os << r << "\n";
    if (!f.contains.empty()) {
        os << "\n[contains]\n";
        for (const auto& c : f.contains) os << c << "\n";
    }
    if (!f.meta.empty()) {
        os << "\n[meta]\n";
        for (const auto& [k, v] : f.meta) os << k << " = " << v << "\n";
    }
    return os.str();
}

ScenarioFile scenario_file_from_presentation(const RingPresentation& p) {
    ScenarioFile f;
    for (int i = 0; i < p.tab->size(); ++i)
        f.vars.emplace_back(p.tab->name(i), p.tab->weight(i));
    for (const auto& r : p.relations) f.relations.push_back(r.to_string());
    if (p.validity_bound)
        f.meta.emplace_back("validity", std::to_string(*p.validity_bound));
    return f;
}

RingPresentation presentation_from_scenario_file(const ScenarioFile& f) {
    std::optional<int> bound;
    std::string v = f.meta_value("validity");
    if (!v.empty()) {
        try {
            bound = std::stoi(v);
        } catch (const std::exception&) {
            throw UsageError("bad validity bound '" + v + "'");
        }
    }
    return make_presentation(f.vars, f.relations, bound);
}

}  // namespace chow
