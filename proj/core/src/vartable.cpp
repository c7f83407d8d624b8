#include "chow/vartable.hpp"

#include <cctype>

#include "chow/error.hpp"

namespace chow {

static bool valid_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

VariableTable::VariableTable(std::vector<std::pair<std::string, int>> vars) {
    names_.reserve(vars.size());
    weights_.reserve(vars.size());
    for (auto& [n, w] : vars) {
        if (!valid_name(n)) throw UsageError("invalid variable name '" + n + "'");
        if (w < 1) throw UsageError("variable '" + n + "' has non-positive weight");
        for (const auto& seen : names_)
            if (seen == n) throw UsageError("duplicate variable name '" + n + "'");
        names_.push_back(std::move(n));
        weights_.push_back(w);
    }
}

int VariableTable::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

std::string VariableTable::to_string() const {
    std::string out = "[";
    for (int i = 0; i < size(); ++i) {
        if (i) out += ", ";
        out += names_[i] + ":" + std::to_string(weights_[i]);
    }
    out += "]";
    return out;
}

TablePtr make_table(std::vector<std::pair<std::string, int>> vars) {
    return std::make_shared<const VariableTable>(std::move(vars));
}

}  // namespace chow
