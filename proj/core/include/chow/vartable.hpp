#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace chow {

// Ordered list of graded variables.  Position in the table is the precedence
// used by the monomial order, so rings that need a specific elimination
// behaviour declare their variables in that order.
class VariableTable {
public:
    VariableTable(std::vector<std::pair<std::string, int>> vars);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    int weight(int i) const { return weights_[i]; }
    const std::vector<int>& weights() const { return weights_; }

    // -1 when absent
    int index_of(const std::string& name) const;

    bool operator==(const VariableTable& o) const {
        return names_ == o.names_ && weights_ == o.weights_;
    }

    std::string to_string() const;

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

TablePtr make_table(std::vector<std::pair<std::string, int>> vars);

inline bool same_table(const TablePtr& a, const TablePtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace chow
