#include "chow/graded.hpp"

#include <algorithm>
#include <map>

#include "chow/error.hpp"
#include "chow/matrix.hpp"

namespace chow {

std::string GradedGroup::to_string() const {
    std::string out;
    if (free_rank == 1) out = "Z";
    else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + t.get_str();
    }
    return out.empty() ? "0" : out;
}

namespace {

void enumerate(const VariableTable& tab, int var, int remaining, Mono& cur, std::vector<Mono>& out,
               size_t cap) {
    if (var == tab.size()) {
        if (remaining == 0) {
            if (out.size() >= cap) throw UsageError("degree too large for oracle");
            out.push_back(cur);
        }
        return;
    }
    int w = tab.weight(var);
    for (int e = remaining / w; e >= 0; --e) {
        cur[var] = e;
        enumerate(tab, var + 1, remaining - e * w, cur, out, cap);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Mono> monomials_of_degree(const VariableTable& tab, int d, size_t cap) {
    if (d < 0) throw UsageError("negative degree");
    std::vector<Mono> out;
    Mono cur(tab.size(), 0);
    enumerate(tab, 0, d, cur, out, cap);
    std::sort(out.begin(), out.end(),
              [&tab](const Mono& a, const Mono& b) { return mono_greater(tab, a, b); });
    return out;
}

namespace {

// Columns: coefficient vectors of all degree-d monomial multiples of the
// relations over the degree-d monomial basis.
ZMat relation_matrix(const TablePtr& tab, const std::vector<Poly>& relations, int d,
                     const std::vector<Mono>& basis, size_t cap) {
    std::map<Mono, int, MonoCmp> index{MonoCmp{tab.get()}};
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

    std::vector<std::vector<mpz_class>> cols;
    for (const auto& rel : relations) {
        if (!same_table(rel.table(), tab)) throw UsageError("relation from a different ring");
        if (rel.is_zero()) continue;
        auto hd = rel.homogeneous_degree();
        if (!hd) throw UsageError("relation is not homogeneous: " + rel.to_string());
        if (*hd > d) continue;
        for (const auto& m : monomials_of_degree(*tab, d - *hd, cap)) {
            Poly mult = rel.mul_term(m, 1);
            std::vector<mpz_class> col(basis.size(), 0);
            for (const auto& [mm, cc] : mult.terms()) col[index.at(mm)] = cc;
            cols.push_back(std::move(col));
        }
    }
    ZMat m(static_cast<int>(basis.size()), static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < m.rows; ++r) m.at(r, c) = cols[c][r];
    return m;
}

}  // namespace

GradedGroup graded_piece_group(const TablePtr& tab, const std::vector<Poly>& relations, int d,
                               size_t cap) {
    auto basis = monomials_of_degree(*tab, d, cap);
    ZMat m = relation_matrix(tab, relations, d, basis, cap);
    auto inv = smith_invariants(std::move(m));
    GradedGroup g;
    g.degree = d;
    g.free_rank = static_cast<int>(basis.size() - inv.size());
    for (const auto& v : inv)
        if (v != 1) g.torsion.push_back(v);
    return g;
}

bool lattice_membership(const std::vector<Poly>& relations, const Poly& p, size_t cap) {
    if (p.is_zero()) return true;
    auto hd = p.homogeneous_degree();
    if (!hd) throw UsageError("lattice membership needs a homogeneous polynomial");
    const TablePtr& tab = p.table();
    auto basis = monomials_of_degree(*tab, *hd, cap);
    ZMat m = relation_matrix(tab, relations, *hd, basis, cap);
    std::map<Mono, int, MonoCmp> index{MonoCmp{tab.get()}};
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    std::vector<mpz_class> v(basis.size(), 0);
    for (const auto& [mm, cc] : p.terms()) v[index.at(mm)] = cc;
    return lattice_contains(m, v);
}

}  // namespace chow
