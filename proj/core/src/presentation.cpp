#include "chow/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "chow/error.hpp"
#include "chow/matrix.hpp"

namespace chow {

void RingPresentation::check_degree(int d, const std::string& what) const {
    if (validity_bound && d > *validity_bound)
        throw UsageError(what + " at degree " + std::to_string(d) +
                         " outside validity bound " + std::to_string(*validity_bound));
}

RingPresentation make_presentation(std::vector<std::pair<std::string, int>> vars,
                                   const std::vector<std::string>& relations,
                                   std::optional<int> validity_bound) {
    RingPresentation p;
    p.tab = make_table(std::move(vars));
    for (const auto& r : relations) p.relations.push_back(Poly::parse(p.tab, r));
    p.validity_bound = validity_bound;
    return p;
}

MapCheckResult check_ring_map(const RingMap& map, OracleMode mode) {
    const auto& st = *map.source.tab;
    // degree defects are reported before any membership work
    for (int i = 0; i < st.size(); ++i) {
        auto it = map.images.find(st.name(i));
        if (it == map.images.end())
            return {false, "no image for generator '" + st.name(i) + "'"};
        const Poly& img = it->second;
        if (!same_table(img.table(), map.target.tab))
            return {false, "image of '" + st.name(i) + "' lives in a different ring"};
        if (!img.is_zero()) {
            auto hd = img.homogeneous_degree();
            if (!hd || *hd != st.weight(i))
                return {false, "image of '" + st.name(i) + "' is not homogeneous of weight " +
                                   std::to_string(st.weight(i))};
        }
    }

    int cap = 0;
    std::vector<Poly> mapped;
    for (const auto& r : map.source.relations) {
        Poly m = map.apply(r);
        if (!m.is_zero()) cap = std::max(cap, m.degree());
        mapped.push_back(std::move(m));
    }
    StrongBasis gb = strong_groebner_basis(map.target.ideal(), cap);
    for (size_t i = 0; i < mapped.size(); ++i) {
        if (!membership_checked(gb, map.target.ideal(), mapped[i], mode))
            return {false, "relation " + map.source.relations[i].to_string() +
                               " maps to " + mapped[i].to_string() +
                               " which is not in the target ideal"};
    }
    return {true, "all generator degrees match and all relations map into the target ideal"};
}

QuotientCompareResult quotient_compare(const RingMap& map, int dmax, OracleMode mode, size_t cap) {
    QuotientCompareResult res;
    MapCheckResult mc = check_ring_map(map, mode);
    if (!mc.ok) {
        res.detail = "not a ring map: " + mc.detail;
        return res;
    }

    const TablePtr& stab = map.source.tab;
    const TablePtr& ttab = map.target.tab;
    for (int d = 1; d <= dmax; ++d) {
        map.source.check_degree(d, "source presentation");
        map.target.check_degree(d, "target presentation");
        GradedGroup gs = graded_piece_group(stab, map.source.relations, d, cap);
        GradedGroup gt = graded_piece_group(ttab, map.target.relations, d, cap);
        res.groups.emplace_back(gs, gt);
        if (!(gs == gt)) {
            std::ostringstream os;
            os << "degree " << d << ": source piece " << gs.to_string() << " differs from target "
               << gt.to_string();
            res.detail = os.str();
            return res;
        }

        // surjectivity: target relations plus mapped source monomials span the
        // target degree-d piece integrally
        auto tbasis = monomials_of_degree(*ttab, d, cap);
        std::map<Mono, int, MonoCmp> index{MonoCmp{ttab.get()}};
        for (size_t i = 0; i < tbasis.size(); ++i) index.emplace(tbasis[i], static_cast<int>(i));
        std::vector<std::vector<mpz_class>> cols;
        auto add_poly = [&](const Poly& p) {
            std::vector<mpz_class> col(tbasis.size(), 0);
            for (const auto& [m, c] : p.terms()) col[index.at(m)] = c;
            cols.push_back(std::move(col));
        };
        for (const auto& rel : map.target.relations) {
            if (rel.is_zero()) continue;
            int rd = *rel.homogeneous_degree();
            if (rd > d) continue;
            for (const auto& m : monomials_of_degree(*ttab, d - rd, cap)) add_poly(rel.mul_term(m, 1));
        }
        for (const auto& m : monomials_of_degree(*stab, d, cap))
            add_poly(map.apply(Poly::monomial(stab, m, 1)));
        ZMat mat(static_cast<int>(tbasis.size()), static_cast<int>(cols.size()));
        for (int c = 0; c < mat.cols; ++c)
            for (int r = 0; r < mat.rows; ++r) mat.at(r, c) = cols[c][r];
        auto inv = smith_invariants(std::move(mat));
        bool onto = inv.size() == tbasis.size() &&
                    std::all_of(inv.begin(), inv.end(), [](const mpz_class& v) { return v == 1; });
        if (!onto) {
            res.detail = "map is not surjective onto the degree " + std::to_string(d) + " piece";
            return res;
        }
    }
    res.isomorphic = true;
    res.detail = "graded pieces agree and the map is degreewise surjective up to degree " +
                 std::to_string(dmax);
    return res;
}

RingPresentation root_gerbe(const RingPresentation& base, const Poly& c1L, int n,
                            std::string* fresh_name) {
    if (!same_table(c1L.table(), base.tab)) throw UsageError("c1L from a different ring");
    if (n < 1) throw UsageError("root order must be positive");
    auto hd = c1L.homogeneous_degree();
    if (!hd || *hd != 1)
        throw UsageError("c1L is not homogeneous of degree 1: " + c1L.to_string());

    std::string t = "t";
    for (int k = 0; base.tab->index_of(t) >= 0; ++k) t = "t" + std::to_string(k);
    if (fresh_name) *fresh_name = t;

    std::vector<std::pair<std::string, int>> vars;
    for (int i = 0; i < base.tab->size(); ++i) vars.emplace_back(base.tab->name(i), base.tab->weight(i));
    vars.emplace_back(t, 1);

    RingPresentation out;
    out.tab = make_table(std::move(vars));
    for (const auto& r : base.relations) out.relations.push_back(transport(r, out.tab));
    Poly rel = transport(c1L, out.tab) - mpz_class(n) * Poly::variable(out.tab, t);
    if (!rel.is_zero() && rel.lead_coeff() < 0) rel = -rel;
    out.relations.push_back(std::move(rel));
    out.validity_bound = base.validity_bound;
    return out;
}

}  // namespace chow
