#include "chow/symmetric.hpp"

#include <algorithm>

#include "chow/error.hpp"

namespace chow {

namespace {

std::vector<int> locate_tvars(const VariableTable& tab, const std::vector<std::string>& tvars) {
    if (tvars.empty()) throw UsageError("no symmetric variables given");
    std::vector<int> idx;
    for (const auto& name : tvars) {
        int i = tab.index_of(name);
        if (i < 0) throw UsageError("unknown variable '" + name + "'");
        if (tab.weight(i) != 1) throw UsageError("symmetric variable '" + name + "' must have weight 1");
        idx.push_back(i);
    }
    return idx;
}

}  // namespace

TablePtr symmetric_out_table(const TablePtr& in, const std::vector<std::string>& tvars,
                             const std::string& cprefix) {
    auto tidx = locate_tvars(*in, tvars);
    int n = static_cast<int>(tvars.size());
    std::vector<std::pair<std::string, int>> vars;
    for (int i = 0; i < in->size(); ++i)
        if (std::find(tidx.begin(), tidx.end(), i) == tidx.end())
            vars.emplace_back(in->name(i), in->weight(i));
    for (int k = 1; k <= n; ++k) {
        std::string name = cprefix + std::to_string(k);
        if (in->index_of(name) >= 0 &&
            std::find(tvars.begin(), tvars.end(), name) == tvars.end())
            throw UsageError("name '" + name + "' already taken; choose another prefix");
        vars.emplace_back(name, k);
    }
    return make_table(std::move(vars));
}

SymmetricDecomposition symmetric_decompose(const Poly& p, const std::vector<std::string>& tvars,
                                           const std::string& cprefix) {
    const TablePtr& in = p.table();
    auto tidx = locate_tvars(*in, tvars);
    const int n = static_cast<int>(tvars.size());

    SymmetricDecomposition dec;
    dec.out_tab = symmetric_out_table(in, tvars, cprefix);

    // working ring: out variables first, then the t's
    std::vector<std::pair<std::string, int>> big_vars;
    for (int i = 0; i < dec.out_tab->size(); ++i)
        big_vars.emplace_back(dec.out_tab->name(i), dec.out_tab->weight(i));
    for (const auto& t : tvars) big_vars.emplace_back(t, 1);
    TablePtr big = make_table(std::move(big_vars));

    std::vector<int> tbig(n);
    for (int k = 0; k < n; ++k) tbig[k] = big->index_of(tvars[k]);

    // P1(x) = x^n - c1 x^(n-1) + c2 x^(n-2) - ...; coefficient list by x-power
    std::vector<std::vector<Poly>> P(n + 1);
    P[1].assign(n + 1, Poly::zero(big));
    P[1][n] = Poly::constant(big, 1);
    for (int k = 1; k <= n; ++k) {
        mpz_class sign = (k % 2 == 0) ? 1 : -1;
        P[1][n - k] = sign * Poly::variable(big, cprefix + std::to_string(k));
    }
    // P_{m+1}(x) = (P_m(x) - P_m(t_m)) / (x - t_m)
    for (int m = 1; m < n; ++m) {
        int deg = n - m + 1;
        P[m + 1].assign(deg, Poly::zero(big));
        Poly tm = Poly::variable(big, tvars[m - 1]);
        // coefficient of x^u is sum_{j>u} a_j t_m^(j-1-u)
        for (int u = deg - 1; u >= 0; --u) {
            Poly acc = Poly::zero(big);
            Poly tp = Poly::constant(big, 1);
            for (int j = u + 1; j <= deg; ++j) {
                acc += tp * P[m][j];
                tp = tp * tm;
            }
            P[m + 1][u] = acc;
        }
    }

    Poly work = transport(p, big);
    for (int m = n; m >= 1; --m) {
        const int bound = n - m;  // allowed t_m degree after this stage
        const int reldeg = n - m + 1;
        int ti = tbig[m - 1];
        for (;;) {
            int dmax = 0;
            for (const auto& [mm, cc] : work.terms()) dmax = std::max(dmax, mm[ti]);
            if (dmax <= bound) break;
            // leading t_m coefficient, with t_m stripped
            Poly lead = Poly::zero(big);
            for (const auto& [mm, cc] : work.terms()) {
                if (mm[ti] != dmax) continue;
                Mono stripped = mm;
                stripped[ti] = 0;
                lead.add_term(stripped, cc);
            }
            // subtract lead * t_m^(dmax-reldeg) * P_m(t_m)
            Mono shift(big->size(), 0);
            shift[ti] = dmax - reldeg;
            Poly sub = Poly::zero(big);
            for (int j = 0; j <= reldeg; ++j) {
                const Poly& aj = (j < static_cast<int>(P[m].size())) ? P[m][j] : Poly::zero(big);
                if (aj.is_zero()) continue;
                Mono mj = shift;
                mj[ti] += j;
                sub += (lead * aj).mul_term(mj, 1);
            }
            work -= sub;
        }
    }

    for (const auto& [mm, cc] : work.terms()) {
        std::vector<int> key(n);
        Mono stripped = mm;
        for (int k = 0; k < n; ++k) {
            key[k] = mm[tbig[k]];
            if (key[k] > n - (k + 1))
                throw EngineInconsistency("symmetric reduction left an exponent out of range");
            stripped[tbig[k]] = 0;
        }
        auto it = dec.components.find(key);
        if (it == dec.components.end())
            it = dec.components.emplace(key, Poly::zero(big)).first;
        it->second.add_term(stripped, cc);
    }
    for (auto& [key, val] : dec.components) val = transport(val, dec.out_tab);
    return dec;
}

Poly symmetric_recompose(const SymmetricDecomposition& dec, const TablePtr& in,
                         const std::vector<std::string>& tvars) {
    const int n = static_cast<int>(tvars.size());
    // images of the out variables inside the original ring
    std::map<std::string, Poly> images;
    for (int i = 0; i < dec.out_tab->size(); ++i) {
        const std::string& name = dec.out_tab->name(i);
        if (in->index_of(name) >= 0) images.emplace(name, Poly::variable(in, name));
    }
    // c_k -> e_k(t)
    locate_tvars(*in, tvars);
    std::vector<Poly> e(n + 1, Poly::zero(in));
    e[0] = Poly::constant(in, 1);
    for (int k = 0; k < n; ++k) {
        Poly t = Poly::variable(in, tvars[k]);
        for (int j = std::min(k + 1, n); j >= 1; --j) e[j] += e[j - 1] * t;
    }
    for (int k = 1; k <= n; ++k) {
        std::string name = dec.out_tab->name(dec.out_tab->size() - n + k - 1);
        images[name] = e[k];
    }

    Poly out = Poly::zero(in);
    for (const auto& [key, comp] : dec.components) {
        Poly term = comp.substitute(images);
        Mono shift(in->size(), 0);
        for (int k = 0; k < n; ++k) shift[in->index_of(tvars[k])] = key[k];
        out += term.mul_term(shift, 1);
    }
    return out;
}

bool congruence_componentwise(const Poly& a, const Poly& b, const std::vector<std::string>& tvars,
                              const IdealSpec& modulus, OracleMode mode,
                              const std::string& cprefix, int snf_window) {
    SymmetricDecomposition dec = symmetric_decompose(a - b, tvars, cprefix);
    int cap = 0;
    for (const auto& [key, comp] : dec.components)
        if (!comp.is_zero()) cap = std::max(cap, comp.degree());
    StrongBasis gb = strong_groebner_basis(modulus, cap);
    for (const auto& [key, comp] : dec.components) {
        Poly moved = transport(comp, modulus.tab);
        OracleMode m = snf_window >= 0 ? query_mode(mode, moved.degree(), snf_window) : mode;
        if (!membership_checked(gb, modulus, moved, m)) return false;
    }
    return true;
}

}  // namespace chow
