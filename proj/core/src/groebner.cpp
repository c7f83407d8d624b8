#include "chow/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chow/error.hpp"

namespace chow {

namespace {

struct Pair {
    int deg;
    Mono lcm;
    int kind;  // 0 = S-pair, 1 = G-pair
    int i, j;
    const VariableTable* tab;

    bool operator<(const Pair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (lcm != o.lcm) return mono_greater(*tab, o.lcm, lcm);  // smaller monomial first
        if (kind != o.kind) return kind < o.kind;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

void flip_sign(GBElem& e) {
    e.p = -e.p;
    for (auto& c : e.cof) c = -c;
}

// Euclidean reduction with elem-level cofactor tracking.
Poly reduce(const TablePtr& tab, const std::vector<GBElem>& elems, Poly p,
            std::vector<Poly>* elem_cofs) {
    if (elem_cofs) elem_cofs->assign(elems.size(), Poly::zero(tab));
    Poly rem = Poly::zero(tab);
    while (!p.is_zero()) {
        const Mono m = p.lead_mono();
        const mpz_class c = p.lead_coeff();

        int best = -1;
        for (size_t k = 0; k < elems.size(); ++k) {
            const Poly& b = elems[k].p;
            if (b.is_zero() || !mono_divides(b.lead_mono(), m)) continue;
            if (best < 0 || b.lead_coeff() < elems[best].p.lead_coeff()) best = static_cast<int>(k);
        }
        if (best < 0) {
            rem.add_term(m, c);
            p.add_term(m, -c);
            continue;
        }
        const Poly& b = elems[best].p;
        mpz_class q, s;
        mpz_fdiv_qr(q.get_mpz_t(), s.get_mpz_t(), c.get_mpz_t(), b.lead_coeff().get_mpz_t());
        if (q != 0) {
            Mono shift = mono_div(m, b.lead_mono());
            p -= b.mul_term(shift, q);
            if (elem_cofs) (*elem_cofs)[best].add_term(shift, q);
        }
        if (s != 0) {
            rem.add_term(m, s);
            p.add_term(m, -s);
        }
    }
    return rem;
}

void check_input(const IdealSpec& ideal) {
    for (const auto& g : ideal.gens) {
        if (!same_table(g.table(), ideal.tab)) throw UsageError("generator from a different ring");
        if (!g.is_zero() && !g.is_homogeneous())
            throw UsageError("generator is not homogeneous: " + g.to_string());
    }
}

}  // namespace

StrongBasis strong_groebner_basis(const IdealSpec& ideal, int degree_cap) {
    check_input(ideal);
    StrongBasis basis;
    basis.tab = ideal.tab;
    basis.gens = ideal.gens;

    int cap = degree_cap;
    for (const auto& g : ideal.gens)
        if (!g.is_zero()) cap = std::max(cap, g.degree());
    basis.cap = cap;

    const int n = static_cast<int>(ideal.gens.size());
    for (int i = 0; i < n; ++i) {
        if (ideal.gens[i].is_zero()) continue;
        GBElem e;
        e.p = ideal.gens[i];
        e.cof.assign(n, Poly::zero(basis.tab));
        e.cof[i] = Poly::constant(basis.tab, 1);
        if (e.p.lead_coeff() < 0) flip_sign(e);
        basis.elems.push_back(std::move(e));
    }

    std::set<Pair> queue;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            Mono l = mono_lcm(basis.elems[i].p.lead_mono(), basis.elems[j].p.lead_mono());
            int d = wdeg(*basis.tab, l);
            if (d > cap) continue;
            queue.insert(Pair{d, l, 0, i, j, basis.tab.get()});
            const mpz_class& ci = basis.elems[i].p.lead_coeff();
            const mpz_class& cj = basis.elems[j].p.lead_coeff();
            if (cj % ci != 0 && ci % cj != 0) queue.insert(Pair{d, l, 1, i, j, basis.tab.get()});
        }
    };
    for (int j = 1; j < static_cast<int>(basis.elems.size()); ++j) push_pairs(j);

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        const GBElem& f = basis.elems[pr.i];
        const GBElem& g = basis.elems[pr.j];
        Mono sf = mono_div(pr.lcm, f.p.lead_mono());
        Mono sg = mono_div(pr.lcm, g.p.lead_mono());

        Poly cand = Poly::zero(basis.tab);
        std::vector<Poly> cof(basis.gens.size(), Poly::zero(basis.tab));
        if (pr.kind == 0) {
            mpz_class u = lcm(f.p.lead_coeff(), g.p.lead_coeff());
            mpz_class qf = u / f.p.lead_coeff();
            mpz_class qg = u / g.p.lead_coeff();
            cand = f.p.mul_term(sf, qf) - g.p.mul_term(sg, qg);
            for (size_t k = 0; k < cof.size(); ++k)
                cof[k] = f.cof[k].mul_term(sf, qf) - g.cof[k].mul_term(sg, qg);
        } else {
            mpz_class d, s, t;
            mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), f.p.lead_coeff().get_mpz_t(),
                       g.p.lead_coeff().get_mpz_t());
            cand = f.p.mul_term(sf, s) + g.p.mul_term(sg, t);
            for (size_t k = 0; k < cof.size(); ++k)
                cof[k] = f.cof[k].mul_term(sf, s) + g.cof[k].mul_term(sg, t);
        }

        std::vector<Poly> elem_cofs;
        Poly rem = reduce(basis.tab, basis.elems, std::move(cand), &elem_cofs);
        if (rem.is_zero()) continue;

        GBElem fresh;
        fresh.p = std::move(rem);
        fresh.cof = std::move(cof);
        for (size_t k = 0; k < basis.elems.size(); ++k) {
            if (elem_cofs[k].is_zero()) continue;
            for (size_t gi = 0; gi < fresh.cof.size(); ++gi)
                fresh.cof[gi] -= elem_cofs[k] * basis.elems[k].cof[gi];
        }
        if (fresh.p.lead_coeff() < 0) flip_sign(fresh);
        basis.elems.push_back(std::move(fresh));
        push_pairs(static_cast<int>(basis.elems.size()) - 1);
    }
    return basis;
}

Poly normal_form(const StrongBasis& basis, const Poly& p, std::vector<Poly>* gen_cofs) {
    if (!same_table(p.table(), basis.tab)) throw UsageError("polynomial from a different ring");
    std::vector<Poly> elem_cofs;
    Poly rem = reduce(basis.tab, basis.elems, p, gen_cofs ? &elem_cofs : nullptr);
    if (gen_cofs) {
        gen_cofs->assign(basis.gens.size(), Poly::zero(basis.tab));
        for (size_t k = 0; k < basis.elems.size(); ++k) {
            if (elem_cofs[k].is_zero()) continue;
            for (size_t gi = 0; gi < basis.gens.size(); ++gi)
                (*gen_cofs)[gi] += elem_cofs[k] * basis.elems[k].cof[gi];
        }
    }
    return rem;
}

ContainsResult ideal_contains(const StrongBasis& basis, const Poly& p) {
    for (const auto& [d, comp] : p.graded_components())
        if (d > basis.cap)
            throw UsageError("degree " + std::to_string(d) + " above basis cap " +
                             std::to_string(basis.cap));
    ContainsResult res;
    std::vector<Poly> cofs;
    res.remainder = normal_form(basis, p, &cofs);
    res.contained = res.remainder.is_zero();
    if (res.contained) {
        Poly check = Poly::zero(basis.tab);
        for (size_t i = 0; i < basis.gens.size(); ++i) check += cofs[i] * basis.gens[i];
        if (check != p)
            throw EngineInconsistency("membership certificate does not reproduce the polynomial");
        res.cert.cofactors = std::move(cofs);
    }
    return res;
}

ContainsResult ideal_contains(const IdealSpec& ideal, const Poly& p) {
    int cap = 0;
    for (const auto& [d, comp] : p.graded_components()) cap = std::max(cap, d);
    return ideal_contains(strong_groebner_basis(ideal, cap), p);
}

bool verify_strong(const StrongBasis& basis) {
    const auto& es = basis.elems;
    for (size_t j = 0; j < es.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            Mono l = mono_lcm(es[i].p.lead_mono(), es[j].p.lead_mono());
            if (wdeg(*basis.tab, l) > basis.cap) continue;
            Mono si = mono_div(l, es[i].p.lead_mono());
            Mono sj = mono_div(l, es[j].p.lead_mono());
            const mpz_class& ci = es[i].p.lead_coeff();
            const mpz_class& cj = es[j].p.lead_coeff();

            mpz_class u = lcm(ci, cj);
            Poly spoly = es[i].p.mul_term(si, u / ci) - es[j].p.mul_term(sj, u / cj);
            if (!reduce(basis.tab, es, std::move(spoly), nullptr).is_zero()) return false;

            if (cj % ci != 0 && ci % cj != 0) {
                mpz_class d, s, t;
                mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), ci.get_mpz_t(),
                           cj.get_mpz_t());
                Poly gpoly = es[i].p.mul_term(si, s) + es[j].p.mul_term(sj, t);
                if (!reduce(basis.tab, es, std::move(gpoly), nullptr).is_zero()) return false;
            }
        }
    return true;
}

OracleMode oracle_mode_from_string(const std::string& s) {
    if (s == "groebner") return OracleMode::groebner;
    if (s == "snf") return OracleMode::snf;
    if (s == "both") return OracleMode::both;
    throw UsageError("unknown oracle mode '" + s + "' (expected groebner, snf or both)");
}

std::string to_string(OracleMode m) {
    switch (m) {
        case OracleMode::groebner: return "groebner";
        case OracleMode::snf: return "snf";
        default: return "both";
    }
}

OracleMode query_mode(OracleMode mode, int deg, int window) {
    return (mode == OracleMode::both && deg > window) ? OracleMode::groebner : mode;
}

bool membership_checked(const StrongBasis& basis, const IdealSpec& ideal, const Poly& p,
                        OracleMode mode, size_t cap) {
    bool gb_says = false, snf_says = false;
    if (mode != OracleMode::snf) gb_says = ideal_contains(basis, p).contained;
    if (mode != OracleMode::groebner) {
        snf_says = true;
        for (const auto& [d, comp] : p.graded_components())
            if (!lattice_membership(ideal.gens, comp, cap)) snf_says = false;
    }
    if (mode == OracleMode::groebner) return gb_says;
    if (mode == OracleMode::snf) return snf_says;
    if (gb_says != snf_says)
        throw EngineInconsistency(
            "engine inconsistency: Groebner membership " + std::string(gb_says ? "yes" : "no") +
            " vs lattice membership " + std::string(snf_says ? "yes" : "no") + " for " +
            p.to_string());
    return gb_says;
}

IdealEqualResult ideal_equal(const IdealSpec& a, const IdealSpec& b, int dmax, OracleMode mode,
                             size_t cap) {
    if (!same_table(a.tab, b.tab)) throw UsageError("ideal comparison across different rings");
    check_input(a);
    check_input(b);
    int gcap = 0;
    for (const auto& g : a.gens)
        if (!g.is_zero()) gcap = std::max(gcap, g.degree());
    for (const auto& g : b.gens)
        if (!g.is_zero()) gcap = std::max(gcap, g.degree());

    StrongBasis ga, gb;
    if (mode != OracleMode::snf) {
        ga = strong_groebner_basis(a, gcap);
        gb = strong_groebner_basis(b, gcap);
    }

    IdealEqualResult res;
    res.equal = true;
    std::ostringstream detail;
    // Generator containment is certificate-based; the snf leg of the equality
    // check is the graded-window comparison below.
    OracleMode gen_mode = mode == OracleMode::snf ? OracleMode::snf : OracleMode::groebner;
    auto contain_all = [&](const IdealSpec& big, const StrongBasis& big_gb,
                           const IdealSpec& small, const char* dir) {
        for (const auto& g : small.gens) {
            if (g.is_zero()) continue;
            bool in = membership_checked(big_gb, big, g, gen_mode, cap);
            if (!in) {
                res.equal = false;
                detail << dir << " misses " << g.to_string() << "; ";
            }
        }
    };
    contain_all(a, ga, b, "left ideal");
    contain_all(b, gb, a, "right ideal");

    if (res.equal && mode != OracleMode::groebner) {
        for (int d = 1; d <= dmax; ++d) {
            GradedGroup qa = graded_piece_group(a.tab, a.gens, d, cap);
            GradedGroup qb = graded_piece_group(b.tab, b.gens, d, cap);
            if (!(qa == qb))
                throw EngineInconsistency("engine inconsistency: ideals judged equal but degree " +
                                          std::to_string(d) + " pieces differ: " + qa.to_string() +
                                          " vs " + qb.to_string());
        }
    }
    res.detail = res.equal ? "mutual containment of generators" : detail.str();
    return res;
}

}  // namespace chow
