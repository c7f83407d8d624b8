#include "chow/catalog.hpp"

#include <algorithm>

#include "chow/error.hpp"
#include "chow/graded.hpp"
#include "chow/groebner.hpp"
#include "chow/symmetric.hpp"

namespace chow {

namespace {

std::string xi_name_for(int m) { return "xi" + std::to_string(2 * m); }

int need(const std::map<std::string, int>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw UsageError("missing parameter '" + key + "'");
    return it->second;
}

void allow_only(const std::map<std::string, int>& params, std::vector<std::string> keys) {
    for (const auto& [k, v] : params) {
        (void)v;
        if (std::find(keys.begin(), keys.end(), k) == keys.end())
            throw UsageError("parameter '" + k + "' is not accepted here");
    }
}

const std::array<std::string, 3> kT = {"t1", "t2", "t3"};

// All k in Z_{>=0}^3 with |k| = m, in a fixed (lexicographic, k1 outermost)
// order so that every derived product is reproducible.
std::vector<std::array<int, 3>> compositions3(int m) {
    std::vector<std::array<int, 3>> out;
    for (int k1 = m; k1 >= 0; --k1)
        for (int k2 = m - k1; k2 >= 0; --k2) out.push_back({k1, k2, m - k1 - k2});
    return out;
}

}  // namespace

TablePtr n1_ambient_table(int g) {
    if (g < 2) throw UsageError("genus must be at least 2");
    if (g % 2 == 0)
        return make_table({{xi_name_for(g), 1}, {"b1", 1}, {"b2", 2}, {"gam", 1}});
    return make_table({{xi_name_for(g), 1}, {"c2", 2}, {"c3", 3}, {"gam", 1}, {"t", 1}});
}

std::pair<std::string, std::string> dab_xi_names(int a, int b) {
    if (a == b) return {xi_name_for(a), xi_name_for(b) + "p"};
    return {xi_name_for(a), xi_name_for(b)};
}

TablePtr dab_working_table(int a, int b) {
    auto [xa, xb] = dab_xi_names(a, b);
    return make_table({{xa, 1}, {xb, 1}, {"c2", 2}, {"c3", 3}});
}

TablePtr pv_torus_table(int m) {
    if (m < 1) throw UsageError("torus presentation needs m >= 1");
    return make_table({{"t1", 1}, {"t2", 1}, {"t3", 1}, {xi_name_for(m), 1}});
}

Poly elementary_symmetric(const TablePtr& tab, const std::vector<std::string>& tvars, int k) {
    const int n = static_cast<int>(tvars.size());
    if (k < 0 || k > n) throw UsageError("elementary symmetric index out of range");
    Poly out = Poly::zero(tab);
    std::vector<int> idx(k);
    // iterate over k-subsets of tvars
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) return Poly::constant(tab, 1);
    for (;;) {
        Poly term = Poly::constant(tab, 1);
        for (int i : idx) term = term * Poly::variable(tab, tvars[i]);
        out += term;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

Poly linear_form(const TablePtr& tab, const std::array<int, 3>& k,
                 const std::array<std::string, 3>& tnames) {
    Poly out = Poly::zero(tab);
    for (int i = 0; i < 3; ++i)
        if (k[i] != 0) out += mpz_class(k[i]) * Poly::variable(tab, tnames[i]);
    return out;
}

RingPresentation catalog_presentation(const std::string& id,
                                      const std::map<std::string, int>& params) {
    if (id == "ring.BPGL2") {
        allow_only(params, {});
        return make_presentation({{"c2", 2}, {"c3", 3}}, {"2c3"});
    }
    if (id == "ring.BG.even") {
        allow_only(params, {});
        return make_presentation({{"b1", 1}, {"b2", 2}, {"gam", 1}},
                                 {"2gam", "gam(gam+b1)"});
    }
    if (id == "ring.BG.odd") {
        allow_only(params, {});
        return make_presentation({{"c2", 2}, {"gam", 1}, {"t", 1}}, {"2gam"});
    }
    if (id == "ring.P1.PGL2") {
        allow_only(params, {});
        return make_presentation({{"tau", 1}, {"c2", 2}, {"c3", 3}}, {"c3", "tau^2+c2"});
    }
    if (id == "ring.P1.Godd") {
        allow_only(params, {});
        return make_presentation({{"tau", 1}, {"gam", 1}, {"c2", 2}, {"c3", 3}, {"t", 1}},
                                 {"2gam", "tau^2+c2", "gam(gam+tau)", "c3"});
    }
    if (id == "ring.P1pow") {
        allow_only(params, {"m"});
        const int m = need(params, "m");
        if (m < 1) throw UsageError("ring.P1pow needs m >= 1");
        std::vector<std::pair<std::string, int>> vars = {{"tau1", 1}};
        for (int j = 2; j <= m; ++j) vars.push_back({"D1" + std::to_string(j), 1});
        vars.push_back({"c2", 2});
        vars.push_back({"c3", 3});
        std::vector<std::string> rels = {"c3", "tau1^2+c2"};
        for (int j = 2; j <= m; ++j) {
            const std::string d = "D1" + std::to_string(j);
            rels.push_back(d + "^2-" + d + "*tau1");
        }
        return make_presentation(vars, rels);
    }
    if (id == "ring.PV-torus") {
        allow_only(params, {"m"});
        const int m = need(params, "m");
        if (m < 1) throw UsageError("ring.PV-torus needs m >= 1");
        return make_presentation(
            {{"t1", 1}, {"t2", 1}, {"t3", 1}, {xi_name_for(m), 1}},
            {"t1+t2+t3", "2*t1*t2*t3"}, 2 * m);
    }
    if (id == "ring.Dab.ambient") {
        allow_only(params, {"a", "b"});
        const int a = need(params, "a");
        const int b = need(params, "b");
        if (a < 1 || b < a) throw UsageError("ring.Dab.ambient needs 1 <= a <= b");
        const std::string xa = xi_name_for(a);
        const std::string xb = a == b ? xi_name_for(b) + "p" : xi_name_for(b);
        TablePtr tab = make_table({{xa, 1}, {xb, 1}, {"c2", 2}, {"c3", 3}});
        std::vector<Poly> rels = {parse_poly(tab, "2c3"),
                                  transport(pa_polynomial(a, xa), tab),
                                  transport(pa_polynomial(b, xb), tab)};
        return RingPresentation{tab, std::move(rels), std::nullopt};
    }
    throw UsageError("unknown catalog ring '" + id + "'");
}

std::vector<std::string> catalog_presentation_ids() {
    return {"ring.BPGL2",  "ring.BG.even", "ring.BG.odd",   "ring.P1.PGL2",
            "ring.P1.Godd", "ring.P1pow",   "ring.PV-torus", "ring.Dab.ambient"};
}

namespace {

TablePtr ambient_even_table(int g) {
    return make_table({{xi_name_for(g), 1}, {"b1", 1}, {"b2", 2}, {"gam", 1}});
}

TablePtr ambient_odd_table(int g) {
    return make_table({{xi_name_for(g), 1}, {"c2", 2}, {"c3", 3}, {"gam", 1}, {"t", 1}});
}

void require_parity(const std::string& id, int g, bool even) {
    if (g < 2 || (g % 2 == 0) != even)
        throw UsageError("class '" + id + "' needs " + (even ? "even" : "odd") +
                         " g >= " + (even ? "2" : "3"));
}

}  // namespace

Poly class_formula(const std::string& id, int g) {
    const std::string xi = xi_name_for(g);
    const std::string sg = std::to_string(g);
    if (id == "uD1.even") {
        require_parity(id, g, true);
        return parse_poly(ambient_even_table(g), "2" + xi + "-2*" + sg + "*b1");
    }
    if (id == "uD1.even.proof") {
        require_parity(id, g, true);
        return parse_poly(ambient_even_table(g), "2" + xi + "-2*" + sg + "*(b1+gam)");
    }
    if (id == "uD1.odd") {
        require_parity(id, g, false);
        return parse_poly(ambient_odd_table(g), "2" + xi);
    }
    if (id == "uD11.even") {
        require_parity(id, g, true);
        return parse_poly(ambient_even_table(g),
                          xi + "^2+(gam-2*" + sg + "*b1)" + xi + "+4*" + sg + "^2*b2");
    }
    if (id == "uD11.odd") {
        require_parity(id, g, false);
        return parse_poly(ambient_odd_table(g),
                          xi + "^2+gam*" + xi + "+" + sg + "^2*c2+gam^2");
    }
    if (id == "i1alpha.even") {
        require_parity(id, g, true);
        return parse_poly(ambient_even_table(g), "(b1+gam)" + xi + "-4*" + sg + "*b2");
    }
    if (id == "i1alpha.odd") {
        require_parity(id, g, false);
        return parse_poly(ambient_odd_table(g), "-2*" + sg + "*c2");
    }
    if (id == "XY.odd") {
        require_parity(id, g, false);
        TablePtr tab = make_table({{"xi2", 1}, {"gam", 1}, {"c2", 2}, {"c3", 3}, {"t", 1}});
        return parse_poly(tab, "xi2^2+xi2*gam+c2+gam^2");
    }
    if (id == "XY.P1.odd") {
        require_parity(id, g, false);
        TablePtr tab = make_table({{"tau", 1}, {"gam", 1}, {"c2", 2}, {"c3", 3}, {"t", 1}});
        return parse_poly(tab, "tau+gam");
    }
    if (id == "XY.P1.even") {
        require_parity(id, g, true);
        TablePtr tab = make_table({{"xi1", 1}, {"b1", 1}, {"b2", 2}, {"gam", 1}});
        return parse_poly(tab, "2xi1-b1-gam");
    }
    throw UsageError("unknown class formula '" + id + "'");
}

std::vector<std::string> class_formula_ids() {
    return {"uD1.even", "uD1.even.proof", "uD1.odd",    "uD11.even", "uD11.odd",
            "i1alpha.even", "i1alpha.odd", "XY.odd", "XY.P1.odd", "XY.P1.even"};
}

Poly w_class(int m, int r) {
    if (r == 1) {
        if (m < 1) throw UsageError("w_class(m, 1) needs m >= 1");
        TablePtr tab = pv_torus_table(m);
        Poly xi = Poly::variable(tab, xi_name_for(m));
        Poly t1 = Poly::variable(tab, "t1");
        Poly e2 = elementary_symmetric(tab, {kT[0], kT[1], kT[2]}, 2);
        return xi * xi + mpz_class(2 * m - 1) * t1 * xi + mpz_class(m) * mpz_class(m) * e2 +
               mpz_class(m) * mpz_class(2 * m - 1) * t1 * t1;
    }
    if (r == 2) {
        if (m < 2) throw UsageError("w_class(m, 2) needs m >= 2");
        TablePtr tab = pv_torus_table(m);
        Poly xi = Poly::variable(tab, xi_name_for(m));
        auto factor = [&](int a2, int a3, bool with_t1) {
            Poly f = xi - linear_form(tab, {with_t1 ? 1 : 0, a2, a3}, kT);
            return f;
        };
        Poly prod = Poly::constant(tab, 1);
        if (m % 2 == 1) {
            prod = factor(m - 1, m, false) * factor(m - 1, m - 1, true) *
                   factor(m, m - 1, false) * factor(m - 2, m - 2, true);
        } else {
            prod = factor(m, m, false) * factor(m - 2, m - 1, true) *
                   factor(m - 1, m - 1, false) * factor(m - 1, m - 2, true);
        }
        Poly t2 = Poly::variable(tab, "t2");
        Poly t3 = Poly::variable(tab, "t3");
        mpz_class mm1 = mpz_class(m) * (m - 1);
        Poly corr = mpz_class(2) * t2 * t3 * (mm1 * xi * xi - (mm1 * mm1 / 2) * t2 * t2);
        return prod + corr;
    }
    throw UsageError("w_class supports r in {1, 2}");
}

Poly w_class_restriction(int m, int r, const std::array<int, 3>& stratum) {
    if (r < 1 || r > 2 || m < r || (r == 2 && m < 2))
        throw UsageError("w_class_restriction needs r in {1, 2} and m >= r");
    const bool known = (stratum == std::array<int, 3>{0, 2, 0}) ||
                       (stratum == std::array<int, 3>{0, 1, 1}) ||
                       (stratum == std::array<int, 3>{0, 0, 2});
    if (!known) throw UsageError("stratum must be one of (0,2,0), (0,1,1), (0,0,2)");
    TablePtr tab = pv_torus_table(m);
    Poly xi = Poly::variable(tab, xi_name_for(m));
    Poly out = Poly::constant(tab, 1);
    for (const auto& k : compositions3(m)) {
        if (k[0] >= r) continue;
        bool below = false;
        for (int j = 0; j < 3; ++j)
            if (k[j] < stratum[j]) below = true;
        if (!below) continue;
        out = out * (xi - linear_form(tab, k, kT));
    }
    return out;
}

bool strata_zero_test(const Poly& p, int m) {
    RingPresentation pres = catalog_presentation("ring.PV-torus", {{"m", m}});
    Poly q = transport(p, pres.tab);
    pres.check_degree(q.degree(), "strata zero test");
    Poly e1 = elementary_symmetric(pres.tab, {kT[0], kT[1], kT[2]}, 1);
    Poly e3 = elementary_symmetric(pres.tab, {kT[0], kT[1], kT[2]}, 3);
    const std::array<std::array<int, 3>, 3> strata = {{{0, 2, 0}, {0, 1, 1}, {0, 0, 2}}};
    bool on_strata = true;
    for (const auto& s : strata) {
        IdealSpec ideal{pres.tab, {e1, mpz_class(2) * e3, linear_form(pres.tab, s, kT)}};
        StrongBasis basis = strong_groebner_basis(ideal, q.degree());
        if (!membership_checked(basis, ideal, q, OracleMode::both)) on_strata = false;
    }
    IdealSpec ring_ideal{pres.tab, {e1, mpz_class(2) * e3}};
    StrongBasis ring_basis = strong_groebner_basis(ring_ideal, q.degree());
    const bool in_ring = membership_checked(ring_basis, ring_ideal, q, OracleMode::both);
    if (on_strata != in_ring)
        throw EngineInconsistency("strata restrictions disagree with the ring relations");
    return on_strata;
}

std::vector<Poly> chern_twist(const std::vector<Poly>& c, const Poly& lambda) {
    const int r = static_cast<int>(c.size());
    if (r < 1 || r > 3) throw UsageError("chern_twist supports ranks 1 to 3");
    TablePtr tab = lambda.table();
    if (!tab) throw UsageError("chern_twist needs an attached twisting class");
    auto binom = [](int n, int k) {
        if (k < 0 || k > n) return mpz_class(0);
        mpz_class out = 1;
        for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
        return out;
    };
    std::vector<Poly> lpow = {Poly::constant(tab, 1)};
    for (int i = 1; i <= r; ++i) lpow.push_back(lpow.back() * lambda);
    std::vector<Poly> out;
    for (int i = 1; i <= r; ++i) {
        Poly ci = Poly::zero(tab);
        for (int j = 0; j <= i; ++j) {
            Poly cj = j == 0 ? Poly::constant(tab, 1) : transport(c[j - 1], tab);
            ci += binom(r - j, i - j) * (cj * lpow[i - j]);
        }
        out.push_back(ci);
    }
    return out;
}

int regular_rep_c1(int n) {
    if (n < 1) throw UsageError("regular_rep_c1 needs n >= 1");
    const int direct = static_cast<int>((static_cast<long>(n) * (n - 1) / 2) % n);
    const int parity = n % 2 == 0 ? n / 2 : 0;
    if (direct != parity)
        throw EngineInconsistency("regular representation weight sum defies its parity form");
    return direct;
}

namespace {

// x-adic product of (1 - (k.t) x) over the given multi-indices, to length n.
std::vector<Poly> hyperplane_series(const TablePtr& tab, int degree, size_t n) {
    std::vector<Poly> acc(n, Poly::zero(tab));
    acc[0] = Poly::constant(tab, 1);
    if (degree < 0) return acc;
    for (const auto& k : compositions3(degree)) {
        const Poly kt = linear_form(tab, k, kT);
        for (size_t i = n; i-- > 1;) acc[i] -= kt * acc[i - 1];
    }
    return acc;
}

}  // namespace

Poly canonical_chern_form(const Poly& p_in_e, const TablePtr& ctab, const std::string& e2,
                          const std::string& e3, const std::string& c2, const std::string& c3) {
    const TablePtr src = p_in_e.table();
    if (!src) throw UsageError("canonical form of a detached polynomial");
    std::map<std::string, Poly> images;
    for (int i = 0; i < src->size(); ++i) {
        const std::string& nm = src->name(i);
        if (nm == "e1")
            images[nm] = Poly::zero(ctab);
        else if (nm == e2)
            images[nm] = Poly::variable(ctab, c2);
        else if (nm == e3)
            images[nm] = -Poly::variable(ctab, c3);
        else
            images[nm] = Poly::variable(ctab, nm);
    }
    Poly q = p_in_e.substitute(images);
    const int c3_idx = ctab->index_of(c3);
    Poly out = Poly::zero(ctab);
    for (const auto& [m, c] : q.terms()) {
        if (c3_idx >= 0 && m[c3_idx] > 0) {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), 2);
            if (r != 0) out.add_term(m, r);
        } else {
            out.add_term(m, c);
        }
    }
    return out;
}

VaChern chern_Va(int a) {
    if (a < 1) throw UsageError("chern_Va needs a >= 1");
    VaChern va;
    va.a = a;
    va.torus_tab = pv_torus_table(a);
    const size_t n = static_cast<size_t>(2 * a + 6);
    std::vector<Poly> num = hyperplane_series(va.torus_tab, a, n);
    std::vector<Poly> den = hyperplane_series(va.torus_tab, a - 2, n);
    // divide degree by degree: num = den * x, den starts with 1
    std::vector<Poly> x(n, Poly::zero(va.torus_tab));
    for (size_t i = 0; i < n; ++i) {
        Poly v = num[i];
        for (size_t j = 1; j <= i; ++j) v -= den[j] * x[i - j];
        x[i] = std::move(v);
    }

    Poly e1 = elementary_symmetric(va.torus_tab, {kT[0], kT[1], kT[2]}, 1);
    Poly e3 = elementary_symmetric(va.torus_tab, {kT[0], kT[1], kT[2]}, 3);
    IdealSpec trunc{va.torus_tab, {e1, mpz_class(2) * e3}};
    StrongBasis trunc_basis = strong_groebner_basis(trunc, static_cast<int>(n));
    for (size_t i = 2 * a + 2; i < n; ++i)
        if (!membership_checked(trunc_basis, trunc, x[i], OracleMode::both))
            throw EngineInconsistency("catalog inconsistency: series term beyond the rank survives");

    va.ctab = make_table({{xi_name_for(a), 1}, {"c2", 2}, {"c3", 3}});
    Poly xi_t = Poly::variable(va.torus_tab, xi_name_for(a));
    Poly xi_c = Poly::variable(va.ctab, xi_name_for(a));
    va.pa_torus = Poly::zero(va.torus_tab);
    va.pa = Poly::zero(va.ctab);
    auto xipow = [](const Poly& xi, int e) {
        Poly out = Poly::constant(xi.table(), 1);
        for (int i = 0; i < e; ++i) out = out * xi;
        return out;
    };
    va.pa_torus += xipow(xi_t, 2 * a + 1);
    va.pa += xipow(xi_c, 2 * a + 1);
    for (int i = 1; i <= 2 * a + 1; ++i) {
        const Poly& ct = x[static_cast<size_t>(i)];
        va.chern_torus.push_back(ct);
        SymmetricDecomposition dec = symmetric_decompose(ct, {kT[0], kT[1], kT[2]}, "e");
        for (const auto& [key, comp] : dec.components)
            if (key != std::vector<int>{0, 0, 0} && !comp.is_zero())
                throw EngineInconsistency("catalog inconsistency: Chern class is not symmetric");
        Poly eform = Poly::zero(dec.out_tab);
        auto it = dec.components.find({0, 0, 0});
        if (it != dec.components.end()) eform = it->second;
        Poly cform = canonical_chern_form(eform, va.ctab);
        va.chern.push_back(cform);
        va.pa_torus += ct * xipow(xi_t, 2 * a + 1 - i);
        va.pa += cform * xipow(xi_c, 2 * a + 1 - i);
    }
    if (!va.chern[0].is_zero())
        throw EngineInconsistency("catalog inconsistency: first Chern class survives descent");
    if (a == 1 && va.pa != parse_poly(va.ctab, "xi2^3+c2*xi2+c3"))
        throw EngineInconsistency("catalog inconsistency: degree-one calibration failed");
    return va;
}

Poly pa_polynomial(int a, const std::string& xi_name) {
    VaChern va = chern_Va(a);
    const std::string def = xi_name_for(a);
    if (xi_name.empty() || xi_name == def) return va.pa;
    TablePtr tab = make_table({{xi_name, 1}, {"c2", 2}, {"c3", 3}});
    return va.pa.substitute({{def, Poly::variable(tab, xi_name)},
                             {"c2", Poly::variable(tab, "c2")},
                             {"c3", Poly::variable(tab, "c3")}});
}

}  // namespace chow
