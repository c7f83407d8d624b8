#include "chow/pushforward.hpp"

#include <map>

#include "chow/catalog.hpp"
#include "chow/error.hpp"

namespace chow {

namespace {

std::string xi_of(int m) { return "xi" + std::to_string(2 * m); }

TablePtr even_fiber_table() {
    return make_table({{"xi1", 1}, {"b1", 1}, {"b2", 2}, {"gam", 1}});
}

TablePtr odd_fiber_table() {
    return make_table({{"tau", 1}, {"gam", 1}, {"c2", 2}, {"c3", 3}, {"t", 1}});
}

TablePtr odd_plane_table() {
    return make_table({{"xi2", 1}, {"gam", 1}, {"c2", 2}, {"c3", 3}, {"t", 1}});
}

TablePtr split_line_table() { return make_table({{"tau", 1}, {"c2", 2}, {"c3", 3}}); }

TablePtr split_plane_table() { return make_table({{"xi2", 1}, {"c2", 2}, {"c3", 3}}); }

void check_shifts(const PushforwardTable& t) {
    int shift = -1;
    for (const auto& [in, out] : t.rules) {
        if (out.is_zero()) continue;
        auto din = in.homogeneous_degree();
        auto dout = out.homogeneous_degree();
        if (!din || !dout)
            throw EngineInconsistency("catalog inconsistency: inhomogeneous pushforward rule");
        const int s = *dout - *din;
        if (shift < 0)
            shift = s;
        else if (s != shift)
            throw EngineInconsistency("catalog inconsistency: pushforward rules shift degrees unevenly");
    }
}

Poly mono_rule(const TablePtr& tab, const std::string& text) { return parse_poly(tab, text); }

}  // namespace

PushforwardTable push_table(const std::string& id, int p1, int p2) {
    PushforwardTable t;
    t.id = id;
    const int g = p1;
    const std::string sg = std::to_string(g);
    if (id == "phi.even") {
        if (g < 2 || g % 2) throw UsageError("phi.even needs even g >= 2");
        t.source = even_fiber_table();
        t.target = n1_ambient_table(g);
        t.fiber_vars = {"xi1"};
        t.rules = {{mono_rule(t.source, "1"), parse_poly(t.target, "2*" + sg)},
                   {mono_rule(t.source, "xi1"), parse_poly(t.target, xi_of(g))}};
    } else if (id == "phi.odd") {
        if (g < 3 || g % 2 == 0) throw UsageError("phi.odd needs odd g >= 3");
        t.source = odd_fiber_table();
        t.target = n1_ambient_table(g);
        t.fiber_vars = {"tau"};
        t.rules = {{mono_rule(t.source, "1"), parse_poly(t.target, "2*" + sg)},
                   {mono_rule(t.source, "tau"), parse_poly(t.target, "2" + xi_of(g))}};
    } else if (id == "mult.odd") {
        if (g < 3 || g % 2 == 0) throw UsageError("mult.odd needs odd g >= 3");
        t.source = odd_plane_table();
        t.target = n1_ambient_table(g);
        t.fiber_vars = {"xi2"};
        t.rules = {{mono_rule(t.source, "1"),
                    parse_poly(t.target, sg + "*(2*" + sg + "-1)")},
                   {mono_rule(t.source, "xi2"),
                    parse_poly(t.target, "(2*" + sg + "-1)" + xi_of(g))},
                   {mono_rule(t.source, "xi2^2"),
                    parse_poly(t.target, xi_of(g) + "^2-" + sg + "*(" + sg + "-1)*c2")}};
    } else if (id == "pi1.even") {
        if (g < 2 || g % 2) throw UsageError("pi1.even needs even g >= 2");
        t.source = even_fiber_table();
        t.target = n1_ambient_table(g);
        t.fiber_vars = {"xi1"};
        t.rules = {{mono_rule(t.source, "1"),
                    parse_poly(t.target, "2*(2*" + sg + "-1)" + xi_of(g) + "-2*" + sg +
                                             "*(2*" + sg + "-1)*b1")},
                   {mono_rule(t.source, "xi1"),
                    parse_poly(t.target, xi_of(g) + "^2-b1*" + xi_of(g) + "-2*" + sg +
                                             "*(2*" + sg + "-2)*b2")}};
    } else if (id == "pi1.odd") {
        if (g < 3 || g % 2 == 0) throw UsageError("pi1.odd needs odd g >= 3");
        t.source = odd_fiber_table();
        t.target = n1_ambient_table(g);
        t.fiber_vars = {"tau"};
        t.rules = {{mono_rule(t.source, "1"),
                    parse_poly(t.target, "2*(2*" + sg + "-1)" + xi_of(g))},
                   {mono_rule(t.source, "tau"),
                    parse_poly(t.target,
                               "2" + xi_of(g) + "^2-2*" + sg + "*(" + sg + "-1)*c2")}};
    } else if (id == "pi2.odd") {
        if (g < 3 || g % 2 == 0) throw UsageError("pi2.odd needs odd g >= 3");
        t.source = odd_plane_table();
        t.target = n1_ambient_table(g);
        t.fiber_vars = {"xi2"};
        const std::string x = xi_of(g);
        t.rules = {{mono_rule(t.source, "xi2^2"),
                    parse_poly(t.target, x + "^4+(c2+2*" + sg + "*(" + sg + "-1)*c2)" + x +
                                             "^2+c3*" + x + "+" + sg + "^2*(" + sg +
                                             "-1)^2*c2^2")}};
    } else if (id == "F1" || id == "G1" || id == "F2" || id == "G2" || id == "M1" ||
               id == "M2") {
        const int a = p1, b = p2;
        if (a < 1 || b < a) throw UsageError(id + " needs 1 <= a <= b");
        t.target = dab_working_table(a, b);
        auto [xa, xb] = dab_xi_names(a, b);
        const std::string sa = std::to_string(a), sb = std::to_string(b);
        const bool on_b = id[0] == 'G';
        const std::string x = on_b ? xb : xa;
        const std::string sr = on_b ? sb : sa;
        if (id == "F1" || id == "G1") {
            if (on_b ? b < 1 : a < 1) throw UsageError(id + " needs the factor degree >= 1");
            t.source = split_line_table();
            t.fiber_vars = {"tau"};
            t.rules = {{mono_rule(t.source, "1"),
                        parse_poly(t.target, "2*(2*" + sr + "-1)" + x)},
                       {mono_rule(t.source, "tau"),
                        parse_poly(t.target,
                                   "2" + x + "^2-2*" + sr + "*(" + sr + "-1)*c2")}};
        } else if (id == "F2" || id == "G2") {
            if (on_b ? b < 2 : a < 2)
                throw UsageError(id + " is undefined when the factor degree is 1");
            t.source = split_plane_table();
            t.fiber_vars = {"xi2"};
            t.rules = {{mono_rule(t.source, "xi2^2"),
                        parse_poly(t.target, x + "^4+(c2+2*" + sr + "*(" + sr + "-1)*c2)" +
                                                 x + "^2+c3*" + x + "+" + sr + "^2*(" + sr +
                                                 "-1)^2*c2^2")}};
        } else if (id == "M1") {
            t.source = split_line_table();
            t.fiber_vars = {"tau"};
            t.rules = {{mono_rule(t.source, "1"),
                        parse_poly(t.target, "2*" + sb + "*" + xa + "+2*" + sa + "*" + xb)},
                       {mono_rule(t.source, "tau"),
                        parse_poly(t.target,
                                   "2" + xa + "*" + xb + "-2*" + sa + "*" + sb + "*c2")}};
        } else {  // M2
            t.source = split_plane_table();
            t.fiber_vars = {"xi2"};
            const std::string A = xa, B = xb;
            const std::string a2 = "(2*" + sa + "-1)", b2 = "(2*" + sb + "-1)";
            const std::string alpha2 = a2 + b2 + A + "*" + B + "+" + sb + b2 + A + "^2+" +
                                       sa + a2 + B + "^2+" + sa + "*" + sb + "*(" + sa + "+" +
                                       sb + "-1)*c2";
            const std::string alpha1 = A + "*" + B + "*(" + b2 + A + "+" + a2 + B + ")+c2*(" +
                                       a2 + sb + "^2" + A + "+" + b2 + sa + "^2" + B + ")-" +
                                       a2 + b2 + "c2*(" + sb + A + "+" + sa + B + ")+" + sa +
                                       "*" + sb + "*c3";
            const std::string m2xi2 = A + "^2*" + B + "^2-c2*(" + sb + "*(" + sb + "-1)" + A +
                                      "^2+" + sa + "*(" + sa + "-1)" + B + "^2)-" + a2 + b2 +
                                      "c2*" + A + "*" + B + "+" + sa + "*" + sb + "*(" + sa +
                                      "*" + sb + "-" + sa + "-" + sb + "+1)*c2^2+c3*(" + sb +
                                      A + "+" + sa + B + ")";
            t.rules = {{mono_rule(t.source, "1"), parse_poly(t.target, alpha2)},
                       {mono_rule(t.source, "xi2"), parse_poly(t.target, alpha1)},
                       {mono_rule(t.source, "xi2^2"), parse_poly(t.target, m2xi2)}};
        }
    } else {
        throw UsageError("unknown pushforward table '" + id + "'");
    }
    check_shifts(t);
    return t;
}

std::vector<std::string> push_table_ids() {
    return {"phi.even", "phi.odd", "mult.odd", "pi1.even", "pi1.odd", "pi2.odd",
            "F1",       "F2",      "G1",       "G2",       "M1",      "M2"};
}

Poly push_apply(const PushforwardTable& t, const Poly& p) {
    const TablePtr& src = t.source;
    Poly q = transport(p, src);
    std::vector<int> fiber_idx;
    for (const auto& v : t.fiber_vars) {
        int i = src->index_of(v);
        if (i < 0) throw EngineInconsistency("catalog inconsistency: fiber variable missing");
        fiber_idx.push_back(i);
    }
    std::map<Mono, Poly> by_fiber;
    for (const auto& [m, c] : q.terms()) {
        Mono mf(src->size(), 0), mb = m;
        for (int i : fiber_idx) {
            mf[i] = m[i];
            mb[i] = 0;
        }
        auto it = by_fiber.find(mf);
        if (it == by_fiber.end()) it = by_fiber.emplace(mf, Poly::zero(src)).first;
        it->second.add_term(mb, c);
    }
    Poly out = Poly::zero(t.target);
    for (const auto& [mf, coeff] : by_fiber) {
        const Poly* image = nullptr;
        for (const auto& [in, img] : t.rules) {
            if (in.term_count() != 1 || in.lead_coeff() != 1)
                throw EngineInconsistency("catalog inconsistency: rule key is not a monomial");
            if (in.lead_mono() == mf) {
                image = &img;
                break;
            }
        }
        if (!image) {
            std::string what = mono_to_string(*src, mf);
            throw UsageError("no pushforward rule for fiber monomial " + what + " in " + t.id);
        }
        out += transport(coeff, t.target) * *image;
    }
    return out;
}

}  // namespace chow
