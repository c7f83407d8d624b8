#include "chow/relations.hpp"

#include "chow/catalog.hpp"
#include "chow/error.hpp"
#include "chow/pushforward.hpp"

namespace chow {

namespace {

std::string xi_of(int m) { return "xi" + std::to_string(2 * m); }

std::string num(long v) { return std::to_string(v); }

}  // namespace

RingPresentation n1_ambient(int g) {
    TablePtr tab = n1_ambient_table(g);
    if (g % 2 == 0)
        return RingPresentation{tab,
                                {parse_poly(tab, "2gam"), parse_poly(tab, "gam^2+gam*b1")},
                                std::nullopt};
    return RingPresentation{tab,
                            {parse_poly(tab, "2gam"), parse_poly(tab, "gam^3+c2*gam+c3"),
                             parse_poly(tab, "2c3")},
                            std::nullopt};
}

Poly n1_p_factorization(int g, std::uint32_t sweep_bits) {
    if (g < 2) throw UsageError("genus must be at least 2");
    if (g >= 32 || (sweep_bits >> (g - 1)) != 0)
        throw UsageError("sweep bits outside the admissible lifts");
    TablePtr tab = n1_ambient_table(g);
    const std::string xi = xi_of(g);
    Poly out;
    if (g % 2 == 0) {
        out = parse_poly(tab, xi + "-" + num(g) + "*b1");
        for (int i = 0; i < g; ++i) {
            std::string q = xi + "^2+(gam-" + num(2 * g) + "*b1)" + xi + "+" +
                            num(static_cast<long>(i) * (2 * g - i)) + "*b1^2+" +
                            num(static_cast<long>(2 * g - 2 * i) * (2 * g - 2 * i)) + "*b2";
            if (i >= 1 && ((sweep_bits >> (i - 1)) & 1u)) q += "+gam^2";
            out = out * parse_poly(tab, q);
        }
    } else {
        out = parse_poly(tab, xi);
        for (int i = 0; i < g; ++i) {
            std::string q = xi + "^2+gam*" + xi + "+" +
                            num(static_cast<long>(g - i) * (g - i)) + "*c2";
            if (i == 0)
                q += "+gam^2";
            else if ((sweep_bits >> (i - 1)) & 1u)
                q += "+gam^2";
            out = out * parse_poly(tab, q);
        }
    }
    return out;
}

std::vector<Poly> build_relations_n1(int g) {
    if (g < 2) throw UsageError("genus must be at least 2");
    TablePtr tab = n1_ambient_table(g);
    const std::string xi = xi_of(g);
    const std::string sg = num(g);
    std::vector<Poly> rels;
    if (g % 2 == 0) {
        rels.push_back(parse_poly(tab, xi + "-" + num(g - 1) + "*b1-gam"));
        rels.push_back(parse_poly(tab, "2" + xi + "-" + num(2 * g) + "*b1"));
        rels.push_back(transport(class_formula("uD11.even", g), tab));
        rels.push_back(transport(class_formula("i1alpha.even", g), tab));
        PushforwardTable pi1 = push_table("pi1.even", g);
        rels.push_back(pi1.rules[0].second);
        rels.push_back(pi1.rules[1].second);
    } else {
        rels.push_back(parse_poly(tab, xi + "+2t+gam"));
        rels.push_back(transport(class_formula("uD1.odd", g), tab));
        rels.push_back(transport(class_formula("uD11.odd", g), tab));
        rels.push_back(parse_poly(tab, "2*" + sg + "*c2"));
        PushforwardTable pi1 = push_table("pi1.odd", g);
        rels.push_back(pi1.rules[0].second);
        rels.push_back(pi1.rules[1].second);
        rels.push_back(push_table("pi2.odd", g).rules[0].second);
    }
    rels.push_back(n1_p_factorization(g, 0));
    return rels;
}

RingPresentation n1_target(int g) {
    if (g < 2) throw UsageError("genus must be at least 2");
    if (g % 2 == 0)
        return make_presentation({{"b1", 1}, {"b2", 2}, {"gam", 1}},
                                 {"2b1", "2gam", num(4 * g) + "*b2", "gam^2+gam*b1",
                                  "b1^2+b1*gam"});
    return make_presentation({{"c2", 2}, {"t", 1}, {"gam", 1}},
                             {"2gam", "4t", "gam^2+" + num(g) + "*c2"});
}

std::vector<Poly> build_relations_Dab(int a, int b) {
    if (a < 2 || b < a) throw UsageError("the split-locus theorem needs 2 <= a <= b");
    auto [xa, xb] = dab_xi_names(a, b);
    TablePtr tab =
        make_table({{"c1", 1}, {"c2", 2}, {"c3", 3}, {xa, 1}, {xb, 1}});
    const std::string sa = num(a), sb = num(b);
    auto quartic = [&](const std::string& x, long r) {
        return x + "^4+c2*" + x + "^2+c3*" + x + "+" + num(3 * r * r * (r - 1) * (r - 1)) +
               "*c2^2";
    };
    std::vector<std::string> rels = {
        "c1",
        "2c3",
        num(2 * (2 * a - 1)) + xa,
        "2" + xa + "^2-" + num(static_cast<long>(a) * (2 * a - 2)) + "*c2",
        quartic(xa, a),
        num(2 * (2 * b - 1)) + xb,
        "2" + xb + "^2-" + num(static_cast<long>(b) * (2 * b - 2)) + "*c2",
        quartic(xb, b),
        num(2 * b) + xa + "+" + num(2 * a) + xb,
        "2" + xa + "*" + xb + "-" + num(2L * a * b) + "*c2",
        num((2L * a - 1) * (2 * b - 1)) + xa + "*" + xb + "+" + num(static_cast<long>(b) * (2 * b - 1)) +
            xa + "^2+" + num(static_cast<long>(a) * (2 * a - 1)) + xb + "^2+" +
            num(static_cast<long>(a) * b * (a + b - 1)) + "*c2",
        xa + "*" + xb + "*(" + xa + "+" + xb + ")+c2*(" + sb + xa + "+" + sa + xb +
            ")+c2*(" + num(static_cast<long>(b) * b) + xa + "+" + num(static_cast<long>(a) * a) + xb +
            ")-" + num(static_cast<long>(a) * b) + "*c3",
        xa + "^2*" + xb + "^2+c2*(" + num(static_cast<long>(b) * b) + xa + "^2+" +
            num(static_cast<long>(a) * a) + xb + "^2)-c2*(" + num(static_cast<long>(b) * (2 * b - 1)) +
            xa + "^2+" + num(static_cast<long>(a) * (2 * a - 1)) + xb + "^2)-" +
            num((2L * a - 1) * (2 * b - 1)) + "*c2*" + xa + "*" + xb + "+c3*(" + sb + xa +
            // the constant is (ab)^2 c2^2 - ab(a+b-1) c2^2, matching the
            // extraction alpha0 - c2*alpha2; the ab c2^2 variant differs by
            // ab(ab-1) c2^2, which is not in the pushforward ideal for odd b
            "+" + sa + xb + ")+" + num(static_cast<long>(a) * a * b * b) + "*c2^2-" +
            num(static_cast<long>(a) * b * (a + b - 1)) + "*c2^2",
    };
    std::vector<Poly> out;
    out.reserve(rels.size());
    for (const auto& r : rels) out.push_back(parse_poly(tab, r));
    return out;
}

std::vector<Poly> dab_printed(int a, int b) {
    std::vector<Poly> full = build_relations_Dab(a, b);
    TablePtr work = dab_working_table(a, b);
    std::vector<Poly> out;
    for (size_t i = 1; i < full.size(); ++i) out.push_back(transport(full[i], work));
    return out;
}

std::vector<Poly> dab_images(int a, int b) {
    if (a < 2 || b < a) throw UsageError("the pushforward ideal needs 2 <= a <= b");
    TablePtr work = dab_working_table(a, b);
    std::vector<Poly> out = {parse_poly(work, "2c3")};
    for (const char* id : {"F1", "F2", "G1", "G2", "M1", "M2"}) {
        PushforwardTable t = push_table(id, a, b);
        for (const auto& [in, img] : t.rules) {
            (void)in;
            out.push_back(img);
        }
    }
    return out;
}

std::vector<std::string> dab_image_labels(int a, int b) {
    (void)a;
    (void)b;
    return {"2c3",    "F1.one", "F1.tau", "F2.xi2sq", "G1.one", "G1.tau",
            "G2.xi2sq", "M1.one", "M1.tau", "M2.one",   "M2.xi2", "M2.xi2sq"};
}

std::vector<Poly> dab_even_local_generators(int a, int b) {
    if (a < 2 || b < a || a % 2 || b % 2)
        throw UsageError("the local-at-2 generating set needs even 2 <= a <= b");
    auto [xa, xb] = dab_xi_names(a, b);
    TablePtr work = dab_working_table(a, b);
    std::vector<std::string> rels = {
        "2" + xa,
        "2" + xb,
        num(2 * a) + "*c2",
        num(2 * b) + "*c2",
        xa + "^4+c2*" + xa + "^2+c3*" + xa,
        xb + "^4+c2*" + xb + "^2+c3*" + xb,
        xa + "*" + xb,
    };
    std::vector<Poly> out;
    for (const auto& r : rels) out.push_back(parse_poly(work, r));
    return out;
}

TablePtr remark_a1_table(int g) {
    if (g < 3 || g % 2 == 0) throw UsageError("the a = 1 remark needs odd g >= 3");
    return dab_working_table(1, g);
}

std::vector<Poly> remark_a1_relations(int g) {
    TablePtr work = remark_a1_table(g);
    std::vector<Poly> out = {parse_poly(work, "2c3"),
                             transport(pa_polynomial(1), work),
                             transport(pa_polynomial(g), work)};
    for (const char* id : {"F1", "G1", "G2", "M1", "M2"}) {
        PushforwardTable t = push_table(id, 1, g);
        for (const auto& [in, img] : t.rules) {
            (void)in;
            out.push_back(img);
        }
    }
    return out;
}

}  // namespace chow
