#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "chow/poly.hpp"
#include "chow/presentation.hpp"

namespace chow {

// Named presentations of the Chow rings the scenarios work in.  Parameters
// (m, g, a, b) select the member of a family; unused parameters are rejected.
RingPresentation catalog_presentation(const std::string& id,
                                      const std::map<std::string, int>& params = {});

std::vector<std::string> catalog_presentation_ids();

// Named fundamental classes.  Each id fixes the ambient ring; `g` is the only
// parameter.  Ids ending in ".proof" are the alternative representatives used
// inside derivations; they agree with the statement form modulo (2*gam).
Poly class_formula(const std::string& id, int g);

std::vector<std::string> class_formula_ids();

// Closed form of [W_{m;r,0}] in the torus ring of ring.PV-torus(m):
//   r = 1 needs m >= 1, r = 2 needs m >= 2.
// The literal polynomial is returned unreduced so reports show its shape.
Poly w_class(int m, int r);

// Restriction of [W_{m;r,0}] to the stratum cut out by the multi-index i:
// the product of (xi - k.t) over |k| = m, k1 < r, k_j < i_j for some j.
Poly w_class_restriction(int m, int r, const std::array<int, 3>& stratum);

// Does p vanish on all three boundary strata of ring.PV-torus(m)?  Answered
// twice, from the per-stratum ideals and from the ring's own relations, and
// the two answers must agree.
bool strata_zero_test(const Poly& p, int m);

// Chern classes of E (x) L from those of E (rank <= 3) and c1(L) = lambda.
std::vector<Poly> chern_twist(const std::vector<Poly>& c, const Poly& lambda);

// First Chern class of the pushforward of the structure sheaf along a
// mu_n-torsor with classifying class of weight one: 0 for n odd, n/2 for even.
int regular_rep_c1(int n);

// Chern data of the bundle V_a (binary forms of degree 2a+1 twisted so that
// the PGL2-action is linear), resolved from the torus side.
struct VaChern {
    int a = 0;
    TablePtr torus_tab;             // (t1, t2, t3, xi{2a})
    std::vector<Poly> chern_torus;  // c_1 .. c_{2a+1}, symmetric in the t's
    TablePtr ctab;                  // (xi{2a}, c2, c3)
    std::vector<Poly> chern;        // same classes after descent to ctab
    Poly pa_torus;                  // sum c_i xi^{2a+1-i}, torus side
    Poly pa;                        // the same over ctab; monic of degree 2a+1
};

VaChern chern_Va(int a);

// Convenience: the projective-bundle polynomial p_a alone, over (xi, c2, c3)
// with the hyperplane variable named `xi_name` (defaults to xi{2a}).
Poly pa_polynomial(int a, const std::string& xi_name = "");

// Ambient rings of the two one-dimensional-base presentations and of the
// two-factor split locus; names collide only for a == b, where the second
// hyperplane class gets a "p" suffix.
TablePtr n1_ambient_table(int g);
std::pair<std::string, std::string> dab_xi_names(int a, int b);
TablePtr dab_working_table(int a, int b);

// Shared helpers for scenario code working on the torus side.
TablePtr pv_torus_table(int m);
Poly elementary_symmetric(const TablePtr& tab, const std::vector<std::string>& tvars, int k);
Poly linear_form(const TablePtr& tab, const std::array<int, 3>& k,
                 const std::array<std::string, 3>& tnames);

// Descent from the torus presentation to (c2, c3): e1 -> 0, e2 -> c2,
// e3 -> -c3, then coefficients of monomials containing c3 reduced mod 2.
// Sound in any ring containing (e1, 2*e3) respectively (2*c3).
Poly canonical_chern_form(const Poly& p_in_e, const TablePtr& ctab,
                          const std::string& e2 = "e2", const std::string& e3 = "e3",
                          const std::string& c2 = "c2", const std::string& c3 = "c3");

}  // namespace chow
