#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chow/poly.hpp"

namespace chow {

// Proper pushforward along one of the named covers, tabulated on monomials in
// the fiber variables and extended linearly over everything else.  Rules all
// shift degrees by the same amount (the relative dimension is fixed).
struct PushforwardTable {
    std::string id;
    TablePtr source;
    TablePtr target;
    std::vector<std::string> fiber_vars;
    std::vector<std::pair<Poly, Poly>> rules;  // fiber monomial -> image
};

// Tables keyed by id:
//   phi.even(g), phi.odd(g)    double cover of a projective space
//   mult.odd(g)                multiplication cover in the diagonal analysis
//   pi1.even(g), pi1.odd(g)    norm-type cover, first symmetrization
//   pi2.odd(g)                 second symmetrization (rule for xi^2 only)
//   F1(a), F2(a), G1(b), G2(b) per-factor covers of the split locus
//   M1(a, b), M2(a, b)         mixed covers of the split locus
PushforwardTable push_table(const std::string& id, int p1, int p2 = 0);

std::vector<std::string> push_table_ids();

// Writes p as a combination of fiber monomials with coefficients free of the
// fiber variables and applies the matching rule to each; a fiber monomial
// without a rule is an error.
Poly push_apply(const PushforwardTable& t, const Poly& p);

}  // namespace chow
