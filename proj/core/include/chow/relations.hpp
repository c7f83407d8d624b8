#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chow/poly.hpp"
#include "chow/presentation.hpp"

namespace chow {

// Ambient presentation the genus-g relations live in: for even g the
// polynomial ring over the classifying ring with variables
// (xi{2g}, b1, b2, gam), for odd g (xi{2g}, c2, c3, gam, t).
RingPresentation n1_ambient(int g);

// The relation list of the one-dimensional-base theorem at genus g, in the
// order derived: restriction, double-cover pushforwards, norm pushforwards,
// and finally the projective-bundle polynomial in factored form.
std::vector<Poly> build_relations_n1(int g);

// The quadratic factors of the factored projective-bundle polynomial; the
// first one is pinned to the diagonal class, the later ones admit a choice of
// gam^2-component encoded by the sweep bits (bit i-1 toggles factor i).
Poly n1_p_factorization(int g, std::uint32_t sweep_bits);

// Presented target ring of the genus-g theorem (variables without xi{2g}).
RingPresentation n1_target(int g);

// The thirteen printed generators of the split-locus theorem over
// Z[c1, c2, c3, xi{2a}, xi{2b}]; index 0 is the class c1 itself.
std::vector<Poly> build_relations_Dab(int a, int b);

// The same ideal with c1 removed structurally: twelve generators over the
// four-variable working ring (xi{2a}, xi{2b}, c2, c3).
std::vector<Poly> dab_printed(int a, int b);

// The pushforward ideal: 2*c3 together with the eleven images of the split
// covers, in the same working ring and a fixed order.
std::vector<Poly> dab_images(int a, int b);
std::vector<std::string> dab_image_labels(int a, int b);

// Local-at-2 generating set valid when a and b are both even.
std::vector<Poly> dab_even_local_generators(int a, int b);

// Relation list of the split-locus presentation for the a = 1 column, where
// the second cover of the first factor is undefined: 2*c3, both
// projective-bundle polynomials, and the ten remaining images.
std::vector<Poly> remark_a1_relations(int g);
TablePtr remark_a1_table(int g);

}  // namespace chow
