#pragma once

#include <string>
#include <vector>

#include "chow/poly.hpp"

namespace chow {

// Isomorphism type of one graded piece of a quotient ring.
struct GradedGroup {
    int degree = 0;
    int free_rank = 0;
    std::vector<mpz_class> torsion;  // entries > 1, each dividing the next

    bool operator==(const GradedGroup& o) const {
        return degree == o.degree && free_rank == o.free_rank && torsion == o.torsion;
    }
    std::string to_string() const;
};

inline constexpr size_t kDefaultMonomialCap = 20000;

// Monomials of weighted degree d, largest first in the monomial order.
std::vector<Mono> monomials_of_degree(const VariableTable& tab, int d, size_t cap = kDefaultMonomialCap);

// Degree-d piece of tab modulo the homogeneous relations, as an abelian group.
GradedGroup graded_piece_group(const TablePtr& tab, const std::vector<Poly>& relations, int d,
                               size_t cap = kDefaultMonomialCap);

// Membership of a homogeneous p in the span of monomial multiples of the
// relations at its own degree.  Independent of the Groebner route.
bool lattice_membership(const std::vector<Poly>& relations, const Poly& p,
                        size_t cap = kDefaultMonomialCap);

}  // namespace chow
