#pragma once

#include <string>
#include <vector>

#include "chow/graded.hpp"
#include "chow/poly.hpp"

namespace chow {

struct IdealSpec {
    TablePtr tab;
    std::vector<Poly> gens;
};

// Basis element with an exact expression in terms of the original generators:
// p == sum_i cof[i] * gens[i].
struct GBElem {
    Poly p;
    std::vector<Poly> cof;
};

// Strong Groebner basis over the integers, complete for all S- and G-pairs of
// weighted degree up to cap.  For homogeneous input this decides membership
// for every polynomial of degree <= cap.
struct StrongBasis {
    TablePtr tab;
    std::vector<Poly> gens;
    std::vector<GBElem> elems;
    int cap = 0;
};

StrongBasis strong_groebner_basis(const IdealSpec& ideal, int degree_cap);

// Euclidean normal form against the basis.  Deterministic and idempotent.
// When gen_cofs is given it receives polynomials with
// p == NF(p) + sum_i gen_cofs[i] * basis.gens[i].
Poly normal_form(const StrongBasis& basis, const Poly& p, std::vector<Poly>* gen_cofs = nullptr);

struct Certificate {
    std::vector<Poly> cofactors;  // aligned with the ideal's generators
};

struct ContainsResult {
    bool contained = false;
    Poly remainder;
    Certificate cert;  // exact and re-verified when contained
};

// Membership with certificate.  Every graded component of p must have degree
// <= basis.cap.
ContainsResult ideal_contains(const StrongBasis& basis, const Poly& p);
ContainsResult ideal_contains(const IdealSpec& ideal, const Poly& p);

// Re-reduce every S- and G-pair of the finished basis; true when all vanish.
bool verify_strong(const StrongBasis& basis);

enum class OracleMode { groebner, snf, both };

OracleMode oracle_mode_from_string(const std::string& s);
std::string to_string(OracleMode m);

struct IdealEqualResult {
    bool equal = false;
    std::string detail;  // human-readable witness for reports
};

// Mutual containment of generators.  With OracleMode::both every membership
// query is answered independently by the Groebner route and the lattice
// route; any disagreement is an EngineInconsistency.  When the verdict is
// positive the graded pieces of both quotients are compared up to dmax as a
// further consistency check (skipped for mode groebner).
IdealEqualResult ideal_equal(const IdealSpec& a, const IdealSpec& b, int dmax,
                             OracleMode mode = OracleMode::both,
                             size_t cap = kDefaultMonomialCap);

// One membership query answered by the routes selected by mode.
bool membership_checked(const StrongBasis& basis, const IdealSpec& ideal, const Poly& p,
                        OracleMode mode, size_t cap = kDefaultMonomialCap);

// Above the graded window the lattice oracle is out of contract; such queries
// ride the re-verified certificate route.
OracleMode query_mode(OracleMode mode, int deg, int window);

}  // namespace chow
