#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chow/groebner.hpp"
#include "chow/poly.hpp"

namespace chow {

// Graded quotient ring Z[vars]/(relations), optionally trusted only up to a
// degree bound.  Operations that would need the presentation beyond its bound
// must refuse.
struct RingPresentation {
    TablePtr tab;
    std::vector<Poly> relations;
    std::optional<int> validity_bound;

    IdealSpec ideal() const { return IdealSpec{tab, relations}; }
    void check_degree(int d, const std::string& what) const;
};

RingPresentation make_presentation(std::vector<std::pair<std::string, int>> vars,
                                   const std::vector<std::string>& relations,
                                   std::optional<int> validity_bound = std::nullopt);

// Ring homomorphism given on generators.  Images must be homogeneous of the
// matching weight (checked by substitution) and must send relations into the
// target ideal (checked by check_ring_map).
struct RingMap {
    RingPresentation source;
    RingPresentation target;
    std::map<std::string, Poly> images;

    Poly apply(const Poly& p) const { return p.substitute(images); }
};

struct MapCheckResult {
    bool ok = false;
    std::string detail;
};

// Verifies degree preservation first, then membership of every mapped source
// relation in the target ideal.  A degree defect is reported before any
// membership work happens.
MapCheckResult check_ring_map(const RingMap& map, OracleMode mode = OracleMode::both);

struct QuotientCompareResult {
    bool isomorphic = false;
    std::string detail;
    std::vector<std::pair<GradedGroup, GradedGroup>> groups;  // source, target per degree
};

// Decides whether map induces an isomorphism of the two quotients in degrees
// 1..dmax: equal graded groups plus degreewise surjectivity of the map.  A
// surjection between isomorphic finitely generated groups is bijective.
QuotientCompareResult quotient_compare(const RingMap& map, int dmax,
                                       OracleMode mode = OracleMode::both,
                                       size_t cap = kDefaultMonomialCap);

// Adjoins a fresh weight-1 variable t and the sign-normalized relation
// c1L - n*t.  c1L must be homogeneous of degree 1 in the base ring.
RingPresentation root_gerbe(const RingPresentation& base, const Poly& c1L, int n,
                            std::string* fresh_name = nullptr);

}  // namespace chow
