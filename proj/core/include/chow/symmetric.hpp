#pragma once

#include <map>
#include <string>
#include <vector>

#include "chow/groebner.hpp"
#include "chow/poly.hpp"

namespace chow {

// Result of writing p uniquely as sum_d t^d * q_d(c, aux) over the basis
// t1^d1 ... tn^dn with 0 <= di <= n-i, where ci stands for the i-th
// elementary symmetric polynomial of the t's.
struct SymmetricDecomposition {
    TablePtr out_tab;                        // auxiliaries first, then c1..cn
    std::map<std::vector<int>, Poly> components;  // t-exponent pattern -> coefficient
};

// Ring with the named t-variables replaced by c1..cn (weights 1..n).
TablePtr symmetric_out_table(const TablePtr& in, const std::vector<std::string>& tvars,
                             const std::string& cprefix = "c");

SymmetricDecomposition symmetric_decompose(const Poly& p, const std::vector<std::string>& tvars,
                                           const std::string& cprefix = "c");

// Substitutes each ci by the elementary symmetric polynomial in the t's,
// inverse to symmetric_decompose on components.
Poly symmetric_recompose(const SymmetricDecomposition& dec, const TablePtr& in,
                         const std::vector<std::string>& tvars);

// Componentwise congruence: every component of a-b lies in the modulus ideal
// (given over the decomposition's output ring).
// snf_window >= 0 restricts the lattice leg of mode `both` to components of at
// most that degree (see query_mode); negative means no restriction.
bool congruence_componentwise(const Poly& a, const Poly& b, const std::vector<std::string>& tvars,
                              const IdealSpec& modulus, OracleMode mode = OracleMode::both,
                              const std::string& cprefix = "c", int snf_window = -1);

}  // namespace chow
