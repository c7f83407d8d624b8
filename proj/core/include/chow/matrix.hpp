#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace chow {

// Dense integer matrix, row-major.
struct ZMat {
    int rows = 0, cols = 0;
    std::vector<mpz_class> a;

    ZMat() = default;
    ZMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    mpz_class& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const mpz_class& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Nonzero diagonal of the Smith normal form: positive, each dividing the next.
std::vector<mpz_class> smith_invariants(ZMat m);

// Column Hermite form of m (column operations only; column span preserved).
// Columns are arranged so pivot rows strictly increase; zero columns dropped.
ZMat column_hermite(ZMat m);

// Does v lie in the lattice spanned by the columns of m?
bool lattice_contains(const ZMat& m, const std::vector<mpz_class>& v);

// Solve m x = v over the integers; empty result when no solution exists.
// The returned witness is one solution (not unique in general).
bool lattice_solve(const ZMat& m, const std::vector<mpz_class>& v, std::vector<mpz_class>& x);

}  // namespace chow
