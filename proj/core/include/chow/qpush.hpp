#pragma once

#include <utility>
#include <vector>

#include "chow/poly.hpp"

namespace chow {

// Formal class of degree <= 2 on a product of projective-line powers: a
// rational combination of 1, tau_i, tau_i*tau_j and c2, with tau_i^2
// rewritten as -c2 on the spot.  Degree 3 or higher is refused; the rational
// shortcut is only justified in low degrees.
class QTauExpr {
public:
    using Key = std::pair<std::vector<int>, int>;  // sorted distinct tau ids, c2 power

    static QTauExpr zero() { return {}; }
    static QTauExpr one();
    static QTauExpr c2();
    static QTauExpr tau(int i);

    QTauExpr operator+(const QTauExpr& o) const;
    QTauExpr operator-(const QTauExpr& o) const;
    QTauExpr operator*(const QTauExpr& o) const;
    QTauExpr scaled(const mpq_class& q) const;

    const std::map<Key, mpq_class>& terms() const { return terms_; }

private:
    void add(const Key& k, const mpq_class& v);
    std::map<Key, mpq_class> terms_;
};

// Full symmetrization pushforward on a product of blocks, the b-th a power of
// the projective line of exponent block_sizes[b] with hyperplane class
// xi_names[b] downstairs.  Per block of size m:
//   1            -> m!
//   tau_i        -> 2 (m-1)! xi
//   tau_i tau_j  -> 4 (m-2)! xi^2 + m (m-2)! c2      (i != j, same block)
// and contributions of distinct blocks multiply.  c2 is pulled back from the
// target, so c2 factors pass through.  The result is always integral.
Poly rho_push(const QTauExpr& e, const std::vector<int>& block_sizes, const TablePtr& target,
              const std::vector<std::string>& xi_names, const std::string& c2_name);

// Exact division by an integer prefactor; any remaining denominator is a hard
// error, because every pushforward in the catalog is an integral class.
Poly exact_divide(const Poly& p, const mpz_class& denom);

}  // namespace chow
