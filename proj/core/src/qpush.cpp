#include "chow/qpush.hpp"

#include <algorithm>

#include "chow/error.hpp"

namespace chow {

namespace {

int key_degree(const QTauExpr::Key& k) {
    return static_cast<int>(k.first.size()) + 2 * k.second;
}

mpz_class factorial(int n) {
    if (n < 0) throw UsageError("factorial of a negative number");
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

void QTauExpr::add(const Key& k, const mpq_class& v) {
    if (v == 0) return;
    auto [it, fresh] = terms_.emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

QTauExpr QTauExpr::one() {
    QTauExpr e;
    e.add({{}, 0}, 1);
    return e;
}

QTauExpr QTauExpr::c2() {
    QTauExpr e;
    e.add({{}, 1}, 1);
    return e;
}

QTauExpr QTauExpr::tau(int i) {
    if (i < 0) throw UsageError("negative point index");
    QTauExpr e;
    e.add({{i}, 0}, 1);
    return e;
}

QTauExpr QTauExpr::operator+(const QTauExpr& o) const {
    QTauExpr e = *this;
    for (const auto& [k, v] : o.terms_) e.add(k, v);
    return e;
}

QTauExpr QTauExpr::operator-(const QTauExpr& o) const {
    QTauExpr e = *this;
    for (const auto& [k, v] : o.terms_) e.add(k, -v);
    return e;
}

QTauExpr QTauExpr::operator*(const QTauExpr& o) const {
    QTauExpr out;
    for (const auto& [ka, va] : terms_)
        for (const auto& [kb, vb] : o.terms_) {
            if (key_degree(ka) + key_degree(kb) > 2)
                throw UsageError("rational route not justified beyond degree 2");
            // merge tau lists, rewriting squares as -c2
            std::vector<int> taus;
            taus.reserve(ka.first.size() + kb.first.size());
            taus.insert(taus.end(), ka.first.begin(), ka.first.end());
            taus.insert(taus.end(), kb.first.begin(), kb.first.end());
            std::sort(taus.begin(), taus.end());
            int c2pow = ka.second + kb.second;
            mpq_class coeff = va * vb;
            std::vector<int> reduced;
            for (size_t i = 0; i < taus.size();) {
                if (i + 1 < taus.size() && taus[i] == taus[i + 1]) {
                    coeff = -coeff;
                    ++c2pow;
                    i += 2;
                } else {
                    reduced.push_back(taus[i]);
                    ++i;
                }
            }
            out.add({std::move(reduced), c2pow}, coeff);
        }
    return out;
}

QTauExpr QTauExpr::scaled(const mpq_class& q) const {
    QTauExpr e;
    for (const auto& [k, v] : terms_) e.add(k, v * q);
    return e;
}

Poly rho_push(const QTauExpr& e, const std::vector<int>& block_sizes, const TablePtr& target,
              const std::vector<std::string>& xi_names, const std::string& c2_name) {
    if (block_sizes.size() != xi_names.size())
        throw UsageError("one hyperplane class name per block is required");
    const int nblocks = static_cast<int>(block_sizes.size());
    int total = 0;
    for (int m : block_sizes) {
        if (m < 1) throw UsageError("block sizes must be positive");
        total += m;
    }
    const Poly c2v = Poly::variable(target, c2_name);
    if (*c2v.homogeneous_degree() != 2) throw UsageError("'" + c2_name + "' must have weight 2");

    auto block_of = [&](int i) {
        int acc = 0;
        for (int b = 0; b < nblocks; ++b) {
            acc += block_sizes[b];
            if (i < acc) return b;
        }
        throw UsageError("point index out of range");
    };

    // numerators collected over a common denominator of 1: every per-block rule
    // is integral, so only the incoming rational coefficients matter
    std::map<Mono, mpq_class, MonoCmp> acc{MonoCmp{target.get()}};
    auto accumulate = [&](const Poly& p, const mpq_class& q) {
        for (const auto& [m, c] : p.terms()) {
            mpq_class add = q * mpq_class(c);
            auto [it, fresh] = acc.emplace(m, add);
            if (!fresh) {
                it->second += add;
                if (it->second == 0) acc.erase(it);
            }
        }
    };

    for (const auto& [key, q] : e.terms()) {
        const auto& taus = key.first;
        for (int i : taus)
            if (i >= total) throw UsageError("point index out of range");
        Poly factor = Poly::constant(target, 1);
        for (int b = 0; b < nblocks; ++b) {
            const int m = block_sizes[b];
            std::vector<int> mine;
            for (int i : taus)
                if (block_of(i) == b) mine.push_back(i);
            Poly xi = Poly::variable(target, xi_names[b]);
            if (*xi.homogeneous_degree() != 1)
                throw UsageError("'" + xi_names[b] + "' must have weight 1");
            if (mine.empty()) {
                factor = factorial(m) * factor;
            } else if (mine.size() == 1) {
                factor = factor * (2 * factorial(m - 1) * xi);
            } else {  // two distinct points in one block
                if (m < 2) throw UsageError("two points in a block of size one");
                factor = factor *
                         (4 * factorial(m - 2) * (xi * xi) + factorial(m - 2) * m * c2v);
            }
        }
        for (int k = 0; k < key.second; ++k) factor = factor * c2v;
        accumulate(factor, q);
    }

    Poly out = Poly::zero(target);
    for (const auto& [m, q] : acc) {
        if (q.get_den() != 1)
            throw EngineInconsistency("non-integral pushforward coefficient " + q.get_str() +
                                      " at " + mono_to_string(*target, m));
        out.add_term(m, q.get_num());
    }
    return out;
}

Poly exact_divide(const Poly& p, const mpz_class& denom) {
    if (denom == 0) throw UsageError("division by zero");
    Poly out = Poly::zero(p.table());
    for (const auto& [m, c] : p.terms()) {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), denom.get_mpz_t());
        if (r != 0)
            throw EngineInconsistency("pushforward prefactor " + denom.get_str() +
                                      " does not divide " + c.get_str() + " at " +
                                      mono_to_string(*p.table(), m));
        out.add_term(m, q);
    }
    return out;
}

}  // namespace chow
