#include "chow/matrix.hpp"

#include <algorithm>
#include <utility>

#include "chow/error.hpp"

namespace chow {

namespace {

void swap_rows(ZMat& m, int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
}

void swap_cols(ZMat& m, int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
}

// row r -= q * row s
void row_submul(ZMat& m, int r, int s, const mpz_class& q) {
    if (q == 0) return;
    for (int c = 0; c < m.cols; ++c) m.at(r, c) -= q * m.at(s, c);
}

// col c -= q * col s
void col_submul(ZMat& m, int c, int s, const mpz_class& q) {
    if (q == 0) return;
    for (int r = 0; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, s);
}

}  // namespace

namespace {

// Unimodular row operations preserve the invariant factors, so a tall matrix
// can be compressed to at most `cols` nonzero rows before full elimination.
ZMat compress_rows(const ZMat& m) {
    ZMat t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    ZMat h = column_hermite(std::move(t));
    ZMat out(h.cols, m.cols);
    for (int r = 0; r < out.rows; ++r)
        for (int c = 0; c < out.cols; ++c) out.at(r, c) = h.at(c, r);
    return out;
}

}  // namespace

std::vector<mpz_class> smith_invariants(ZMat m) {
    if (m.rows > m.cols) m = compress_rows(m);
    else if (m.cols > m.rows) m = column_hermite(std::move(m));
    int bound = std::min(m.rows, m.cols);
    int t = 0;
    for (; t < bound; ++t) {
        int pr = -1, pc = -1;
        for (int r = t; r < m.rows; ++r)
            for (int c = t; c < m.cols; ++c)
                if (m.at(r, c) != 0 &&
                    (pr < 0 || mpz_cmpabs(m.at(r, c).get_mpz_t(), m.at(pr, pc).get_mpz_t()) < 0)) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (int r = t + 1; r < m.rows; ++r) {
                if (m.at(r, t) == 0) continue;
                mpz_class q = m.at(r, t) / m.at(t, t);
                row_submul(m, r, t, q);
                if (m.at(r, t) != 0) {
                    swap_rows(m, t, r);
                    settled = false;
                }
            }
            for (int c = t + 1; c < m.cols; ++c) {
                if (m.at(t, c) == 0) continue;
                mpz_class q = m.at(t, c) / m.at(t, t);
                col_submul(m, c, t, q);
                if (m.at(t, c) != 0) {
                    swap_cols(m, t, c);
                    settled = false;
                }
            }
            if (!settled) continue;
            // pivot now alone in its row and column; enforce divisibility
            for (int r = t + 1; r < m.rows && settled; ++r)
                for (int c = t + 1; c < m.cols && settled; ++c)
                    if (m.at(r, c) % m.at(t, t) != 0) {
                        for (int cc = t; cc < m.cols; ++cc) m.at(t, cc) += m.at(r, cc);
                        settled = false;
                    }
        }
    }

    std::vector<mpz_class> inv;
    inv.reserve(t);
    for (int i = 0; i < t; ++i) inv.push_back(abs(m.at(i, i)));
    for (size_t i = 1; i < inv.size(); ++i)
        if (inv[i] % inv[i - 1] != 0)
            throw EngineInconsistency("Smith form lost the divisibility chain");
    return inv;
}

namespace {

// Shared echelon driver; records column operations in u when given.
ZMat hermite_impl(ZMat m, ZMat* u) {
    if (u) {
        *u = ZMat(m.cols, m.cols);
        for (int i = 0; i < m.cols; ++i) u->at(i, i) = 1;
    }
    int pc = 0;
    for (int r = 0; r < m.rows && pc < m.cols; ++r) {
        for (;;) {
            int best = -1;
            for (int c = pc; c < m.cols; ++c)
                if (m.at(r, c) != 0 &&
                    (best < 0 || mpz_cmpabs(m.at(r, c).get_mpz_t(), m.at(r, best).get_mpz_t()) < 0))
                    best = c;
            if (best < 0) break;
            swap_cols(m, pc, best);
            if (u) swap_cols(*u, pc, best);
            bool clean = true;
            for (int c = pc + 1; c < m.cols; ++c) {
                if (m.at(r, c) == 0) continue;
                mpz_class q = m.at(r, c) / m.at(r, pc);
                col_submul(m, c, pc, q);
                if (u) col_submul(*u, c, pc, q);
                if (m.at(r, c) != 0) clean = false;
            }
            if (clean) {
                if (m.at(r, pc) < 0) {
                    for (int rr = 0; rr < m.rows; ++rr) m.at(rr, pc) = -m.at(rr, pc);
                    if (u)
                        for (int rr = 0; rr < m.cols; ++rr) u->at(rr, pc) = -u->at(rr, pc);
                }
                ++pc;
                break;
            }
        }
    }
    return m;
}

bool reduce_against(const ZMat& h, std::vector<mpz_class> v, std::vector<mpz_class>* coeffs) {
    if (coeffs) coeffs->assign(h.cols, 0);
    int j = 0;
    for (int r = 0; r < h.rows; ++r) {
        // column j is the next unused pivot column; its top nonzero row is >= r
        bool pivot_here = j < h.cols && h.at(r, j) != 0;
        if (pivot_here) {
            if (v[r] % h.at(r, j) != 0) return false;
            mpz_class q = v[r] / h.at(r, j);
            if (q != 0)
                for (int rr = r; rr < h.rows; ++rr) v[rr] -= q * h.at(rr, j);
            if (coeffs) (*coeffs)[j] = q;
            ++j;
        } else if (v[r] != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

ZMat column_hermite(ZMat m) {
    ZMat h = hermite_impl(std::move(m), nullptr);
    // drop trailing zero columns
    int keep = h.cols;
    while (keep > 0) {
        bool zero = true;
        for (int r = 0; r < h.rows && zero; ++r)
            if (h.at(r, keep - 1) != 0) zero = false;
        if (!zero) break;
        --keep;
    }
    ZMat out(h.rows, keep);
    for (int r = 0; r < h.rows; ++r)
        for (int c = 0; c < keep; ++c) out.at(r, c) = h.at(r, c);
    return out;
}

bool lattice_contains(const ZMat& m, const std::vector<mpz_class>& v) {
    if (static_cast<int>(v.size()) != m.rows) throw UsageError("vector length does not match matrix");
    ZMat h = hermite_impl(m, nullptr);
    return reduce_against(h, v, nullptr);
}

bool lattice_solve(const ZMat& m, const std::vector<mpz_class>& v, std::vector<mpz_class>& x) {
    if (static_cast<int>(v.size()) != m.rows) throw UsageError("vector length does not match matrix");
    ZMat u;
    ZMat h = hermite_impl(m, &u);
    std::vector<mpz_class> hx;
    if (!reduce_against(h, v, &hx)) return false;
    x.assign(m.cols, 0);
    for (int r = 0; r < m.cols; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (hx[c] != 0) x[r] += u.at(r, c) * hx[c];
    return true;
}

}  // namespace chow
