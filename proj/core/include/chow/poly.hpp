#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chow/vartable.hpp"

namespace chow {

// Exponent vector; size always equals the table size.
using Mono = std::vector<int>;

int wdeg(const VariableTable& tab, const Mono& m);

// Weighted graded reverse lexicographic order: higher weighted degree wins;
// on ties the monomial whose trailing exponent difference is negative is the
// larger one.  Variables earlier in the table have higher precedence.
bool mono_greater(const VariableTable& tab, const Mono& a, const Mono& b);

bool mono_divides(const Mono& a, const Mono& b);  // a | b componentwise
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);  // requires b | a
Mono mono_lcm(const Mono& a, const Mono& b);
std::string mono_to_string(const VariableTable& tab, const Mono& m);

struct MonoCmp {
    const VariableTable* tab = nullptr;
    // descending: leading monomial first
    bool operator()(const Mono& a, const Mono& b) const { return mono_greater(*tab, a, b); }
};

class Poly {
public:
    using TermMap = std::map<Mono, mpz_class, MonoCmp>;

    Poly() = default;  // detached null value; usable only as a placeholder

    static Poly zero(TablePtr tab);
    static Poly constant(TablePtr tab, const mpz_class& c);
    static Poly variable(TablePtr tab, const std::string& name);
    static Poly monomial(TablePtr tab, const Mono& m, const mpz_class& c);

    static Poly parse(TablePtr tab, const std::string& text);

    const TablePtr& table() const { return tab_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }

    const Mono& lead_mono() const;
    const mpz_class& lead_coeff() const;

    // max weighted degree over the support; -1 for zero
    int degree() const;
    bool is_homogeneous() const;
    // degree when homogeneous; nullopt otherwise (zero counts as every degree)
    std::optional<int> homogeneous_degree() const;

    // ascending degree, zero pieces omitted
    std::vector<std::pair<int, Poly>> graded_components() const;

    mpz_class coeff(const Mono& m) const;
    void add_term(const Mono& m, const mpz_class& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const mpz_class& c, Poly p);
    Poly mul_term(const Mono& m, const mpz_class& c) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Degree-preserving substitution: every variable occurring in this
    // polynomial must have an image homogeneous of that variable's weight.
    // All images must live in one common ring, which becomes the result ring.
    Poly substitute(const std::map<std::string, Poly>& images) const;

    std::string to_string() const;

private:
    explicit Poly(TablePtr tab);
    void check_compatible(const Poly& o, const char* op) const;

    TablePtr tab_;
    TermMap terms_;
};

Poly parse_poly(TablePtr tab, const std::string& text);

// By-name embedding into another ring; every variable occurring in p must
// exist in the target with the same weight.
Poly transport(const Poly& p, const TablePtr& target);

}  // namespace chow
