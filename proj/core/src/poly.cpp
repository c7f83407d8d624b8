#include "chow/poly.hpp"

#include <cctype>
#include <sstream>

#include "chow/error.hpp"

namespace chow {

int wdeg(const VariableTable& tab, const Mono& m) {
    int d = 0;
    for (int i = 0; i < tab.size(); ++i) d += tab.weight(i) * m[i];
    return d;
}

bool mono_greater(const VariableTable& tab, const Mono& a, const Mono& b) {
    int da = wdeg(tab, a), db = wdeg(tab, b);
    if (da != db) return da > db;
    for (int i = tab.size() - 1; i >= 0; --i) {
        int diff = a[i] - b[i];
        if (diff != 0) return diff < 0;
    }
    return false;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw EngineInconsistency("monomial division with negative exponent");
    }
    return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

std::string mono_to_string(const VariableTable& tab, const Mono& m) {
    std::string out;
    for (int i = 0; i < tab.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += tab.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

Poly::Poly(TablePtr tab) : tab_(std::move(tab)), terms_(MonoCmp{tab_.get()}) {}

Poly Poly::zero(TablePtr tab) { return Poly(std::move(tab)); }

Poly Poly::constant(TablePtr tab, const mpz_class& c) {
    Poly p(std::move(tab));
    if (c != 0) p.terms_.emplace(Mono(p.tab_->size(), 0), c);
    return p;
}

Poly Poly::variable(TablePtr tab, const std::string& name) {
    int i = tab->index_of(name);
    if (i < 0) throw UsageError("unknown variable '" + name + "'");
    Poly p(std::move(tab));
    Mono m(p.tab_->size(), 0);
    m[i] = 1;
    p.terms_.emplace(std::move(m), mpz_class(1));
    return p;
}

Poly Poly::monomial(TablePtr tab, const Mono& m, const mpz_class& c) {
    Poly p(std::move(tab));
    if (static_cast<int>(m.size()) != p.tab_->size())
        throw UsageError("exponent vector length does not match ring");
    for (int e : m)
        if (e < 0) throw UsageError("negative exponent");
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

const Mono& Poly::lead_mono() const {
    if (terms_.empty()) throw UsageError("leading monomial of zero");
    return terms_.begin()->first;
}

const mpz_class& Poly::lead_coeff() const {
    if (terms_.empty()) throw UsageError("leading coefficient of zero");
    return terms_.begin()->second;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return wdeg(*tab_, terms_.begin()->first);
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = wdeg(*tab_, terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (wdeg(*tab_, m) != d) return false;
    return true;
}

std::optional<int> Poly::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return degree();
}

std::vector<std::pair<int, Poly>> Poly::graded_components() const {
    std::map<int, Poly> buckets;
    for (const auto& [m, c] : terms_) {
        int d = wdeg(*tab_, m);
        auto it = buckets.find(d);
        if (it == buckets.end()) it = buckets.emplace(d, Poly(tab_)).first;
        it->second.terms_.emplace(m, c);
    }
    std::vector<std::pair<int, Poly>> out;
    out.reserve(buckets.size());
    for (auto& [d, p] : buckets) out.emplace_back(d, std::move(p));
    return out;
}

mpz_class Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void Poly::add_term(const Mono& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o, const char* op) const {
    if (!tab_ || !o.tab_) throw UsageError(std::string("operation '") + op + "' on detached polynomial");
    if (!same_table(tab_, o.tab_))
        throw UsageError(std::string("incompatible rings in '") + op + "': " + tab_->to_string() +
                         " vs " + o.tab_->to_string());
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o, "+");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o, "-");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b, "*");
    Poly r(a.tab_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly operator*(const mpz_class& c, Poly p) {
    if (c == 0) return Poly::zero(p.tab_);
    for (auto& [m, v] : p.terms_) v *= c;
    return p;
}

Poly Poly::mul_term(const Mono& m, const mpz_class& c) const {
    Poly r(tab_);
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mono_mul(mm, m), cc * c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_table(tab_, o.tab_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

Poly Poly::substitute(const std::map<std::string, Poly>& images) const {
    if (!tab_) throw UsageError("substitute on detached polynomial");
    TablePtr target;
    for (const auto& [name, img] : images) {
        if (!img.table()) throw UsageError("detached image for variable '" + name + "'");
        if (!target)
            target = img.table();
        else if (!same_table(target, img.table()))
            throw UsageError("substitution images live in different rings");
    }
    if (!target) target = tab_;

    // per-variable image lookup, validated lazily on first occurrence
    std::vector<const Poly*> image_of(tab_->size(), nullptr);
    std::vector<std::vector<Poly>> powers(tab_->size());

    Poly out = Poly::zero(target);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(target, c);
        for (int i = 0; i < tab_->size(); ++i) {
            if (m[i] == 0) continue;
            if (!image_of[i]) {
                auto it = images.find(tab_->name(i));
                if (it == images.end())
                    throw UsageError("missing image for variable '" + tab_->name(i) + "'");
                const Poly& img = it->second;
                if (!img.is_zero()) {
                    auto hd = img.homogeneous_degree();
                    if (!hd || *hd != tab_->weight(i))
                        throw UsageError("image for variable '" + tab_->name(i) +
                                         "' is not homogeneous of weight " +
                                         std::to_string(tab_->weight(i)));
                }
                image_of[i] = &it->second;
                powers[i] = {Poly::constant(target, 1)};
            }
            while (static_cast<int>(powers[i].size()) <= m[i])
                powers[i].push_back(powers[i].back() * (*image_of[i]));
            term = term * powers[i][m[i]];
        }
        out += term;
    }
    return out;
}

std::string Poly::to_string() const {
    if (!tab_) return "<detached>";
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpz_class a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool trivial_mono = true;
        for (int e : m)
            if (e) trivial_mono = false;
        if (trivial_mono) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << mono_to_string(*tab_, m);
        }
    }
    return os.str();
}

namespace {

struct Token {
    enum Kind { Int, Name, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) return {Token::End, ""};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Token::Int, s_.substr(start, pos_ - start)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Token::Name, s_.substr(start, pos_ - start)};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Plus, "+"};
            case '-': return {Token::Minus, "-"};
            case '*': return {Token::Star, "*"};
            case '^': return {Token::Caret, "^"};
            case '(': return {Token::LParen, "("};
            case ')': return {Token::RParen, ")"};
        }
        throw UsageError(std::string("unexpected character '") + c + "' in polynomial");
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

class Parser {
public:
    Parser(TablePtr tab, const std::string& text) : tab_(std::move(tab)), lex_(text) { advance(); }

    Poly run() {
        Poly p = expr();
        if (cur_.kind != Token::End) throw UsageError("trailing input in polynomial: '" + cur_.text + "'");
        return p;
    }

private:
    void advance() { cur_ = lex_.next(); }

    bool starts_factor() const {
        return cur_.kind == Token::Int || cur_.kind == Token::Name || cur_.kind == Token::LParen;
    }

    Poly expr() {
        bool neg = false;
        if (cur_.kind == Token::Plus) advance();
        else if (cur_.kind == Token::Minus) { neg = true; advance(); }
        Poly p = term();
        if (neg) p = -p;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool sub = cur_.kind == Token::Minus;
            advance();
            Poly q = term();
            if (sub) p -= q; else p += q;
        }
        return p;
    }

    // '*' is optional between juxtaposed factors
    Poly term() {
        Poly p = factor();
        for (;;) {
            if (cur_.kind == Token::Star) {
                advance();
                p = p * factor();
            } else if (starts_factor()) {
                p = p * factor();
            } else {
                return p;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        if (cur_.kind == Token::Caret) {
            advance();
            if (cur_.kind != Token::Int) throw UsageError("exponent must be a non-negative integer");
            long e = std::stol(cur_.text);
            advance();
            Poly r = Poly::constant(tab_, 1);
            for (long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    Poly atom() {
        switch (cur_.kind) {
            case Token::Int: {
                mpz_class v(cur_.text);
                advance();
                return Poly::constant(tab_, v);
            }
            case Token::Name: {
                std::string n = cur_.text;
                advance();
                return Poly::variable(tab_, n);
            }
            case Token::LParen: {
                advance();
                Poly p = expr();
                if (cur_.kind != Token::RParen) throw UsageError("missing ')' in polynomial");
                advance();
                return p;
            }
            default:
                throw UsageError("expected a number, variable or '(' in polynomial");
        }
    }

    TablePtr tab_;
    Lexer lex_;
    Token cur_;
};

}  // namespace

Poly Poly::parse(TablePtr tab, const std::string& text) { return Parser(std::move(tab), text).run(); }

Poly parse_poly(TablePtr tab, const std::string& text) { return Poly::parse(std::move(tab), text); }

Poly transport(const Poly& p, const TablePtr& target) {
    const TablePtr& src = p.table();
    if (!src) throw UsageError("transport of detached polynomial");
    if (same_table(src, target)) return p;
    std::vector<int> where(src->size(), -1);
    Poly out = Poly::zero(target);
    for (const auto& [m, c] : p.terms()) {
        Mono mm(target->size(), 0);
        for (int i = 0; i < src->size(); ++i) {
            if (m[i] == 0) continue;
            if (where[i] < 0) {
                where[i] = target->index_of(src->name(i));
                if (where[i] < 0)
                    throw UsageError("variable '" + src->name(i) + "' absent from target ring");
                if (target->weight(where[i]) != src->weight(i))
                    throw UsageError("variable '" + src->name(i) + "' changes weight");
            }
            mm[where[i]] = m[i];
        }
        out.add_term(mm, c);
    }
    return out;
}

}  // namespace chow
