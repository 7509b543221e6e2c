#include "symalg/poly.hpp"

#include <algorithm>
#include <cctype>

namespace symalg {

Monomial::Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) { trim(); }

void Monomial::trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
    deg_ = 0;
    for (unsigned x : e_) deg_ += x;
}

Monomial Monomial::var(unsigned i, unsigned e) {
    if (i == 0) throw Error(ErrorCode::IndexOutOfRange, "variables are 1-based");
    std::vector<unsigned> v(i, 0);
    v[i - 1] = e;
    return Monomial(std::move(v));
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.resize(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += e_[i];
    for (std::size_t i = 0; i < o.e_.size(); ++i) r.e_[i] += o.e_[i];
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() > o.e_.size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw Error(ErrorCode::ArityMismatch, "monomial does not divide");
    Monomial r = *this;
    for (std::size_t i = 0; i < o.e_.size(); ++i) r.e_[i] -= o.e_[i];
    r.trim();
    return r;
}

int lex_compare(const Monomial& a, const Monomial& b) {
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned u = i < x.size() ? x[i] : 0;
        unsigned v = i < y.size() ? y[i] : 0;
        if (u != v) return u > v ? 1 : -1;
    }
    return 0;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    return lex_compare(a, b);
}

Polynomial::Polynomial(const Rational& c, unsigned nvars) : nvars_(nvars) {
    if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::variable(unsigned i, unsigned nvars) {
    if (i == 0 || i > nvars)
        throw Error(ErrorCode::IndexOutOfRange, "variable x" + std::to_string(i) + " outside 1.." + std::to_string(nvars));
    return monomial(Monomial::var(i), 1, nvars);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c, unsigned nvars) {
    if (m.max_var() > nvars) throw Error(ErrorCode::ArityMismatch, "monomial exceeds ambient variable count");
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

Polynomial Polynomial::with_nvars(unsigned n) const {
    if (max_var() > n) throw Error(ErrorCode::ArityMismatch, "polynomial uses variables beyond " + std::to_string(n));
    Polynomial p = *this;
    p.nvars_ = n;
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

unsigned Polynomial::degree_in(unsigned var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) p.terms_.emplace_hint(p.terms_.end(), m, c);
    return p;
}

unsigned Polynomial::max_var() const {
    unsigned v = 0;
    for (const auto& [m, c] : terms_) v = std::max(v, m.max_var());
    return v;
}

std::pair<Monomial, Rational> Polynomial::lex_leading() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (lex_compare(it->first, best->first) > 0) best = it;
    return *best;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    nvars_ = std::max(nvars_, m.max_var());
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p(std::max(a.nvars_, b.nvars_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
    return p;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result(1, nvars_);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::derivative(unsigned var) const {
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m.exponent(var);
        if (e == 0) continue;
        std::vector<unsigned> ex = m.exponents();
        ex[var - 1] -= 1;
        p.add_term(Monomial(std::move(ex)), c * e);
    }
    return p;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_)
        throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                                                  std::to_string(nvars_) + " variables");
    // Power cache per variable keeps this linear in the exponents.
    std::vector<std::vector<Rational>> powers(nvars_);
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        const auto& ex = m.exponents();
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (ex[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(1);
            while (pw.size() <= ex[i]) pw.push_back(pw.back() * point[i]);
            t *= pw[ex[i]];
        }
        sum += t;
    }
    return sum;
}

namespace {

Polynomial substitute_impl(const Polynomial& p, const std::map<unsigned, Polynomial>& images, bool strict) {
    unsigned n = strict ? 0 : p.nvars();
    for (const auto& [v, img] : images) n = std::max(n, img.nvars());
    std::map<unsigned, std::vector<Polynomial>> cache;
    auto power = [&](unsigned var, unsigned e) -> const Polynomial& {
        auto& pw = cache[var];
        if (pw.empty()) pw.emplace_back(1, n);
        while (pw.size() <= e) pw.push_back(pw.back() * images.at(var));
        return pw[e];
    };
    Polynomial out(n);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t(c, n);
        std::vector<unsigned> kept;
        const auto& ex = m.exponents();
        for (unsigned i = 0; i < ex.size(); ++i) {
            if (ex[i] == 0) continue;
            unsigned var = i + 1;
            if (images.count(var)) {
                t *= power(var, ex[i]);
            } else if (strict) {
                throw Error(ErrorCode::ArityMismatch, "substitution does not cover x" + std::to_string(var));
            } else {
                t *= Polynomial::monomial(Monomial::var(var, ex[i]), 1, n);
            }
        }
        out += t;
    }
    return out;
}

}  // namespace

Polynomial Polynomial::substitute(const std::map<unsigned, Polynomial>& images) const {
    return substitute_impl(*this, images, true);
}

Polynomial Polynomial::substitute_some(const std::map<unsigned, Polynomial>& images) const {
    return substitute_impl(*this, images, false);
}

Polynomial Polynomial::permute(const std::vector<unsigned>& perm) const {
    unsigned n = nvars_;
    for (unsigned t : perm) n = std::max(n, t);
    Polynomial p(n);
    for (const auto& [m, c] : terms_) {
        std::vector<unsigned> ex(n, 0);
        const auto& src = m.exponents();
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i] == 0) continue;
            if (i >= perm.size()) throw Error(ErrorCode::ArityMismatch, "permutation too short");
            ex[perm[i] - 1] += src[i];
        }
        p.add_term(Monomial(std::move(ex)), c);
    }
    return p;
}

Names default_names(unsigned nvars, const std::string& stem) {
    Names names;
    for (unsigned i = 1; i <= nvars; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

std::string to_string(const Polynomial& p) { return to_string(p, default_names(p.nvars())); }

std::string to_string(const Polynomial& p, const Names& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        const auto& ex = m.exponents();
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (ex[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
            if (ex[i] > 1) mono += "^" + std::to_string(ex[i]);
        }
        if (mono.empty()) {
            out += to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += to_string(a) + "*" + mono;
        }
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const Names& names) : s_(text), names_(names) {}

    Polynomial run() {
        Polynomial p = expr();
        skip();
        if (i_ != s_.size()) throw SyntaxError(i_, std::string("unexpected '") + s_[i_] + "'");
        return p;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    unsigned n() const { return static_cast<unsigned>(names_.size()); }

    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (peek('+')) {
                ++i_;
                p += term();
            } else if (peek('-')) {
                ++i_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = signed_factor();
        while (peek('*')) {
            ++i_;
            p *= signed_factor();
        }
        return p;
    }

    Polynomial signed_factor() {
        bool neg = false;
        for (;;) {
            if (peek('-')) {
                neg = !neg;
                ++i_;
            } else if (peek('+')) {
                ++i_;
            } else {
                break;
            }
        }
        Polynomial f = factor();
        return neg ? -f : f;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (peek('^')) {
            ++i_;
            skip();
            std::size_t start = i_;
            std::string digits = read_digits();
            if (digits.empty()) throw SyntaxError(start, "expected exponent");
            if (digits.size() > 6) throw SyntaxError(start, "exponent too large");
            b = b.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return b;
    }

    std::string read_digits() {
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return s_.substr(start, i_ - start);
    }

    Polynomial base() {
        skip();
        if (i_ >= s_.size()) throw SyntaxError(i_, "unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Polynomial p = expr();
            if (!peek(')')) throw SyntaxError(i_, "expected ')'");
            ++i_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            std::string num = read_digits();
            Integer den = 1;
            if (peek('/')) {
                ++i_;
                skip();
                std::size_t dpos = i_;
                std::string d = read_digits();
                if (d.empty()) throw SyntaxError(dpos, "expected denominator");
                den = Integer(d);
                if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator at position " + std::to_string(dpos));
            }
            (void)start;
            Rational r(Integer(num), den);
            r.canonicalize();
            return Polynomial(r, n());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string name = s_.substr(start, i_ - start);
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end())
                throw Error(ErrorCode::UnknownVariable,
                            "unknown variable '" + name + "' at position " + std::to_string(start));
            return Polynomial::variable(static_cast<unsigned>(it - names_.begin()) + 1, n());
        }
        throw SyntaxError(i_, std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    const Names& names_;
    std::size_t i_ = 0;
};

}  // namespace

Polynomial parse(const std::string& text, unsigned nvars) { return parse(text, default_names(nvars)); }

Polynomial parse(const std::string& text, const Names& names) { return Parser(text, names).run(); }

PolyMatrix jacobian(const std::vector<Polynomial>& fs) {
    unsigned n = 0;
    for (const auto& f : fs) n = std::max(n, f.nvars());
    PolyMatrix J;
    for (const auto& f : fs) {
        std::vector<Polynomial> row;
        for (unsigned j = 1; j <= n; ++j) row.push_back(f.derivative(j).with_nvars(n));
        J.push_back(std::move(row));
    }
    return J;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.empty()) return {};
    std::size_t inner = a[0].size();
    if (b.size() != inner) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes differ");
    std::size_t cols = b.empty() ? 0 : b[0].size();
    PolyMatrix c(a.size(), std::vector<Polynomial>(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Polynomial s;
            for (std::size_t k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

}  // namespace symalg
