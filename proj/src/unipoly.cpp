#include "symalg/unipoly.hpp"

#include <algorithm>

namespace symalg {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monomial(unsigned k, const Rational& c) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
    UniPoly p(1);
    for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
    return p;
}

const Rational& UniPoly::operator[](std::size_t i) const {
    static const Rational zero(0);
    return i < c_.size() ? c_[i] : zero;
}

UniPoly UniPoly::operator-() const {
    UniPoly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly operator*(UniPoly a, const Rational& c) {
    if (c == 0) return UniPoly();
    for (auto& x : a.c_) x *= c;
    return a;
}

UniPoly UniPoly::derivative(unsigned k) const {
    UniPoly p = *this;
    for (unsigned r = 0; r < k; ++r) {
        if (p.c_.empty()) break;
        std::vector<Rational> d;
        for (std::size_t i = 1; i < p.c_.size(); ++i) d.push_back(p.c_[i] * static_cast<unsigned long>(i));
        p = UniPoly(std::move(d));
    }
    return p;
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::pow(unsigned k) const {
    UniPoly r(1), b = *this;
    while (k) {
        if (k & 1u) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

UniPoly UniPoly::compose(const UniPoly& g) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + UniPoly(*it);
    return acc;
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    return *this * Rational(1 / lc());
}

UniPoly UniPoly::primitive() const {
    if (c_.empty()) return *this;
    Integer l = 1, g = 0;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : c_) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return *this * Rational(l, g);
}

Polynomial UniPoly::to_polynomial(unsigned var, unsigned nvars) const {
    Polynomial p(nvars);
    for (std::size_t i = 0; i < c_.size(); ++i) p.add_term(Monomial::var(var, static_cast<unsigned>(i)), c_[i]);
    return p.with_nvars(std::max(nvars, p.max_var()));
}

UniPoly UniPoly::from_polynomial(const Polynomial& p, unsigned var) {
    std::vector<Rational> c;
    for (const auto& [m, v] : p.terms()) {
        if (m.degree() != m.exponent(var))
            throw Error(ErrorCode::ArityMismatch, "polynomial is not univariate in x" + std::to_string(var));
        unsigned e = m.exponent(var);
        if (c.size() <= e) c.resize(e + 1, Rational(0));
        c[e] += v;
    }
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    Rational inv = 1 / b.lc();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Rational f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly rem(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
UniPoly quo(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        UniPoly r = rem(x, y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

void xgcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t) {
    UniPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        g = r0;
        s = s0;
        t = t0;
        return;
    }
    Rational inv = 1 / r0.lc();
    g = r0 * inv;
    s = s0 * inv;
    t = t0 * inv;
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
    UniPoly g, s, t;
    xgcd(rem(a, m), m, g, s, t);
    if (g.degree() != 0) throw Error(ErrorCode::InvalidParam, "polynomial is not invertible modulo the given modulus");
    return rem(s, m);
}

std::string to_string(const UniPoly& p, const std::string& var) {
    return to_string(p.to_polynomial(1, 1), Names{var});
}

UniPoly parse_unipoly(const std::string& text, const std::string& var) {
    return UniPoly::from_polynomial(parse(text, Names{var}), 1);
}

}  // namespace symalg
