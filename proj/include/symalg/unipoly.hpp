#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symalg/poly.hpp"
#include "symalg/rational.hpp"

namespace symalg {

// Dense univariate polynomial over Q, coefficients ascending.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(const Rational& c) : UniPoly(std::vector<Rational>{c}) {}
    UniPoly(int c) : UniPoly(Rational(c)) {}

    // X^k
    static UniPoly monomial(unsigned k, const Rational& c = 1);
    static UniPoly from_roots(const std::vector<Rational>& roots);

    const std::vector<Rational>& coeffs() const { return c_; }
    // -1 for zero.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& operator[](std::size_t i) const;
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c);
    friend UniPoly operator*(const Rational& c, UniPoly a) { return std::move(a) * c; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    UniPoly derivative(unsigned k = 1) const;
    Rational evaluate(const Rational& x) const;
    UniPoly pow(unsigned k) const;
    // p(g(X))
    UniPoly compose(const UniPoly& g) const;

    UniPoly monic() const;
    // Positive rational multiple with coprime integer coefficients; keeps signs.
    UniPoly primitive() const;

    Polynomial to_polynomial(unsigned var = 1, unsigned nvars = 1) const;
    static UniPoly from_polynomial(const Polynomial& p, unsigned var = 1);

private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly rem(const UniPoly& a, const UniPoly& b);
UniPoly quo(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
// Extended Euclid: s*a + t*b = gcd(a, b) (monic).
void xgcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t);
// a^{-1} mod m; a must be coprime to m.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

std::string to_string(const UniPoly& p, const std::string& var = "T");
UniPoly parse_unipoly(const std::string& text, const std::string& var = "T");

}  // namespace symalg
