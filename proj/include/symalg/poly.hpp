#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symalg/error.hpp"
#include "symalg/rational.hpp"

namespace symalg {

// Exponent vector, variable i (1-based) at position i-1. Trailing zeros are
// trimmed so equal monomials have equal storage.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exps);

    static Monomial var(unsigned i, unsigned e = 1);

    unsigned exponent(unsigned i) const { return i >= 1 && i <= e_.size() ? e_[i - 1] : 0; }
    unsigned degree() const { return deg_; }
    unsigned max_var() const { return static_cast<unsigned>(e_.size()); }
    bool is_one() const { return e_.empty(); }
    const std::vector<unsigned>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Requires divides(o) reversed: *this must be a multiple of o.
    Monomial operator/(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    void trim();
    std::vector<unsigned> e_;
    unsigned deg_ = 0;
};

// Pure lex with x1 > x2 > ...
int lex_compare(const Monomial& a, const Monomial& b);
// Degree first, ties broken by lex.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(unsigned nvars) : nvars_(nvars) {}
    Polynomial(const Rational& c, unsigned nvars);

    static Polynomial variable(unsigned i, unsigned nvars);
    static Polynomial monomial(const Monomial& m, const Rational& c, unsigned nvars);

    unsigned nvars() const { return nvars_; }
    // Same terms in a larger (or equal, if every variable still fits) ambient space.
    Polynomial with_nvars(unsigned n) const;

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coeff(const Monomial& m) const;
    Rational constant_term() const { return coeff(Monomial()); }

    // -1 for the zero polynomial.
    int degree() const;
    unsigned degree_in(unsigned var) const;
    bool is_homogeneous() const;
    Polynomial homogeneous_part(unsigned d) const;
    // Largest index of a variable that actually occurs.
    unsigned max_var() const;

    // Leading term under pure lex; the polynomial must be nonzero.
    std::pair<Monomial, Rational> lex_leading() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned k) const;
    Polynomial derivative(unsigned var) const;

    // point.size() must equal nvars().
    Rational evaluate(const std::vector<Rational>& point) const;

    // Every occurring variable must be mapped; the result lives in the
    // ambient space of the images.
    Polynomial substitute(const std::map<unsigned, Polynomial>& images) const;
    // Unmapped variables stay in place; result has max(nvars, image nvars).
    Polynomial substitute_some(const std::map<unsigned, Polynomial>& images) const;

    // x_i -> x_{perm[i-1]} (perm holds 1-based targets).
    Polynomial permute(const std::vector<unsigned>& perm) const;

private:
    TermMap terms_;
    unsigned nvars_ = 0;
};

inline Polynomial pow(const Polynomial& p, unsigned k) { return p.pow(k); }

using Names = std::vector<std::string>;
Names default_names(unsigned nvars, const std::string& stem = "x");

std::string to_string(const Polynomial& p);
std::string to_string(const Polynomial& p, const Names& names);

// Grammar: expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := base ('^' uint)?, base := rational | var | '(' expr ')'.
// A leading sign on any factor is accepted as well.
Polynomial parse(const std::string& text, unsigned nvars);
// Variables are looked up by name; index = position + 1.
Polynomial parse(const std::string& text, const Names& names);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// entry (i, j) = d f_i / d x_j, j running over the shared nvars.
PolyMatrix jacobian(const std::vector<Polynomial>& fs);

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace symalg
