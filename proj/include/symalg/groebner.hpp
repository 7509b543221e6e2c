#pragma once

#include <vector>

#include "symalg/poly.hpp"

namespace symalg {

// Graded reverse lex: degree first, then the smaller exponent in the last
// differing variable wins.
int grevlex_compare(const Monomial& a, const Monomial& b);
Monomial grevlex_leading(const Polynomial& p);

// Reduced Groebner basis under grevlex, monic, sorted by leading monomial
// descending. {1} for an inconsistent system; {} for the zero ideal.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& fs, unsigned nvars);

// Remainder of f on division by a Groebner basis G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, unsigned nvars);

bool is_zero_dimensional(const std::vector<Polynomial>& G, unsigned nvars);

// Monomials not divisible by any leading monomial of G, grevlex ascending.
// Throws PositiveDimensional when there are infinitely many.
std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& G, unsigned nvars);

}  // namespace symalg
