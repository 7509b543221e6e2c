#pragma once

#include <random>
#include <vector>

#include "symalg/poly.hpp"
#include "symalg/unipoly.hpp"

namespace symalg::testing {

inline Rational rand_rational(std::mt19937_64& rng, int num_range = 5, int den_range = 3) {
    std::uniform_int_distribution<int> num(-num_range, num_range), den(1, den_range);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline std::vector<Rational> rand_point(std::mt19937_64& rng, unsigned n, int num_range = 5, int den_range = 3) {
    std::vector<Rational> v;
    for (unsigned i = 0; i < n; ++i) v.push_back(rand_rational(rng, num_range, den_range));
    return v;
}

inline Polynomial rand_poly(std::mt19937_64& rng, unsigned nvars, unsigned max_deg, unsigned terms) {
    std::uniform_int_distribution<unsigned> var(1, nvars), deg(0, max_deg);
    Polynomial p(nvars);
    for (unsigned t = 0; t < terms; ++t) {
        std::vector<unsigned> ex(nvars, 0);
        unsigned d = deg(rng);
        for (unsigned k = 0; k < d; ++k) ++ex[var(rng) - 1];
        p.add_term(Monomial(ex), rand_rational(rng));
    }
    return p.with_nvars(nvars);
}

inline UniPoly rand_unipoly(std::mt19937_64& rng, unsigned deg, int range = 6) {
    std::uniform_int_distribution<int> c(-range, range);
    std::vector<Rational> v;
    for (unsigned i = 0; i <= deg; ++i) v.push_back(c(rng));
    if (v.back() == 0) v.back() = 1;
    return UniPoly(v);
}

}  // namespace symalg::testing
