#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symalg/poly.hpp"
#include "symalg/realroot.hpp"

namespace symalg {

// Points (v_1(t)/d(t), ..., v_l(t)/d(t)) for the roots t of q, where
// d = denominator (q' unless given otherwise) and T = gamma . x on the set.
// The v_i are kept reduced modulo q.
struct ZeroDimParam {
    UniPoly q;
    UniPoly denominator;
    std::vector<UniPoly> v;
    std::vector<Rational> gamma;

    std::size_t dimension() const { return v.size(); }
    // Number of complex points.
    int degree() const { return q.degree(); }
};

struct Validation {
    bool ok = true;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
};

Validation validate(const ZeroDimParam& param);

struct RealAlgebraicPoint {
    std::shared_ptr<const ZeroDimParam> param;
    ThomEncoding enc;
};

std::vector<RealAlgebraicPoint> real_points(const ZeroDimParam& param);
// Rational roots of q, ascending.
std::vector<Rational> rational_roots(const UniPoly& q);
std::vector<std::vector<Rational>> rational_points(const ZeroDimParam& param);

// A parametrization of an explicit finite set of rational points.
ZeroDimParam parametrize_points(const std::vector<std::vector<Rational>>& points, unsigned dimension,
                                std::uint64_t seed = 1);

struct SolveOptions {
    std::uint64_t seed = 0x5eed;
    // Coordinates to keep (1-based). The parametrization then describes the
    // projection of the solution set, and gamma only uses these variables.
    std::optional<std::vector<unsigned>> keep;
    int attempts = 3;
};

// Parametrization of the complex solution set of a zero-dimensional system.
ZeroDimParam solve_zero_dim(const std::vector<Polynomial>& system, unsigned nvars, const SolveOptions& opts = {});

// The i-th coordinate as a polynomial in T with denominator 1 (v_i / d mod q).
UniPoly coordinate_poly(const ZeroDimParam& param, std::size_t i);

// JSON object {"q", "denominator", "v", "gamma"}, rationals as "a/b" strings,
// coefficient lists ascending.
std::string to_json(const ZeroDimParam& param);
ZeroDimParam param_from_json(const std::string& text);

}  // namespace symalg
