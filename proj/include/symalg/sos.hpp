#pragma once

#include <string>
#include <vector>

#include "symalg/linalg.hpp"
#include "symalg/poly.hpp"

namespace symalg {

// Monomials ordered by degree ascending, then lex descending (x1 before x2).
bool gram_order(const Monomial& a, const Monomial& b);

// Coefficient matching f = v^T Q v for a symmetric unknown Q indexed by
// basis. Constraint k reads sum over cells (i, j), i <= j, of w * Q_ij = rhs[k]
// with w = 1 on the diagonal and 2 off it.
struct GramSystem {
    unsigned nvars = 0;
    std::vector<Monomial> basis;
    std::vector<Monomial> monomials;
    std::vector<Rational> rhs;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cells;

    std::size_t size() const { return basis.size(); }
    std::size_t constraint_count() const { return monomials.size(); }
    // Matrix of the linear map vech(Q) -> coefficients; vech runs over (i, j), i <= j, row-major.
    QMatrix matrix() const;
};

// Monomials of degree exactly d (homogeneous) or at most d, in nvars variables.
std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned d, bool up_to);

// Basis: degree-(deg f / 2) monomials when f is homogeneous, all monomials of
// degree <= deg f / 2 otherwise or when full_basis is set.
GramSystem gram_system(const Polynomial& f, bool full_basis = false);
GramSystem gram_system(const Polynomial& f, const std::vector<Monomial>& basis);

Polynomial gram_polynomial(const std::vector<Monomial>& basis, const QMatrix& Q, unsigned nvars);

// Exact PSD test by LDL^T with diagonal pivoting; a zero pivot needs its
// whole remaining row to vanish.
bool is_psd(const QMatrix& Q);

// L with Q = L^T L when Q is PSD (rows of L give the squares); throws
// InvalidParam otherwise.
struct SosDecomposition {
    std::vector<Rational> weights;    // nonnegative
    std::vector<Polynomial> squares;  // f = sum weights[k] * squares[k]^2
};
SosDecomposition sos_from_gram(const std::vector<Monomial>& basis, const QMatrix& Q, unsigned nvars);

// v^T Q v == f exactly and Q is PSD.
bool verify_gram(const Polynomial& f, const std::vector<Monomial>& basis, const QMatrix& Q);

// Sparse SDPA (.dat-s) text of the feasibility problem: find Y PSD with
// <A_k, Y> = rhs_k. A right-hand side with a terminating decimal expansion
// is written as that decimal; any other is cleared by multiplying its whole
// constraint by the denominator, which leaves the feasible set unchanged.
std::string sdpa_text(const GramSystem& gs);
void emit_sdpa(const GramSystem& gs, const std::string& path);

// Parameters of the symmetric quartic representation in n > 4 variables.
struct QuarticParams {
    QMatrix alpha = QMatrix(2, 2);
    QMatrix beta = QMatrix(2, 2);
    Rational gamma;
    unsigned n = 5;
};

// With pi_j = p_j / n:
//   a11 pi1^4 + 2 a12 pi1^2 pi2 + a22 pi2^2
// + b11 (pi1^2 pi2 - pi1^4) + 2 b12 (pi1 pi3 - pi1^2 pi2) + b22 (pi4 - pi2^2)
// + gamma (pi1^4 / 2 - pi1^2 pi2 + (n^2-3n+3)/(2n^2) pi2^2 + (2n-2)/n^2 pi1 pi3 + (1-n)/(2n^2) pi4).
Polynomial quartic_from_params(const QuarticParams& p);
// gamma >= 0 and alpha, beta PSD.
bool quartic_check(const QuarticParams& p);

}  // namespace symalg
