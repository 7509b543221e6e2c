#include "symalg/sos.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "symalg/error.hpp"
#include "symalg/symfun.hpp"

namespace symalg {

namespace {

void check_square(const std::vector<Monomial>& basis, const QMatrix& Q) {
    if (Q.rows() != basis.size() || Q.cols() != basis.size())
        throw Error(ErrorCode::DimensionMismatch, "Gram matrix size differs from the basis");
    if (!Q.is_symmetric()) throw Error(ErrorCode::InvalidParam, "Gram matrix is not symmetric");
}

// Decimal digits of r when its denominator is 2^a 5^b.
std::optional<std::string> terminating_decimal(const Rational& r) {
    Integer den = r.get_den();
    unsigned twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2, ++twos;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5, ++fives;
    if (den != 1) return std::nullopt;
    unsigned k = std::max(twos, fives);
    if (k == 0) return r.get_num().get_str();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
    Integer num = r.get_num() * scale / r.get_den();
    bool neg = num < 0;
    std::string digits = Integer(abs(num)).get_str();
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, ".");
    while (digits.back() == '0') digits.pop_back();
    return (neg ? "-" : "") + digits;
}

}  // namespace

bool gram_order(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_compare(a, b) > 0;
}

std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned d, bool up_to) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(nvars, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
        if (i + 1 == nvars || nvars == 0) {
            if (nvars) e[i] = left;
            if (nvars || left == 0) out.emplace_back(e);
            if (nvars) e[i] = 0;
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    for (unsigned k = up_to ? 0 : d; k <= d; ++k) rec(0, k);
    std::sort(out.begin(), out.end(), gram_order);
    return out;
}

QMatrix GramSystem::matrix() const {
    const std::size_t n = basis.size();
    QMatrix A(monomials.size(), n * (n + 1) / 2);
    auto col = [n](std::size_t i, std::size_t j) { return i * n - i * (i + 1) / 2 + j; };
    for (std::size_t k = 0; k < cells.size(); ++k)
        for (auto [i, j] : cells[k]) A(k, col(i, j)) += Rational(i == j ? 1 : 2);
    return A;
}

GramSystem gram_system(const Polynomial& f, bool full_basis) {
    int deg = f.is_zero() ? 0 : f.degree();
    if (deg % 2) throw Error(ErrorCode::OddDegree, "a Gram representation needs even degree, got " + std::to_string(deg));
    bool homogeneous = !f.is_zero() && f.is_homogeneous();
    return gram_system(f, monomials_of_degree(f.nvars(), deg / 2, full_basis || !homogeneous));
}

GramSystem gram_system(const Polynomial& f, const std::vector<Monomial>& basis) {
    if (!f.is_zero() && f.degree() % 2) throw Error(ErrorCode::OddDegree, "a Gram representation needs even degree");
    GramSystem gs;
    gs.nvars = f.nvars();
    gs.basis = basis;
    std::map<Monomial, std::vector<std::pair<std::size_t, std::size_t>>, bool (*)(const Monomial&, const Monomial&)>
        by_mono(gram_order);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) by_mono[basis[i] * basis[j]].emplace_back(i, j);
    for (const auto& [m, c] : f.terms()) by_mono[m];
    for (auto& [m, cells] : by_mono) {
        gs.monomials.push_back(m);
        gs.rhs.push_back(f.coeff(m));
        gs.cells.push_back(std::move(cells));
    }
    return gs;
}

Polynomial gram_polynomial(const std::vector<Monomial>& basis, const QMatrix& Q, unsigned nvars) {
    check_square(basis, Q);
    Polynomial out(nvars);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (Q(i, j) != 0) out += Polynomial::monomial(basis[i] * basis[j], Q(i, j), nvars);
    return out;
}

namespace {

// LDL^T on a copy; returns nullopt when Q is not PSD. Pivots are taken on
// the largest remaining diagonal entry; rows of the result carry the unit
// lower factor transposed, indexed by the original positions.
std::optional<SosDecomposition> ldl(const QMatrix& Q0, const std::vector<Monomial>& basis, unsigned nvars) {
    QMatrix Q = Q0;
    const std::size_t n = Q.rows();
    std::vector<bool> done(n, false);
    SosDecomposition out;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && (p == n || Q(i, i) > Q(p, p))) p = i;
        const Rational d = Q(p, p);
        if (d < 0) return std::nullopt;
        if (d == 0) {
            // Every remaining diagonal entry is zero, so the rest must vanish.
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && Q(i, j) != 0) return std::nullopt;
            break;
        }
        done[p] = true;
        Polynomial sq(nvars);
        for (std::size_t i = 0; i < n; ++i)
            if (Q(p, i) != 0 && (i == p || !done[i]))
                sq += Polynomial::monomial(basis.empty() ? Monomial() : basis[i], Q(p, i) / d, nvars);
        out.weights.push_back(d);
        out.squares.push_back(sq);
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || Q(i, p) == 0) continue;
            Rational r = Q(i, p) / d;
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j]) Q(i, j) -= r * Q(p, j);
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i]) Q(i, p) = Q(p, i) = 0;
    }
    return out;
}

}  // namespace

bool is_psd(const QMatrix& Q) {
    if (Q.rows() != Q.cols()) throw Error(ErrorCode::DimensionMismatch, "PSD test of a non-square matrix");
    if (!Q.is_symmetric()) return false;
    return ldl(Q, {}, 0).has_value();
}

SosDecomposition sos_from_gram(const std::vector<Monomial>& basis, const QMatrix& Q, unsigned nvars) {
    check_square(basis, Q);
    auto r = ldl(Q, basis, nvars);
    if (!r) throw Error(ErrorCode::InvalidParam, "Gram matrix is not positive semidefinite");
    return *r;
}

bool verify_gram(const Polynomial& f, const std::vector<Monomial>& basis, const QMatrix& Q) {
    if (Q.rows() != basis.size() || Q.cols() != basis.size())
        throw Error(ErrorCode::DimensionMismatch, "Gram matrix size differs from the basis");
    if (!Q.is_symmetric()) return false;
    unsigned nvars = f.nvars();
    for (const auto& m : basis) nvars = std::max(nvars, m.max_var());
    if (gram_polynomial(basis, Q, nvars) != f.with_nvars(nvars)) return false;
    return is_psd(Q);
}

std::string sdpa_text(const GramSystem& gs) {
    std::ostringstream out;
    out << gs.constraint_count() << "\n1\n" << gs.size() << "\n";
    std::vector<Integer> scale(gs.constraint_count(), Integer(1));
    for (std::size_t k = 0; k < gs.rhs.size(); ++k) {
        if (k) out << ' ';
        if (auto dec = terminating_decimal(gs.rhs[k])) {
            out << *dec;
        } else {
            scale[k] = gs.rhs[k].get_den();
            out << gs.rhs[k].get_num().get_str();
        }
    }
    out << "\n";
    for (std::size_t k = 0; k < gs.cells.size(); ++k)
        for (auto [i, j] : gs.cells[k]) out << k + 1 << " 1 " << i + 1 << ' ' << j + 1 << ' ' << scale[k].get_str() << "\n";
    return out.str();
}

void emit_sdpa(const GramSystem& gs, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    f << sdpa_text(gs);
    if (!f) throw Error(ErrorCode::IoError, "failed writing " + path);
}

Polynomial quartic_from_params(const QuarticParams& p) {
    if (p.n <= 4) throw Error(ErrorCode::TooFewVariables, "the quartic representation needs n > 4, got " + std::to_string(p.n));
    if (p.alpha.rows() != 2 || p.alpha.cols() != 2 || p.beta.rows() != 2 || p.beta.cols() != 2)
        throw Error(ErrorCode::DimensionMismatch, "alpha and beta must be 2 x 2");
    const unsigned n = p.n;
    const Rational N(n);
    auto pi = [&](unsigned j) { return basis_polynomial(BasisKind::PowerSum, j, n) * (Rational(1) / N); };
    const Polynomial p1 = pi(1), p2 = pi(2), p3 = pi(3), p4 = pi(4);
    const Polynomial p11 = p1 * p1, p1111 = p11 * p11, p112 = p11 * p2, p22 = p2 * p2, p13 = p1 * p3;
    const auto& a = p.alpha;
    const auto& b = p.beta;
    Polynomial f = a(0, 0) * p1111 + Rational(2 * a(0, 1)) * p112 + a(1, 1) * p22;
    f += b(0, 0) * (p112 - p1111) + Rational(2 * b(0, 1)) * (p13 - p112) + b(1, 1) * (p4 - p22);
    const Rational n2 = N * N;
    Polynomial g = Rational(1, 2) * p1111 - p112 + ((n2 - 3 * N + 3) / (2 * n2)) * p22 + ((2 * N - 2) / n2) * p13 +
                   ((1 - N) / (2 * n2)) * p4;
    f += p.gamma * g;
    return f;
}

bool quartic_check(const QuarticParams& p) {
    if (p.n <= 4) throw Error(ErrorCode::TooFewVariables, "the quartic representation needs n > 4");
    auto psd2 = [](const QMatrix& m) {
        return m.is_symmetric() && m(0, 0) >= 0 && m(1, 1) >= 0 && m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) >= 0;
    };
    return p.gamma >= 0 && psd2(p.alpha) && psd2(p.beta);
}

}  // namespace symalg
