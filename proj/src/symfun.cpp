#include "symalg/symfun.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace symalg {

namespace {

// Moves variable i of p to variable offset + i in an ambient space of `total`.
Polynomial shift(const Polynomial& p, unsigned offset, unsigned total) {
    Polynomial out(total);
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> ex(offset, 0);
        ex.insert(ex.end(), m.exponents().begin(), m.exponents().end());
        out.add_term(Monomial(std::move(ex)), c);
    }
    return out.with_nvars(total);
}

BlockStructure single_block(unsigned n) { return BlockStructure{{n}}; }

// Exponent slice of block k of a monomial.
std::vector<unsigned> block_exponents(const Monomial& m, const BlockStructure& bs, unsigned k) {
    std::vector<unsigned> a;
    unsigned f = bs.first(k);
    for (unsigned j = 0; j < bs.sizes[k - 1]; ++j) a.push_back(m.exponent(f + j));
    return a;
}

// Products of powers of a fixed generator list, memoized per call site.
class PowerCache {
public:
    PowerCache(std::vector<Polynomial> gens, unsigned nvars) : gens_(std::move(gens)), nvars_(nvars) {}

    const Polynomial& power(std::size_t i, unsigned e) {
        auto& pw = cache_[i];
        if (pw.empty()) pw.emplace_back(1, nvars_);
        while (pw.size() <= e) pw.push_back(pw.back() * gens_[i]);
        return pw[e];
    }

    Polynomial product(const std::vector<unsigned>& exps) {
        Polynomial r(1, nvars_);
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i]) r *= power(i, exps[i]);
        return r;
    }

private:
    std::vector<Polynomial> gens_;
    unsigned nvars_;
    std::map<std::size_t, std::vector<Polynomial>> cache_;
};

std::vector<Polynomial> block_generators(BasisKind kind, const BlockStructure& bs) {
    std::vector<Polynomial> g;
    for (unsigned k = 1; k <= bs.count(); ++k)
        for (unsigned j = 1; j <= bs.sizes[k - 1]; ++j) g.push_back(block_basis_polynomial(kind, k, j, bs));
    return g;
}

Polynomial elementary_rewrite(const Polynomial& f, const BlockStructure& bs) {
    const unsigned total = bs.total();
    PowerCache cache(block_generators(BasisKind::Elementary, bs), total);
    Polynomial rest = f.with_nvars(std::max(f.nvars(), total));
    Polynomial F(total);
    std::optional<Monomial> last;
    while (!rest.is_zero()) {
        auto [m, c] = rest.lex_leading();
        if (last && lex_compare(m, *last) >= 0)
            throw Error(ErrorCode::NonTermination, "leading monomial failed to decrease during symmetric reduction");
        last = m;
        std::vector<unsigned> yexp(total, 0);
        for (unsigned k = 1; k <= bs.count(); ++k) {
            auto a = block_exponents(m, bs, k);
            a.push_back(0);
            for (std::size_t j = 0; j + 1 < a.size(); ++j) {
                if (a[j] < a[j + 1]) throw Error(ErrorCode::NotSymmetric, "polynomial is not (block-)symmetric");
                yexp[bs.first(k) - 1 + j] = a[j] - a[j + 1];
            }
        }
        rest -= c * cache.product(yexp);
        F.add_term(Monomial(yexp), c);
    }
    return F.with_nvars(total);
}

// e_k of one group written in power sums (Newton), k = 0..n.
std::vector<Polynomial> elementary_in_power_sums(unsigned n, unsigned offset, unsigned total) {
    std::vector<Polynomial> E{Polynomial(1, total)};
    for (unsigned k = 1; k <= n; ++k) {
        Polynomial s(total);
        for (unsigned i = 1; i <= k; ++i) {
            Polynomial pi = Polynomial::variable(offset + i, total);
            Polynomial t = E[k - i] * pi;
            if (i % 2 == 0) t = -t;
            s += t;
        }
        E.push_back(s * Rational(1, k));
    }
    return E;
}

// p_k of one group written in elementary polynomials, k = 1..kmax.
std::vector<Polynomial> power_sums_in_elementary(unsigned n, unsigned kmax, unsigned offset, unsigned total) {
    auto e = [&](unsigned j) { return j <= n ? Polynomial::variable(offset + j, total) : Polynomial(total); };
    std::vector<Polynomial> P{Polynomial(Rational(n), total)};
    for (unsigned k = 1; k <= kmax; ++k) {
        Polynomial s = e(k) * Rational(k);
        if (k % 2 == 0) s = -s;
        for (unsigned j = 1; j < k; ++j) {
            Polynomial t = e(j) * P[k - j];
            if (j % 2 == 0) t = -t;
            s += t;
        }
        P.push_back(s);
    }
    return P;
}

Polynomial convert_blocks(const Polynomial& F, BasisKind from, BasisKind to, const BlockStructure& bs) {
    if (from == to) return F;
    bool ok = (from == BasisKind::Elementary && to == BasisKind::PowerSum) ||
              (from == BasisKind::PowerSum && to == BasisKind::Elementary);
    if (!ok) throw Error(ErrorCode::UnsupportedBasisPair, std::string("cannot convert ") + basis_letter(from) + " to " + basis_letter(to));
    const unsigned total = bs.total();
    std::map<unsigned, Polynomial> images;
    for (unsigned k = 1; k <= bs.count(); ++k) {
        unsigned n = bs.sizes[k - 1], off = bs.first(k) - 1;
        if (from == BasisKind::Elementary) {
            auto E = elementary_in_power_sums(n, off, total);
            for (unsigned j = 1; j <= n; ++j) images[off + j] = E[j];
        } else {
            auto P = power_sums_in_elementary(n, n, off, total);
            for (unsigned j = 1; j <= n; ++j) images[off + j] = P[j];
        }
    }
    return F.substitute_some(images).with_nvars(total);
}

std::vector<std::vector<unsigned>> exponent_vectors(unsigned m, unsigned max_deg, const std::vector<unsigned>& weights,
                                                    unsigned max_weight) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(m, 0);
    std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned i, unsigned deg, unsigned w) {
        if (i == m) {
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; deg + e <= max_deg && w + e * weights[i] <= max_weight; ++e) {
            cur[i] = e;
            rec(i + 1, deg + e, w + e * weights[i]);
            if (weights[i] == 0 && e >= max_deg) break;
        }
        cur[i] = 0;
    };
    rec(0, 0, 0);
    return out;
}

}  // namespace

const char* basis_letter(BasisKind k) {
    switch (k) {
        case BasisKind::Elementary: return "e";
        case BasisKind::PowerSum: return "p";
        case BasisKind::CompleteHomogeneous: return "h";
        case BasisKind::Monomial: return "m";
    }
    return "?";
}

BasisKind parse_basis(const std::string& s) {
    if (s == "e" || s == "elementary") return BasisKind::Elementary;
    if (s == "p" || s == "power_sum") return BasisKind::PowerSum;
    if (s == "h" || s == "complete_homogeneous") return BasisKind::CompleteHomogeneous;
    if (s == "m" || s == "monomial") return BasisKind::Monomial;
    throw Error(ErrorCode::UnsupportedBasisPair, "unknown basis '" + s + "'");
}

unsigned BlockStructure::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0u); }

unsigned BlockStructure::first(unsigned k) const {
    if (k == 0 || k > sizes.size()) throw Error(ErrorCode::IndexOutOfRange, "block index out of range");
    return std::accumulate(sizes.begin(), sizes.begin() + (k - 1), 0u) + 1;
}

Polynomial basis_polynomial(BasisKind kind, unsigned k, unsigned nvars) {
    switch (kind) {
        case BasisKind::Elementary: {
            if (k == 0) return Polynomial(1, nvars);
            if (k > nvars) throw Error(ErrorCode::IndexOutOfRange, "e_" + std::to_string(k) + " needs k <= nvars");
            // e^{(m)}_j = e^{(m-1)}_j + x_m e^{(m-1)}_{j-1}
            std::vector<Polynomial> e(k + 1, Polynomial(nvars));
            e[0] = Polynomial(1, nvars);
            for (unsigned m = 1; m <= nvars; ++m) {
                Polynomial x = Polynomial::variable(m, nvars);
                for (unsigned j = std::min(k, m); j >= 1; --j) e[j] += x * e[j - 1];
            }
            return e[k];
        }
        case BasisKind::PowerSum: {
            if (k == 0) return Polynomial(Rational(nvars), nvars);
            Polynomial p(nvars);
            for (unsigned i = 1; i <= nvars; ++i) p.add_term(Monomial::var(i, k), 1);
            return p;
        }
        case BasisKind::CompleteHomogeneous: {
            if (k == 0) return Polynomial(1, nvars);
            // h^{(m)}_j = h^{(m-1)}_j + x_m h^{(m)}_{j-1}
            std::vector<Polynomial> h(k + 1, Polynomial(nvars));
            h[0] = Polynomial(1, nvars);
            for (unsigned m = 1; m <= nvars; ++m) {
                Polynomial x = Polynomial::variable(m, nvars);
                for (unsigned j = 1; j <= k; ++j) h[j] += x * h[j - 1];
            }
            return h[k];
        }
        case BasisKind::Monomial:
            throw Error(ErrorCode::IndexOutOfRange, "monomial basis is indexed by a partition");
    }
    return Polynomial(nvars);
}

Polynomial monomial_symmetric(const Partition& lambda, unsigned nvars) {
    if (lambda.length() > nvars) throw Error(ErrorCode::IndexOutOfRange, "partition has more parts than variables");
    std::vector<unsigned> ex(nvars - lambda.length(), 0);
    ex.insert(ex.end(), lambda.parts.begin(), lambda.parts.end());
    std::sort(ex.begin(), ex.end());
    Polynomial p(nvars);
    do {
        p.add_term(Monomial(ex), 1);
    } while (std::next_permutation(ex.begin(), ex.end()));
    return p.with_nvars(nvars);
}

Polynomial block_basis_polynomial(BasisKind kind, unsigned block, unsigned k, const BlockStructure& bs) {
    unsigned f = bs.first(block);
    return shift(basis_polynomial(kind, k, bs.sizes[block - 1]), f - 1, bs.total());
}

bool is_block_symmetric(const Polynomial& f, const BlockStructure& bs) {
    unsigned n = std::max(f.nvars(), bs.total());
    for (unsigned k = 1; k <= bs.count(); ++k) {
        unsigned first = bs.first(k);
        for (unsigned j = 0; j + 1 < bs.sizes[k - 1]; ++j) {
            std::vector<unsigned> perm(n);
            std::iota(perm.begin(), perm.end(), 1u);
            std::swap(perm[first - 1 + j], perm[first + j]);
            if (f.permute(perm) != f) return false;
        }
    }
    return true;
}

bool is_symmetric(const Polynomial& f) { return is_block_symmetric(f, single_block(f.nvars())); }

Polynomial newton_convert(const Polynomial& F, BasisKind from, BasisKind to, unsigned nvars) {
    if (from == BasisKind::PowerSum && to == BasisKind::Elementary) {
        unsigned kmax = std::max(F.nvars(), 1u);
        auto P = power_sums_in_elementary(nvars, kmax, 0, nvars);
        std::map<unsigned, Polynomial> images;
        for (unsigned k = 1; k <= kmax; ++k) images[k] = P[k];
        return F.substitute(images).with_nvars(nvars);
    }
    if (F.max_var() > nvars) throw Error(ErrorCode::IndexOutOfRange, "basis index exceeds variable count");
    return convert_blocks(F.with_nvars(nvars), from, to, single_block(nvars));
}

Polynomial ftsp_rewrite(const Polynomial& f, BasisKind target, const std::optional<BlockStructure>& bs_opt) {
    BlockStructure bs = bs_opt ? *bs_opt : single_block(f.nvars());
    if (f.max_var() > bs.total()) throw Error(ErrorCode::ArityMismatch, "polynomial has more variables than the block structure");
    if (!is_block_symmetric(f, bs)) throw Error(ErrorCode::NotSymmetric, "polynomial is not (block-)symmetric");
    switch (target) {
        case BasisKind::Elementary: return elementary_rewrite(f, bs);
        case BasisKind::PowerSum: return convert_blocks(elementary_rewrite(f, bs), BasisKind::Elementary, BasisKind::PowerSum, bs);
        case BasisKind::CompleteHomogeneous: {
            unsigned d = f.is_zero() ? 0 : static_cast<unsigned>(f.degree());
            auto F = subring_membership(f.with_nvars(bs.total()), block_generators(BasisKind::CompleteHomogeneous, bs), d);
            if (!F) throw Error(ErrorCode::NonTermination, "complete homogeneous rewriting found no solution");
            return *F;
        }
        case BasisKind::Monomial:
            throw Error(ErrorCode::UnsupportedBasisPair, "rewriting into the monomial basis is not supported");
    }
    return f;
}

std::optional<Polynomial> subring_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                             unsigned degree_bound) {
    const unsigned m = static_cast<unsigned>(gens.size());
    unsigned n = f.nvars();
    for (const auto& g : gens) n = std::max(n, g.nvars());
    // With homogeneous generators of positive degree the weighted degree of a
    // useful y-monomial cannot exceed deg f.
    bool graded = true;
    std::vector<unsigned> weights;
    for (const auto& g : gens) {
        if (!g.is_homogeneous() || g.degree() <= 0) graded = false;
        weights.push_back(g.degree() > 0 ? static_cast<unsigned>(g.degree()) : 0);
    }
    unsigned max_weight = ~0u;
    if (graded) {
        max_weight = f.is_zero() ? 0 : static_cast<unsigned>(f.degree());
    } else {
        std::fill(weights.begin(), weights.end(), 0u);
    }
    auto exps = exponent_vectors(m, degree_bound, weights, max_weight);

    PowerCache cache(gens, n);
    std::map<Monomial, std::size_t, GrlexGreater> row_of;
    std::vector<Polynomial> columns;
    for (const auto& e : exps) {
        columns.push_back(cache.product(e));
        for (const auto& [mono, c] : columns.back().terms()) row_of.emplace(mono, 0);
    }
    for (const auto& [mono, c] : f.terms()) row_of.emplace(mono, 0);
    std::size_t r = 0;
    for (auto& [mono, idx] : row_of) idx = r++;

    QMatrix A(row_of.size(), columns.size());
    QVector b(row_of.size(), Rational(0));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [mono, c] : columns[j].terms()) A(row_of[mono], j) = c;
    for (const auto& [mono, c] : f.terms()) b[row_of[mono]] = c;

    auto x = solve(A, b);
    if (!x) return std::nullopt;
    Polynomial F(m);
    for (std::size_t j = 0; j < exps.size(); ++j) F.add_term(Monomial(exps[j]), (*x)[j]);
    return F.with_nvars(m);
}

Names y_names(BasisKind kind, unsigned nvars, const std::optional<BlockStructure>& bs) {
    std::string stem = basis_letter(kind);
    if (!bs) return default_names(nvars, stem);
    Names names;
    for (unsigned k = 1; k <= bs->count(); ++k)
        for (unsigned j = 1; j <= bs->sizes[k - 1]; ++j)
            names.push_back(stem + "{" + std::to_string(k) + "," + std::to_string(j) + "}");
    return names;
}

Polynomial lambda_substitute(const Polynomial& f, const Composition& lambda) {
    if (lambda.n() != f.nvars())
        throw Error(ErrorCode::SumMismatch, "composition of " + std::to_string(lambda.n()) + " does not match " +
                                                std::to_string(f.nvars()) + " variables");
    const unsigned l = static_cast<unsigned>(lambda.length());
    std::map<unsigned, Polynomial> images;
    unsigned x = 1;
    for (unsigned k = 1; k <= l; ++k)
        for (unsigned t = 0; t < lambda.parts[k - 1]; ++t) images[x++] = Polynomial::variable(k, l);
    return f.substitute(images).with_nvars(l);
}

Polynomial lambda_substitute(const Polynomial& f, const Partition& lambda) {
    return lambda_substitute(f, lambda.as_composition());
}

BlockStructure lambda_blocks(const Partition& lambda) {
    BlockStructure bs;
    for (auto [ni, li] : lambda.multiplicities()) bs.sizes.push_back(li);
    return bs;
}

QMatrix distribution_matrix(const Partition& lambda) {
    QMatrix D(lambda.length(), lambda.n());
    std::size_t col = 0;
    for (std::size_t k = 0; k < lambda.length(); ++k) {
        unsigned nk = lambda.parts[k];
        for (unsigned t = 0; t < nk; ++t) D(k, col++) = Rational(1, nk);
    }
    return D;
}

Polynomial symmetric_closure_gate(const std::vector<Polynomial>& fs, unsigned max_vars) {
    unsigned n = 0;
    for (const auto& f : fs) n = std::max(n, f.nvars());
    if (n > max_vars)
        throw Error(ErrorCode::TooManyVariables, "symmetric closure over " + std::to_string(n) + "! permutations exceeds the cap of " +
                                                     std::to_string(max_vars) + " variables");
    Polynomial g(n);
    for (const auto& f : fs) {
        std::vector<unsigned> perm(n);
        std::iota(perm.begin(), perm.end(), 1u);
        do {
            Polynomial s = f.permute(perm);
            g += s * s;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return g.with_nvars(n);
}

Polynomial weighted_power_sum(unsigned j, const std::vector<unsigned>& m) {
    unsigned n = static_cast<unsigned>(m.size());
    Polynomial p(n);
    for (unsigned i = 1; i <= n; ++i) p.add_term(Monomial::var(i, j), m[i - 1]);
    return p.with_nvars(n);
}

}  // namespace symalg
