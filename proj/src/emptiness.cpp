#include "symalg/emptiness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "symalg/error.hpp"
#include "symalg/groebner.hpp"
#include "symalg/symfun.hpp"

namespace symalg {

namespace {

constexpr long kDraw = 1L << 20;

// Laplace expansion; s stays small here.
Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m, unsigned nvars) {
    const std::size_t k = m.size();
    if (k == 0) return Polynomial(1, nvars);
    if (k == 1) return m[0][0];
    Polynomial det(nvars);
    for (std::size_t c = 0; c < k; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t j = 0; j < k; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][c] * poly_determinant(minor, nvars);
        if (c % 2) det -= term;
        else det += term;
    }
    return det;
}

void for_each_subset(unsigned n, unsigned k, const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> idx(k);
    std::iota(idx.begin(), idx.end(), 0u);
    if (k > n) return;
    for (;;) {
        fn(idx);
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Point of n coordinates from the pattern values y (parts ascending).
std::vector<Rational> expand_pattern(const std::vector<Rational>& y, const Partition& lambda) {
    std::vector<Rational> x;
    for (std::size_t k = 0; k < lambda.length(); ++k) x.insert(x.end(), lambda.parts[k], y[k]);
    return x;
}

// Critical points of f on {sum w_k y_k^2 = 1} (ellipsoid) or of f on the
// whole space, projected to y. nullopt when the set is infinite.
std::optional<ZeroDimParam> critical_param(const Polynomial& f, unsigned l, const std::vector<Rational>* weights,
                                           std::uint64_t seed) {
    std::vector<Polynomial> gs;
    if (weights) {
        Polynomial e(Rational(-1), l);
        for (unsigned k = 1; k <= l; ++k) e += Polynomial::monomial(Monomial::var(k, 2), (*weights)[k - 1], l);
        gs.push_back(e);
    }
    auto sys = lagrange_system(gs, f, l);
    SolveOptions opts;
    opts.seed = seed;
    std::vector<unsigned> keep(l);
    std::iota(keep.begin(), keep.end(), 1u);
    opts.keep = keep;
    try {
        return solve_zero_dim(sys.equations, sys.nvars, opts);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::PositiveDimensional || e.code() == ErrorCode::SeparationFailure) return std::nullopt;
        throw;
    }
}

// min over the ellipsoid compared with zero: +1 if every critical value is
// positive, 0 if the least is zero, -1 if one is negative; nullopt when the
// critical set is infinite for both weight draws.
std::optional<int> sign_of_minimum_on_ellipsoid(const Polynomial& f, unsigned l, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dw(1, 64);
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<Rational> w(l);
        for (auto& x : w) x = Rational(dw(rng));
        auto param = critical_param(f, l, &w, rng());
        if (!param) continue;
        auto signs = signs_at_points(f, *param);
        if (signs.empty()) continue;  // a real ellipsoid always carries a minimum
        return *std::min_element(signs.begin(), signs.end());
    }
    return std::nullopt;
}

}  // namespace

ObjectiveSpec build_objective(const Partition& lambda, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> draw(1, kDraw);
    std::vector<std::vector<Rational>> a;
    for (unsigned li : lambda_blocks(lambda).sizes) {
        std::vector<Rational> row(li);
        for (auto& x : row) x = Rational(draw(rng));
        a.push_back(std::move(row));
    }
    return build_objective(lambda, std::move(a));
}

ObjectiveSpec build_objective(const Partition& lambda, std::vector<std::vector<Rational>> a) {
    BlockStructure bs = lambda_blocks(lambda);
    if (a.size() != bs.count()) throw Error(ErrorCode::DimensionMismatch, "one coefficient row per block expected");
    ObjectiveSpec spec{lambda, std::move(a), {}, Polynomial(bs.total())};
    for (unsigned i = 1; i <= bs.count(); ++i) {
        unsigned li = bs.sizes[i - 1];
        if (spec.a[i - 1].size() != li) throw Error(ErrorCode::DimensionMismatch, "coefficient row has the wrong length");
        int c = li % 2;
        spec.c.push_back(c);
        if (c) spec.phi += block_basis_polynomial(BasisKind::PowerSum, i, li + 1, bs);
        for (unsigned j = 1; j <= li; ++j)
            spec.phi += spec.a[i - 1][j - 1] * block_basis_polynomial(BasisKind::PowerSum, i, j, bs);
    }
    return spec;
}

LagrangeSystem lagrange_system(const std::vector<Polynomial>& gs, const Polynomial& phi, unsigned nvars) {
    const unsigned s = static_cast<unsigned>(gs.size());
    LagrangeSystem out;
    out.nvars = nvars + s;
    out.multipliers = s;
    for (const auto& g : gs) out.equations.push_back(g.with_nvars(out.nvars));
    for (unsigned k = 1; k <= nvars; ++k) {
        Polynomial eq = phi.with_nvars(out.nvars).derivative(k);
        for (unsigned i = 0; i < s; ++i)
            eq += Polynomial::variable(nvars + i + 1, out.nvars) * gs[i].with_nvars(out.nvars).derivative(k);
        out.equations.push_back(eq);
    }
    return out;
}

OrbitParam critical_points_sym(const std::vector<Polynomial>& gs, const Polynomial& phi, const Partition& lambda,
                               std::uint64_t seed) {
    BlockStructure bs = lambda_blocks(lambda);
    const unsigned l = bs.total();
    std::vector<Polynomial> G;
    for (const auto& g : gs) G.push_back(ftsp_rewrite(g.with_nvars(l), BasisKind::Elementary, bs).with_nvars(l));
    Polynomial Phi = ftsp_rewrite(phi.with_nvars(l), BasisKind::Elementary, bs).with_nvars(l);
    auto sys = lagrange_system(G, Phi, l);
    SolveOptions opts;
    opts.seed = seed;
    std::vector<unsigned> keep(l);
    std::iota(keep.begin(), keep.end(), 1u);
    opts.keep = keep;
    return OrbitParam{lambda, solve_zero_dim(sys.equations, sys.nvars, opts)};
}

bool verify_regularity(const std::vector<Polynomial>& fs, unsigned nvars) {
    const unsigned s = static_cast<unsigned>(fs.size());
    if (s == 0) return true;
    if (s > nvars) return groebner_basis(fs, nvars) == std::vector<Polynomial>{Polynomial(1, nvars)};
    std::vector<Polynomial> sys;
    for (const auto& f : fs) sys.push_back(f.with_nvars(nvars));
    std::vector<std::vector<Polynomial>> J(s, std::vector<Polynomial>(nvars));
    for (unsigned i = 0; i < s; ++i)
        for (unsigned j = 0; j < nvars; ++j) J[i][j] = sys[i].derivative(j + 1);
    for_each_subset(nvars, s, [&](const std::vector<unsigned>& cols) {
        std::vector<std::vector<Polynomial>> m(s);
        for (unsigned i = 0; i < s; ++i)
            for (unsigned c : cols) m[i].push_back(J[i][c]);
        Polynomial d = poly_determinant(m, nvars);
        if (!d.is_zero()) sys.push_back(d);
    });
    auto G = groebner_basis(sys, nvars);
    return G.size() == 1 && G[0].is_constant();
}

bool real_emptiness(const std::vector<Polynomial>& fs, unsigned n, const EmptinessOptions& opts) {
    for (const auto& f : fs) {
        if (f.max_var() > n) throw Error(ErrorCode::ArityMismatch, "polynomial uses more than n variables");
        if (!is_symmetric(f.with_nvars(n))) throw Error(ErrorCode::NotSymmetric, to_string(f) + " is not symmetric");
    }
    if (fs.empty()) return false;
    if (fs.size() >= n) throw Error(ErrorCode::InvalidParam, "need fewer equations than variables");
    if (opts.check_regularity && !verify_regularity(fs, n))
        throw Error(ErrorCode::AssumptionViolated, "the Jacobian drops rank somewhere on the variety");
    const unsigned s = static_cast<unsigned>(fs.size());
    std::mt19937_64 rng(opts.seed);
    for (const auto& lambda : enumerate_partitions(n, s)) {
        std::vector<Polynomial> fl;
        for (const auto& f : fs) {
            Polynomial g = lambda_substitute(f.with_nvars(n), lambda);
            if (!g.is_zero()) fl.push_back(g);
        }
        // Every point of the pattern is a zero, real ones included.
        if (fl.empty()) return false;
        bool solved = false;
        for (int attempt = 0; attempt < 2 && !solved; ++attempt) {
            ObjectiveSpec obj = build_objective(lambda, rng);
            try {
                OrbitParam op = critical_points_sym(fl, obj.phi, lambda, rng());
                solved = true;
                if (decide_real_preimage(op)) return false;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::PositiveDimensional && e.code() != ErrorCode::SeparationFailure) throw;
            }
        }
        if (!solved)
            throw Error(ErrorCode::DegenerateInstance,
                        "infinitely many critical points for two objective draws on pattern " + to_string(lambda));
    }
    return true;
}

const char* to_string(Nonneg s) {
    switch (s) {
        case Nonneg::Nonnegative: return "nonnegative";
        case Nonneg::Witness: return "witness";
        case Nonneg::Unknown: return "unknown";
    }
    return "?";
}

std::vector<int> signs_at_points(const Polynomial& f, const ZeroDimParam& param) {
    if (param.q.degree() <= 0) return {};
    if (f.is_zero()) return std::vector<int>(ThomContext(param.q).root_count(), 0);
    // f(v/d) = N / d^D with N = sum_k f_k(v) d^{D-k}, f_k the degree-k part.
    const int D = f.degree();
    const UniPoly& q = param.q;
    const UniPoly& d = param.denominator;
    std::vector<UniPoly> dpow{UniPoly(1)};
    for (int k = 1; k <= D; ++k) dpow.push_back(rem(dpow.back() * d, q));
    std::vector<std::vector<UniPoly>> vpow(param.v.size(), std::vector<UniPoly>{UniPoly(1)});
    UniPoly N;
    for (const auto& [m, c] : f.terms()) {
        UniPoly t(c);
        for (unsigned i = 1; i <= m.max_var(); ++i) {
            unsigned e = m.exponent(i);
            if (!e) continue;
            if (i > param.v.size()) throw Error(ErrorCode::ArityMismatch, "polynomial has more variables than points");
            auto& pw = vpow[i - 1];
            while (pw.size() <= e) pw.push_back(rem(pw.back() * param.v[i - 1], q));
            t = rem(t * pw[e], q);
        }
        N += rem(t * dpow[D - m.degree()], q);
    }
    // An odd total degree leaves one factor of d to account for.
    if (D % 2) N = rem(N * d, q);
    return ThomContext(q).signs_at_roots(N);
}

NonnegResult nonneg_degree_principle(const Polynomial& f0, unsigned n, std::uint64_t seed) {
    const Polynomial f = f0.with_nvars(n);
    if (!is_symmetric(f)) throw Error(ErrorCode::NotSymmetric, to_string(f0) + " is not symmetric");
    NonnegResult res;
    if (f.is_zero()) {
        res.status = Nonneg::Nonnegative;
        return res;
    }
    const unsigned r = std::max(2, f.degree() / 2);
    std::mt19937_64 rng(seed);
    std::vector<Partition> patterns;
    for (const auto& lambda : enumerate_partitions(n))
        if (lambda.length() <= r) patterns.push_back(lambda);

    // Falsify first: a grid of small values and random rationals per pattern.
    const std::vector<Rational> grid{0, 1, -1, Rational(1, 2), Rational(-1, 2), 2, -2, 3, -3};
    std::uniform_int_distribution<int> num(-40, 40), den(1, 8);
    for (const auto& lambda : patterns) {
        Polynomial g = lambda_substitute(f, lambda);
        const unsigned l = static_cast<unsigned>(lambda.length());
        std::vector<std::vector<Rational>> samples;
        if (l <= 3) {
            std::vector<std::size_t> idx(l, 0);
            for (;;) {
                std::vector<Rational> y;
                for (auto i : idx) y.push_back(grid[i]);
                samples.push_back(std::move(y));
                std::size_t k = 0;
                while (k < l && ++idx[k] == grid.size()) idx[k++] = 0;
                if (k == l) break;
            }
        }
        for (int t = 0; t < 300; ++t) {
            std::vector<Rational> y;
            for (unsigned k = 0; k < l; ++k) {
                Rational v(num(rng), den(rng));
                v.canonicalize();
                y.push_back(v);
            }
            samples.push_back(std::move(y));
        }
        for (const auto& y : samples) {
            Rational v = g.evaluate(y);
            if (v < 0) {
                res.status = Nonneg::Witness;
                res.witness = expand_pattern(y, lambda);
                res.value = f.evaluate(res.witness);
                return res;
            }
        }
    }

    // Certify each pattern through critical values.
    for (const auto& lambda : patterns) {
        Polynomial g = lambda_substitute(f, lambda);
        const unsigned l = static_cast<unsigned>(lambda.length());
        if (g.is_zero()) continue;
        if (g.degree() % 2) {
            res.note = "odd degree on pattern " + to_string(lambda);
            return res;
        }
        if (g.is_homogeneous()) {
            auto m = sign_of_minimum_on_ellipsoid(g, l, rng);
            if (!m) {
                res.note = "infinitely many critical points on pattern " + to_string(lambda);
                return res;
            }
            if (*m < 0) {
                res.note = "negative critical value on pattern " + to_string(lambda) + " without a rational witness";
                return res;
            }
            continue;
        }
        // Proper when the leading form is positive definite; then the global
        // minimum is a critical value.
        auto lead = sign_of_minimum_on_ellipsoid(g.homogeneous_part(g.degree()), l, rng);
        if (!lead || *lead <= 0) {
            res.note = "leading form is not positive definite on pattern " + to_string(lambda);
            return res;
        }
        auto param = critical_param(g, l, nullptr, rng());
        if (!param) {
            res.note = "infinitely many critical points on pattern " + to_string(lambda);
            return res;
        }
        auto signs = signs_at_points(g, *param);
        if (!signs.empty() && *std::min_element(signs.begin(), signs.end()) < 0) {
            res.note = "negative critical value on pattern " + to_string(lambda) + " without a rational witness";
            return res;
        }
    }
    res.status = Nonneg::Nonnegative;
    return res;
}

}  // namespace symalg
