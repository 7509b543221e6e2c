#include "symalg/zerodim.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "isolate.hpp"
#include "json.hpp"
#include "symalg/groebner.hpp"
#include "symalg/linalg.hpp"

namespace symalg {

namespace {

// Incremental echelon form of the Krylov vectors w_0, w_1, ..., remembering
// how each stored row combines the w's.
class KrylovSpan {
public:
    // Adds w_k (k = number of vectors added so far). Returns the monic
    // dependency sum c_i w_i = 0 when w_k is already in the span.
    std::optional<std::vector<Rational>> add(QVector w) {
        std::size_t k = count_++;
        std::vector<Rational> comb(k + 1, Rational(0));
        comb[k] = 1;
        eliminate(w, comb);
        if (is_zero(w)) return comb;
        std::size_t p = 0;
        while (w[p] == 0) ++p;
        rows_.push_back(std::move(w));
        combs_.push_back(std::move(comb));
        piv_.push_back(p);
        return std::nullopt;
    }

    // Coefficients c with x = sum c_i w_i, if x lies in the span.
    std::optional<std::vector<Rational>> express(QVector x) const {
        std::vector<Rational> comb(count_, Rational(0));
        eliminate(x, comb);
        if (!is_zero(x)) return std::nullopt;
        for (auto& c : comb) c = -c;
        return comb;
    }

private:
    static bool is_zero(const QVector& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
    }

    void eliminate(QVector& u, std::vector<Rational>& comb) const {
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            const Rational& a = u[piv_[j]];
            if (a == 0) continue;
            Rational f = a / rows_[j][piv_[j]];
            for (std::size_t i = piv_[j]; i < u.size(); ++i)
                if (rows_[j][i] != 0) u[i] -= f * rows_[j][i];
            if (comb.size() < combs_[j].size()) comb.resize(combs_[j].size(), Rational(0));
            for (std::size_t i = 0; i < combs_[j].size(); ++i)
                if (combs_[j][i] != 0) comb[i] -= f * combs_[j][i];
        }
    }

    std::size_t count_ = 0;
    std::vector<QVector> rows_, combs_;
    std::vector<std::size_t> piv_;
};

// The quotient ring Q[x]/<G> with its monomial basis and multiplication maps.
struct Quotient {
    unsigned nvars;
    std::vector<Polynomial> G;
    std::vector<Monomial> basis;
    std::map<std::vector<unsigned>, std::size_t> index;
    std::vector<QMatrix> mult;  // mult[i-1] is multiplication by x_i

    Quotient(std::vector<Polynomial> g, unsigned n) : nvars(n), G(std::move(g)) {
        basis = standard_monomials(G, nvars);
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].exponents()] = i;
        const std::size_t D = basis.size();
        for (unsigned v = 1; v <= nvars; ++v) {
            QMatrix M(D, D);
            for (std::size_t c = 0; c < D; ++c) {
                Monomial m = basis[c] * Monomial::var(v);
                auto it = index.find(m.exponents());
                if (it != index.end()) {
                    M(it->second, c) = 1;
                    continue;
                }
                QVector col = coords(normal_form(Polynomial::monomial(m, 1, nvars), G, nvars));
                for (std::size_t r = 0; r < D; ++r) M(r, c) = col[r];
            }
            mult.push_back(std::move(M));
        }
    }

    std::size_t dim() const { return basis.size(); }

    QVector coords(const Polynomial& nf) const {
        QVector v(basis.size(), Rational(0));
        for (const auto& [m, c] : nf.terms()) v[index.at(m.exponents())] = c;
        return v;
    }

    QVector one() const {
        QVector v(basis.size(), Rational(0));
        v[index.at({})] = 1;
        return v;
    }

    QMatrix linear_form(const std::vector<std::pair<unsigned, Rational>>& form) const {
        QMatrix M(dim(), dim());
        for (const auto& [v, c] : form)
            for (std::size_t i = 0; i < dim(); ++i)
                for (std::size_t j = 0; j < dim(); ++j)
                    if (mult[v - 1](i, j) != 0) M(i, j) += c * mult[v - 1](i, j);
        return M;
    }
};

// Minimal polynomial of the element acting as M, through its action on 1.
UniPoly minimal_polynomial(const QMatrix& M, const QVector& one, KrylovSpan* keep = nullptr) {
    KrylovSpan local;
    KrylovSpan& span = keep ? *keep : local;
    QVector w = one;
    for (;;) {
        if (auto dep = span.add(w)) return UniPoly(*dep);
        w = M.apply(w);
    }
}

Rational floor_of(const Rational& r) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rational(f);
}

// The rational of least denominator in [a, b].
Rational simplest_between(const Rational& a, const Rational& b) {
    if (a <= 0 && b >= 0) return 0;
    if (b < 0) return -simplest_between(-b, -a);
    Rational fl = floor_of(a);
    if (fl == a) return a;
    if (fl + 1 <= b) return fl + 1;
    return fl + Rational(1) / simplest_between(Rational(1) / (b - fl), Rational(1) / (a - fl));
}

// f(R_1(T), ..., R_n(T)) mod q.
UniPoly evaluate_mod(const Polynomial& f, const std::vector<UniPoly>& R, const UniPoly& q) {
    // powers[v-1][e] = R_v^e mod q, grown on demand.
    std::vector<std::vector<UniPoly>> powers(R.size(), std::vector<UniPoly>{UniPoly(1)});
    auto power = [&](unsigned v, unsigned e) -> const UniPoly& {
        auto& pw = powers[v - 1];
        while (pw.size() <= e) pw.push_back(rem(pw.back() * R[v - 1], q));
        return pw[e];
    };
    UniPoly acc;
    for (const auto& [m, c] : f.terms()) {
        UniPoly t(c);
        for (unsigned v = 1; v <= m.max_var(); ++v)
            if (m.exponent(v)) t = rem(t * power(v, m.exponent(v)), q);
        acc += t;
    }
    return rem(acc, q);
}

ZeroDimParam empty_param(std::size_t dimension) {
    ZeroDimParam p;
    p.q = UniPoly(1);
    p.denominator = p.q.derivative();
    p.v.assign(dimension, UniPoly());
    p.gamma.assign(dimension, Rational(0));
    if (dimension) p.gamma[0] = 1;
    return p;
}

}  // namespace

Validation validate(const ZeroDimParam& p) {
    auto fail = [](std::string why) { return Validation{false, std::move(why)}; };
    if (p.q.is_zero()) return fail("q is the zero polynomial");
    if (gcd(p.q, p.q.derivative()) != UniPoly(1)) return fail("q is not squarefree");
    if (gcd(p.q, p.denominator) != UniPoly(1)) return fail("the denominator shares a root with q");
    if (p.gamma.size() != p.v.size())
        return fail("gamma has " + std::to_string(p.gamma.size()) + " entries for " + std::to_string(p.v.size()) +
                    " coordinates");
    for (std::size_t i = 0; i < p.v.size(); ++i)
        if (p.v[i].degree() > p.q.degree())
            return fail("v" + std::to_string(i + 1) + " has degree above deg q");
    UniPoly lhs;
    for (std::size_t i = 0; i < p.v.size(); ++i) lhs += p.v[i] * p.gamma[i];
    if (!rem(lhs - UniPoly::monomial(1) * p.denominator, p.q).is_zero())
        return fail("the linear form gamma does not evaluate to T on the points");
    return {};
}

std::vector<RealAlgebraicPoint> real_points(const ZeroDimParam& param) {
    auto check = validate(param);
    if (!check) throw Error(ErrorCode::InvalidParam, check.diagnostic);
    auto shared = std::make_shared<const ZeroDimParam>(param);
    std::vector<RealAlgebraicPoint> out;
    if (param.q.degree() <= 0) return out;
    ThomContext ctx(param.q);
    for (const auto& e : ctx.encodings()) out.push_back({shared, e});
    return out;
}

std::vector<Rational> rational_roots(const UniPoly& q) {
    std::vector<Rational> out;
    if (q.degree() <= 0) return out;
    UniPoly z = squarefree_part(q).primitive();
    // Two rationals with denominators at most N sit at least 1/N^2 apart.
    Rational N = abs(z.lc());
    Rational width = Rational(1) / (2 * N * N);
    for (auto iv : detail::isolate_real_roots(z)) {
        iv = detail::refine_root(z, iv, width);
        Rational s = iv.lo == iv.hi ? iv.lo : simplest_between(iv.lo, iv.hi);
        if (z.evaluate(s) == 0) out.push_back(s);
    }
    return out;
}

std::vector<std::vector<Rational>> rational_points(const ZeroDimParam& param) {
    auto check = validate(param);
    if (!check) throw Error(ErrorCode::InvalidParam, check.diagnostic);
    std::vector<std::vector<Rational>> out;
    for (const auto& t : rational_roots(param.q)) {
        Rational d = param.denominator.evaluate(t);
        std::vector<Rational> pt;
        for (const auto& v : param.v) pt.push_back(v.evaluate(t) / d);
        out.push_back(std::move(pt));
    }
    return out;
}

UniPoly coordinate_poly(const ZeroDimParam& param, std::size_t i) {
    if (param.q.degree() <= 0) return UniPoly();
    return rem(param.v.at(i) * inverse_mod(param.denominator, param.q), param.q);
}

ZeroDimParam parametrize_points(const std::vector<std::vector<Rational>>& points, unsigned dimension,
                                std::uint64_t seed) {
    std::set<std::vector<Rational>> distinct;
    for (const auto& p : points) {
        if (p.size() != dimension) throw Error(ErrorCode::ArityMismatch, "point of the wrong dimension");
        distinct.insert(p);
    }
    if (distinct.empty()) return empty_param(dimension);
    std::vector<std::vector<Rational>> pts(distinct.begin(), distinct.end());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> draw(1, 1L << 20);
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<Rational> gamma(dimension);
        for (auto& g : gamma) g = Rational(draw(rng));
        std::vector<Rational> tau;
        for (const auto& p : pts) {
            Rational t = 0;
            for (unsigned i = 0; i < dimension; ++i) t += gamma[i] * p[i];
            tau.push_back(t);
        }
        if (std::set<Rational>(tau.begin(), tau.end()).size() != tau.size()) continue;
        ZeroDimParam out;
        out.q = UniPoly::from_roots(tau);
        out.denominator = out.q.derivative();
        out.gamma = gamma;
        for (unsigned i = 0; i < dimension; ++i) {
            // Lagrange form: sum_j x_j q/(T - t_j) already carries the factor q'(t_j).
            UniPoly v;
            for (std::size_t j = 0; j < pts.size(); ++j) {
                if (pts[j][i] == 0) continue;
                v += quo(out.q, UniPoly(std::vector<Rational>{-tau[j], 1})) * pts[j][i];
            }
            out.v.push_back(rem(v, out.q));
        }
        return out;
    }
    throw Error(ErrorCode::SeparationFailure, "no separating linear form found for the given points");
}

ZeroDimParam solve_zero_dim(const std::vector<Polynomial>& system, unsigned nvars, const SolveOptions& opts) {
    std::vector<unsigned> keep;
    if (opts.keep) {
        keep = *opts.keep;
        for (unsigned v : keep)
            if (v < 1 || v > nvars) throw Error(ErrorCode::IndexOutOfRange, "kept variable out of range");
    } else {
        for (unsigned v = 1; v <= nvars; ++v) keep.push_back(v);
    }

    auto G = groebner_basis(system, nvars);
    if (G.size() == 1 && G[0].is_constant()) return empty_param(keep.size());
    if (!is_zero_dimensional(G, nvars))
        throw Error(ErrorCode::PositiveDimensional, "the system has infinitely many complex solutions");

    // Pass to the radical: add the squarefree part of each coordinate's
    // minimal polynomial.
    {
        Quotient A(G, nvars);
        std::vector<Polynomial> rad = G;
        bool changed = false;
        for (unsigned v = 1; v <= nvars; ++v) {
            UniPoly mu = minimal_polynomial(A.mult[v - 1], A.one());
            UniPoly sq = squarefree_part(mu);
            if (sq.degree() < mu.degree()) {
                rad.push_back(sq.to_polynomial(v, nvars));
                changed = true;
            }
        }
        if (changed) G = groebner_basis(rad, nvars);
    }
    Quotient A(G, nvars);

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> draw(1, 1L << 20);
    for (int attempt = 0; attempt < opts.attempts; ++attempt) {
        std::vector<std::pair<unsigned, Rational>> form;
        for (unsigned v : keep) form.emplace_back(v, Rational(draw(rng)));
        if (attempt == 0 && keep.size() == 1) form[0].second = 1;
        KrylovSpan span;
        UniPoly q = minimal_polynomial(A.linear_form(form), A.one(), &span);
        std::vector<UniPoly> R;
        bool separates = true;
        for (unsigned v : keep) {
            auto c = span.express(A.mult[v - 1].apply(A.one()));
            if (!c) {
                separates = false;
                break;
            }
            c->resize(q.degree(), Rational(0));
            R.emplace_back(*c);
        }
        if (!separates) continue;

        if (!opts.keep) {
            for (const auto& f : system)
                if (!evaluate_mod(f, R, q).is_zero())
                    throw Error(ErrorCode::NonTermination, "recovered coordinates do not satisfy the system");
        }
        ZeroDimParam out;
        out.q = q;
        out.denominator = q.derivative();
        for (std::size_t i = 0; i < keep.size(); ++i) {
            out.v.push_back(rem(R[i] * out.denominator, q));
            out.gamma.push_back(form[i].second);
        }
        return out;
    }
    throw Error(ErrorCode::SeparationFailure,
                "no separating linear form in " + std::to_string(opts.attempts) +
                    " attempts; a nonzero polynomial of degree d has at most d|S|^(n-1) zeros in S^n, so a random "
                    "form from {1..2^20} fails with probability at most C(D,2)/2^20, D = " +
                    std::to_string(A.dim()));
}

std::string to_json(const ZeroDimParam& p) {
    auto coeffs = [](const UniPoly& u) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : u.coeffs()) a.push_back(to_string(c));
        return a;
    };
    nlohmann::json j;
    j["q"] = coeffs(p.q);
    j["denominator"] = coeffs(p.denominator);
    j["v"] = nlohmann::json::array();
    for (const auto& v : p.v) j["v"].push_back(coeffs(v));
    j["gamma"] = nlohmann::json::array();
    for (const auto& g : p.gamma) j["gamma"].push_back(to_string(g));
    return j.dump();
}

ZeroDimParam param_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::IoError, std::string("malformed JSON: ") + e.what());
    }
    auto rational = [](const nlohmann::json& x) {
        if (x.is_string()) return parse_rational(x.get<std::string>());
        if (x.is_number_integer()) return Rational(x.get<long>());
        throw Error(ErrorCode::IoError, "coefficients must be \"a/b\" strings");
    };
    auto coeffs = [&](const nlohmann::json& a) {
        if (!a.is_array()) throw Error(ErrorCode::IoError, "expected a coefficient list");
        std::vector<Rational> c;
        for (const auto& x : a) c.push_back(rational(x));
        return UniPoly(c);
    };
    for (const char* key : {"q", "v", "gamma"})
        if (!j.contains(key)) throw Error(ErrorCode::IoError, std::string("missing field \"") + key + "\"");
    ZeroDimParam p;
    p.q = coeffs(j["q"]);
    p.denominator = j.contains("denominator") ? coeffs(j["denominator"]) : p.q.derivative();
    if (!j["v"].is_array()) throw Error(ErrorCode::IoError, "\"v\" must be a list");
    for (const auto& v : j["v"]) p.v.push_back(coeffs(v));
    if (!j["gamma"].is_array()) throw Error(ErrorCode::IoError, "\"gamma\" must be a list");
    for (const auto& g : j["gamma"]) p.gamma.push_back(rational(g));
    return p;
}

}  // namespace symalg
