#include "symalg/realroot.hpp"

#include <algorithm>
#include <numeric>

namespace symalg {

namespace {

template <class R>
struct Ring;

template <>
struct Ring<Rational> {
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct Ring<UniPoly> {
    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(1); }
    static bool is_zero(const UniPoly& a) { return a.is_zero(); }
    static UniPoly div(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw Error(ErrorCode::NonTermination, "inexact division in subresultant recursion");
        return q;
    }
};

template <class R>
void trim(DensePoly<R>& p) {
    while (!p.empty() && Ring<R>::is_zero(p.back())) p.pop_back();
}

template <class R>
int deg(const DensePoly<R>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class R>
R lcof(const DensePoly<R>& p) {
    return p.empty() ? Ring<R>::zero() : p.back();
}

template <class R>
DensePoly<R> scale(DensePoly<R> p, const R& c) {
    for (auto& x : p) x = x * c;
    trim(p);
    return p;
}

template <class R>
DensePoly<R> exact_div(DensePoly<R> p, const R& c) {
    for (auto& x : p) x = Ring<R>::div(x, c);
    return p;
}

template <class R>
R power(const R& a, int e) {
    R r = Ring<R>::one();
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

// lc(B)^(deg A - deg B + 1) * A mod B, computed without division.
template <class R>
DensePoly<R> prem(DensePoly<R> r, const DensePoly<R>& B) {
    const int db = deg(B);
    int e = deg(r) - db + 1;
    if (e <= 0) return r;
    const R lb = lcof(B);
    while (!r.empty() && deg(r) >= db) {
        R c = lcof(r);
        int shift = deg(r) - db;
        for (auto& x : r) x = x * lb;
        for (int k = 0; k <= db; ++k) r[shift + k] = r[shift + k] - c * B[k];
        r.pop_back();
        trim(r);
        --e;
    }
    return scale(r, power(lb, e));
}

// -Rem(c * A, B) / d, exact.
template <class R>
DensePoly<R> neg_rem_div(const R& c, const DensePoly<R>& A, const DensePoly<R>& B, const R& d) {
    int e = std::max(deg(A) - deg(B) + 1, 0);
    DensePoly<R> r = prem(scale(A, c), B);
    R den = d * power(lcof(B), e);
    r = exact_div(r, den);
    for (auto& x : r) x = Ring<R>::zero() - x;
    trim(r);
    return r;
}

}  // namespace

template <class R>
SubresultantSeq<R> signed_subresultants(const DensePoly<R>& P0, const DensePoly<R>& Q0) {
    DensePoly<R> P = P0, Q = Q0;
    trim(P);
    trim(Q);
    const int p = deg(P);
    if (p < 0) throw Error(ErrorCode::ZeroPolynomial, "subresultants of the zero polynomial");
    if (deg(Q) >= p) throw Error(ErrorCode::DimensionMismatch, "subresultants need deg Q < deg P");

    std::vector<DensePoly<R>> S(p + 1);
    std::vector<R> s(p + 1, Ring<R>::zero()), t(p + 1, Ring<R>::zero());
    S[p] = P;
    s[p] = t[p] = Ring<R>::one();
    if (p >= 1) {
        S[p - 1] = Q;
        t[p - 1] = lcof(Q);
        s[p - 1] = deg(Q) == p - 1 ? t[p - 1] : Ring<R>::zero();
        int i = p + 1, j = p;
        while (j >= 1 && !S[j - 1].empty()) {
            const int k = deg(S[j - 1]);
            if (k == j - 1) {
                s[j - 1] = t[j - 1];
                if (k >= 1) S[k - 1] = neg_rem_div(R(s[j - 1] * s[j - 1]), S[i - 1], S[j - 1], R(s[j] * t[i - 1]));
            } else {
                s[j - 1] = Ring<R>::zero();
                for (int delta = 1; delta <= j - k - 1; ++delta) {
                    R v = Ring<R>::div(R(t[j - 1] * t[j - delta]), s[j]);
                    t[j - delta - 1] = delta % 2 ? R(Ring<R>::zero() - v) : v;
                }
                s[k] = t[k];
                for (int l = j - 2; l >= k + 1; --l) {
                    S[l].clear();
                    s[l] = Ring<R>::zero();
                }
                S[k] = exact_div(scale(S[j - 1], s[k]), t[j - 1]);
                if (k >= 1) S[k - 1] = neg_rem_div(R(t[j - 1] * s[k]), S[i - 1], S[j - 1], R(s[j] * t[i - 1]));
            }
            if (k >= 1) t[k - 1] = lcof(S[k - 1]);
            i = j;
            j = k;
        }
        for (int l = j - 2; l >= 0; --l) {
            S[l].clear();
            s[l] = Ring<R>::zero();
        }
    }
    SubresultantSeq<R> out;
    for (int j = p; j >= 0; --j) {
        out.polys.push_back(S[j]);
        out.principal.push_back(j == p ? lcof(P) : s[j]);
    }
    return out;
}

template SubresultantSeq<Rational> signed_subresultants(const DensePoly<Rational>&, const DensePoly<Rational>&);
template SubresultantSeq<UniPoly> signed_subresultants(const DensePoly<UniPoly>&, const DensePoly<UniPoly>&);

int pmv(const std::vector<int>& signs) {
    int total = 0;
    int prev = -1;  // position of the previous nonzero entry
    for (int i = 0; i < static_cast<int>(signs.size()); ++i) {
        if (signs[i] == 0) continue;
        if (prev >= 0) {
            int gap = i - prev;
            if (gap % 2 == 1) {
                int eps = ((gap * (gap - 1) / 2) % 2) ? -1 : 1;
                total += eps * signs[prev] * signs[i];
            }
        }
        prev = i;
    }
    return total;
}

UniPoly squarefree_part(const UniPoly& q) {
    if (q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of the zero polynomial");
    if (q.degree() == 0) return UniPoly(1);
    return quo(q, gcd(q, q.derivative())).monic();
}

std::vector<UniPoly> SturmHabicht::all() const {
    std::vector<UniPoly> v;
    for (const auto& p : seq.polys) v.emplace_back(p);
    return v;
}

std::vector<UniPoly> SturmHabicht::regular_chain() const {
    auto v = all();
    std::vector<UniPoly> out;
    const int p = seq.p();
    out.push_back(v[0]);
    if (p == 0) return out;
    out.push_back(v[1]);
    if (v[1].degree() <= 0) return out;
    for (int j = p - 2; j >= 0; --j) {
        const UniPoly& s = v[p - j];
        if (s.is_zero() || s.degree() != j) continue;
        out.push_back(s);
        if (j == 0) break;
    }
    return out;
}

int SturmHabicht::cauchy_index() const {
    std::vector<int> signs;
    for (const auto& c : seq.principal) signs.push_back(sign(c));
    return pmv(signs);
}

SturmHabicht sturm_habicht(const UniPoly& q, const UniPoly& p) {
    if (q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm-Habicht sequence of the zero polynomial");
    UniPoly Q = p.degree() >= q.degree() ? rem(p, q) : p;
    return SturmHabicht{signed_subresultants<Rational>(q.coeffs(), Q.coeffs())};
}

namespace {

// Var(-inf) - Var(+inf) over the signed remainder sequence of (A, B).
int sturm_difference(const UniPoly& A, const UniPoly& B) {
    std::vector<UniPoly> seq{A.primitive()};
    UniPoly cur = B.primitive();
    while (!cur.is_zero()) {
        seq.push_back(cur);
        UniPoly next = (-rem(seq[seq.size() - 2], seq.back())).primitive();
        cur = std::move(next);
    }
    auto variations = [&](bool at_minus) {
        int v = 0, last = 0;
        for (const auto& s : seq) {
            int sg = sign(s.lc());
            if (at_minus && s.degree() % 2 == 1) sg = -sg;
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++v;
            last = sg;
        }
        return v;
    };
    return variations(true) - variations(false);
}

}  // namespace

int count_real_roots(const UniPoly& q) {
    if (q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of the zero polynomial");
    if (q.degree() == 0) return 0;
    return sturm_difference(q, q.derivative());
}

int tarski_query(const UniPoly& Q, const UniPoly& Z) {
    if (Z.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Tarski query against the zero polynomial");
    if (Z.degree() == 0) return 0;
    UniPoly B = rem(Z.derivative() * rem(Q, Z), Z);
    if (B.is_zero()) return 0;
    return sturm_difference(Z, B);
}

std::string sign_char(int s) { return s > 0 ? "+" : s < 0 ? "-" : "0"; }

std::string to_string(const ThomEncoding& e, std::size_t prefix) {
    std::size_t n = prefix == 0 ? e.signs.size() : std::min(prefix, e.signs.size());
    std::string out = "(";
    for (std::size_t i = 0; i < n; ++i) out += (i ? "," : "") + sign_char(e.signs[i]);
    return out + ")";
}

int thom_compare(const ThomEncoding& a, const ThomEncoding& b) {
    if (a.signs.size() != b.signs.size()) throw Error(ErrorCode::EncodingMismatch, "encodings of different lengths");
    int k = static_cast<int>(a.signs.size()) - 1;
    while (k >= 0 && a.signs[k] == b.signs[k]) --k;
    if (k < 0) return 0;
    // a.signs[k] is the sign of q^(k+1); the next derivative agrees on both.
    int next = k + 1 < static_cast<int>(a.signs.size()) ? a.signs[k + 1] : 0;
    if (next == 0) throw Error(ErrorCode::EncodingMismatch, "encodings are not comparable");
    bool less = next > 0 ? a.signs[k] < b.signs[k] : a.signs[k] > b.signs[k];
    return less ? -1 : 1;
}

SignDetermination::SignDetermination(UniPoly Z) : Z_(std::move(Z)) {
    if (Z_.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "sign determination needs a nonzero polynomial");
    Zd_ = Z_.derivative();
    long r = Z_.degree() > 0 ? tarski_query(UniPoly(1), Z_) : 0;
    if (r > 0) {
        sigma_.push_back({});
        counts_.push_back(r);
        ada_.push_back({});
        prod_.push_back(UniPoly(1));
        taq_.push_back(r);
    }
}

void SignDetermination::add(const UniPoly& P) {
    ++npolys_;
    if (sigma_.empty()) return;
    const UniPoly Pm = Z_.degree() > 0 ? rem(P, Z_) : P;
    const UniPoly P2 = rem(Pm * Pm, Z_);
    const std::size_t m = sigma_.size();
    static const int taus[3] = {0, 1, -1};

    // Rows ordered by beta first so the cheap beta = 0 rows are preferred.
    std::vector<std::pair<std::size_t, int>> rows;
    for (int beta = 0; beta < 3; ++beta)
        for (std::size_t a = 0; a < m; ++a) rows.emplace_back(a, beta);
    std::vector<UniPoly> row_prod(rows.size());
    std::vector<long> row_taq(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto [a, beta] = rows[r];
        if (beta == 0) {
            row_prod[r] = prod_[a];
            row_taq[r] = taq_[a];
        } else {
            row_prod[r] = rem(prod_[a] * (beta == 1 ? Pm : P2), Z_);
            row_taq[r] = tarski_query(row_prod[r], Z_);
        }
    }
    auto entry = [&](std::size_t r, std::size_t c) -> Rational {
        auto [a, beta] = rows[r];
        std::size_t sg = c / 3;
        int tau = taus[c % 3];
        int v = 1;
        for (std::size_t i = 0; i < ada_[a].size(); ++i)
            for (int e = 0; e < ada_[a][i]; ++e) v *= sigma_[sg][i];
        for (int e = 0; e < beta; ++e) v *= tau;
        return v;
    };
    const std::size_t N = 3 * m;
    QMatrix M(N, N);
    QVector rhs(N);
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) M(r, c) = entry(r, c);
        rhs[r] = row_taq[r];
    }
    auto sol = solve(M, rhs);
    if (!sol) throw Error(ErrorCode::NonTermination, "sign determination system is singular");

    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < N; ++c) {
        const Rational& v = (*sol)[c];
        if (v.get_den() != 1 || v < 0) throw Error(ErrorCode::NonTermination, "sign determination produced a non-count");
        if (v > 0) kept.push_back(c);
    }

    // Greedy choice of rows that keep the restricted matrix invertible.
    std::vector<std::size_t> chosen;
    QMatrix basis(0, 0);
    std::vector<QVector> echelon;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t r = 0; r < N && chosen.size() < kept.size(); ++r) {
        QVector v;
        for (std::size_t c : kept) v.push_back(entry(r, c));
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            std::size_t pc = pivot_cols[e];
            if (v[pc] != 0) {
                Rational f = v[pc] / echelon[e][pc];
                for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * echelon[e][c];
            }
        }
        std::size_t pc = 0;
        while (pc < v.size() && v[pc] == 0) ++pc;
        if (pc == v.size()) continue;
        echelon.push_back(v);
        pivot_cols.push_back(pc);
        chosen.push_back(r);
    }

    std::vector<std::vector<int>> sigma;
    std::vector<long> counts;
    for (std::size_t c : kept) {
        auto cond = sigma_[c / 3];
        cond.push_back(taus[c % 3]);
        sigma.push_back(std::move(cond));
        counts.push_back((*sol)[c].get_num().get_si());
    }
    std::vector<std::vector<int>> ada;
    std::vector<UniPoly> prod;
    std::vector<long> taq;
    for (std::size_t r : chosen) {
        auto alpha = ada_[rows[r].first];
        alpha.push_back(rows[r].second);
        ada.push_back(std::move(alpha));
        prod.push_back(row_prod[r]);
        taq.push_back(row_taq[r]);
    }
    sigma_ = std::move(sigma);
    counts_ = std::move(counts);
    ada_ = std::move(ada);
    prod_ = std::move(prod);
    taq_ = std::move(taq);
}

ThomContext::ThomContext(const UniPoly& q) : q_(q), base_(squarefree_part(q)) {
    for (int k = 1; k <= q.degree(); ++k) base_.add(q.derivative(k));
    const auto& conds = base_.conditions();
    for (std::size_t c = 0; c < conds.size(); ++c) {
        if (base_.counts()[c] != 1)
            throw Error(ErrorCode::NonTermination, "derivative signs failed to separate the roots");
        enc_.push_back(ThomEncoding{conds[c]});
    }
    order_.resize(enc_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(),
              [&](std::size_t a, std::size_t b) { return thom_compare(enc_[a], enc_[b]) < 0; });
    std::vector<ThomEncoding> sorted;
    for (auto i : order_) sorted.push_back(enc_[i]);
    enc_ = std::move(sorted);
}

std::size_t ThomContext::index_of(const ThomEncoding& enc) const {
    for (std::size_t i = 0; i < enc_.size(); ++i)
        if (enc_[i] == enc) return i;
    throw Error(ErrorCode::EncodingMismatch, "encoding " + to_string(enc) + " does not describe a real root of " + to_string(q_));
}

std::vector<int> ThomContext::signs_at_roots(const UniPoly& p) const {
    if (enc_.empty()) return {};
    UniPoly r = rem(p, base_.modulus());
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->signs.find(r.coeffs());
        if (it != cache_->signs.end()) return it->second;
    }
    std::vector<int> out(enc_.size(), 0);
    if (!r.is_zero()) {
        if (r.degree() == 0) {
            std::fill(out.begin(), out.end(), sign(r.lc()));
        } else {
            SignDetermination sd = base_;
            sd.add(r);
            for (std::size_t i = 0; i < enc_.size(); ++i) {
                bool found = false;
                for (const auto& cond : sd.conditions()) {
                    if (std::equal(enc_[i].signs.begin(), enc_[i].signs.end(), cond.begin())) {
                        out[i] = cond.back();
                        found = true;
                        break;
                    }
                }
                if (!found) throw Error(ErrorCode::NonTermination, "lost a root while adding a polynomial");
            }
        }
    }
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->signs.emplace(r.coeffs(), out);
    return out;
}

int ThomContext::sign_at(const ThomEncoding& enc, const UniPoly& p) const {
    std::size_t i = index_of(enc);
    return signs_at_roots(p)[i];
}

std::vector<ThomEncoding> thom_encodings(const UniPoly& q) {
    if (q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Thom encodings of the zero polynomial");
    return ThomContext(q).encodings();
}

int sign_at(const UniPoly& q, const ThomEncoding& enc, const UniPoly& p) {
    if (q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "sign query at roots of the zero polynomial");
    return ThomContext(q).sign_at(enc, p);
}

BiPoly bipoly_from(const Polynomial& p, unsigned u_var, unsigned t_var) {
    std::vector<std::vector<Rational>> c;
    for (const auto& [m, v] : p.terms()) {
        unsigned a = m.exponent(u_var), b = m.exponent(t_var);
        if (a + b != m.degree()) throw Error(ErrorCode::ArityMismatch, "polynomial has variables besides u and T");
        if (c.size() <= a) c.resize(a + 1);
        if (c[a].size() <= b) c[a].resize(b + 1, Rational(0));
        c[a][b] += v;
    }
    BiPoly out;
    for (auto& x : c) out.emplace_back(std::move(x));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

Polynomial to_polynomial(const BiPoly& b, unsigned u_var, unsigned t_var) {
    unsigned n = std::max(u_var, t_var);
    Polynomial p(n);
    for (std::size_t a = 0; a < b.size(); ++a)
        for (int k = 0; k <= b[a].degree(); ++k) {
            std::vector<unsigned> ex(n, 0);
            ex[u_var - 1] = static_cast<unsigned>(a);
            ex[t_var - 1] = static_cast<unsigned>(k);
            p.add_term(Monomial(ex), b[a][k]);
        }
    return p.with_nvars(n);
}

namespace {

BiPoly reduce_mod(BiPoly b, const UniPoly& Z) {
    for (auto& c : b) c = rem(c, Z);
    while (!b.empty() && b.back().is_zero()) b.pop_back();
    return b;
}

BiPoly u_derivative(const BiPoly& b) {
    BiPoly d;
    for (std::size_t a = 1; a < b.size(); ++a) d.push_back(b[a] * Rational(static_cast<long>(a)));
    while (!d.empty() && d.back().is_zero()) d.pop_back();
    return d;
}

struct ParamStep {
    int distinct;
    int gcd_degree;
    BiPoly gcd;
};

// Distinct real root count of rho(., theta) and the gcd with its derivative.
ParamStep param_step(const BiPoly& rho, const ThomContext& ctx, std::size_t root) {
    const int d = static_cast<int>(rho.size()) - 1;
    if (d < 0) throw Error(ErrorCode::ZeroPolynomial, "parametric count of the zero polynomial");
    if (ctx.signs_at_roots(rho.back())[root] == 0)
        throw Error(ErrorCode::LeadingCoefficientVanishes, "leading coefficient in u vanishes at the encoded root");
    if (d == 0) return {0, 0, rho};
    auto seq = signed_subresultants<UniPoly>(rho, u_derivative(rho));
    std::vector<int> signs;
    int lowest = -1;
    for (int j = d; j >= 0; --j) {
        int sg = ctx.signs_at_roots(seq.s(j))[root];
        signs.push_back(sg);
        if (sg != 0) lowest = j;
    }
    ParamStep st{pmv(signs), lowest, {}};
    if (lowest > 0) {
        const auto& g = seq.sres(lowest);
        st.gcd = BiPoly(g.begin(), g.end());
    }
    return st;
}

}  // namespace

int parametric_real_root_count(const BiPoly& rho, const ThomContext& ctx, const ThomEncoding& enc) {
    std::size_t root = ctx.index_of(enc);
    return param_step(reduce_mod(rho, squarefree_part(ctx.poly())), ctx, root).distinct;
}

int parametric_real_root_count(const BiPoly& rho, const UniPoly& q, const ThomEncoding& enc) {
    return parametric_real_root_count(rho, ThomContext(q), enc);
}

int parametric_real_root_count_mult(const BiPoly& rho, const ThomContext& ctx, const ThomEncoding& enc) {
    std::size_t root = ctx.index_of(enc);
    const UniPoly Z = squarefree_part(ctx.poly());
    BiPoly cur = reduce_mod(rho, Z);
    int total = 0;
    for (;;) {
        ParamStep st = param_step(cur, ctx, root);
        total += st.distinct;
        if (st.gcd_degree <= 0) return total;
        cur = reduce_mod(st.gcd, Z);
    }
}

}  // namespace symalg
