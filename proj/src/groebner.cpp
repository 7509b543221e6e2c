#include "symalg/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "symalg/error.hpp"

namespace symalg {

namespace {

// Exponents stored as the key (deg, -e_n, ..., -e_1) so that plain
// lexicographic comparison of keys is grevlex.
using Key = std::vector<int>;

struct Term {
    Key k;
    Integer c;
};

// Terms sorted by key descending, coefficients coprime.
using GPoly = std::vector<Term>;

Key key_of(const Monomial& m, unsigned n) {
    Key k(n + 1);
    k[0] = static_cast<int>(m.degree());
    for (unsigned i = 1; i <= n; ++i) k[n + 1 - i] = -static_cast<int>(m.exponent(i));
    return k;
}

Monomial monomial_of(const Key& k) {
    unsigned n = static_cast<unsigned>(k.size()) - 1;
    std::vector<unsigned> e(n);
    for (unsigned i = 1; i <= n; ++i) e[i - 1] = static_cast<unsigned>(-k[n + 1 - i]);
    return Monomial(e);
}

bool key_divides(const Key& a, const Key& b) {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (-a[i] > -b[i]) return false;
    return true;
}

Key key_mul(const Key& a, const Key& b) {
    Key k(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) k[i] = a[i] + b[i];
    return k;
}

Key key_div(const Key& a, const Key& b) {
    Key k(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) k[i] = a[i] - b[i];
    return k;
}

Key key_lcm(const Key& a, const Key& b) {
    Key k(a.size());
    k[0] = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
        k[i] = std::min(a[i], b[i]);
        k[0] -= k[i];
    }
    return k;
}

bool key_coprime(const Key& a, const Key& b) {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

void make_primitive(GPoly& p) {
    if (p.empty()) return;
    Integer g = 0;
    for (const auto& t : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    if (p.front().c < 0) g = -g;
    if (g != 1)
        for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

GPoly from_polynomial(const Polynomial& f, unsigned n) {
    Integer den = 1;
    for (const auto& [m, c] : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    GPoly p;
    for (const auto& [m, c] : f.terms()) {
        Rational s = c * den;
        p.push_back({key_of(m, n), s.get_num()});
    }
    std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return a.k > b.k; });
    make_primitive(p);
    return p;
}

Polynomial to_monic_polynomial(const GPoly& p, unsigned n) {
    Polynomial f(n);
    if (p.empty()) return f;
    Rational lc(p.front().c);
    for (const auto& t : p) f.add_term(monomial_of(t.k), Rational(t.c) / lc);
    return f;
}

// a*f - b*m*g, merged in key order.
GPoly combine(const GPoly& f, const Integer& a, const GPoly& g, const Integer& b, const Key& m) {
    GPoly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back({f[i].k, a * f[i].c});
            ++i;
            continue;
        }
        Key gk = key_mul(g[j].k, m);
        if (i == f.size() || gk > f[i].k) {
            out.push_back({std::move(gk), -b * g[j].c});
            ++j;
        } else if (gk == f[i].k) {
            Integer c = a * f[i].c - b * g[j].c;
            if (c != 0) out.push_back({f[i].k, std::move(c)});
            ++i;
            ++j;
        } else {
            out.push_back({f[i].k, a * f[i].c});
            ++i;
        }
    }
    return out;
}

// Full reduction of f by G, fraction free; the result is primitive.
GPoly reduce(GPoly f, const std::vector<const GPoly*>& G) {
    GPoly done;
    while (!f.empty()) {
        const GPoly* red = nullptr;
        for (const GPoly* g : G)
            if (!g->empty() && key_divides(g->front().k, f.front().k)) {
                red = g;
                break;
            }
        if (!red) {
            done.push_back(std::move(f.front()));
            f.erase(f.begin());
            continue;
        }
        Integer a = red->front().c, b = f.front().c, d;
        mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a /= d;
        b /= d;
        Key m = key_div(f.front().k, red->front().k);
        f = combine(f, a, *red, b, m);
        if (a != 1 && a != -1)
            for (auto& t : done) t.c *= a;
        else if (a == -1)
            for (auto& t : done) t.c = -t.c;
        // Keep coefficients small by removing the joint content.
        Integer g = 0;
        for (const auto& t : done) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        for (const auto& t : f) {
            if (g == 1) break;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        }
        if (g > 1) {
            for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
            for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
        }
    }
    make_primitive(done);
    return done;
}

GPoly spoly(const GPoly& f, const GPoly& g) {
    Key l = key_lcm(f.front().k, g.front().k);
    Integer a = g.front().c, b = f.front().c, d;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= d;
    b /= d;
    // a*(l/lm f)*f - b*(l/lm g)*g
    GPoly fm;
    Key mf = key_div(l, f.front().k);
    for (const auto& t : f) fm.push_back({key_mul(t.k, mf), t.c});
    GPoly r = combine(fm, a, g, b, key_div(l, g.front().k));
    make_primitive(r);
    return r;
}

struct Pair {
    std::size_t i, j;
    Key lcm;
};

std::vector<GPoly> buchberger(std::vector<GPoly> input) {
    std::vector<GPoly> G;
    std::vector<Pair> pairs;
    auto views = [&]() {
        std::vector<const GPoly*> v;
        for (const auto& g : G) v.push_back(&g);
        return v;
    };
    auto insert = [&](GPoly h) {
        const Key& H = h.front().k;
        // Chain criterion on the old pairs.
        std::vector<Pair> kept;
        for (auto& p : pairs) {
            if (key_divides(H, p.lcm) && key_lcm(G[p.i].front().k, H) != p.lcm &&
                key_lcm(G[p.j].front().k, H) != p.lcm)
                continue;
            kept.push_back(std::move(p));
        }
        pairs = std::move(kept);
        std::size_t hn = G.size();
        std::vector<Pair> fresh;
        std::vector<bool> coprime;
        for (std::size_t i = 0; i < G.size(); ++i) {
            fresh.push_back({i, hn, key_lcm(G[i].front().k, H)});
            coprime.push_back(key_coprime(G[i].front().k, H));
        }
        // Drop new pairs whose lcm is a proper multiple of another new lcm,
        // and keep one pair per lcm, preferring a coprime one.
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size() && !drop[a]; ++b) {
                if (a == b || drop[b]) continue;
                if (fresh[a].lcm == fresh[b].lcm) {
                    if (coprime[b] || (!coprime[a] && b < a)) drop[a] = true;
                } else if (key_divides(fresh[b].lcm, fresh[a].lcm)) {
                    drop[a] = true;
                }
            }
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a] && !coprime[a]) pairs.push_back(std::move(fresh[a]));
        G.push_back(std::move(h));
    };

    for (auto& f : input) {
        GPoly r = reduce(std::move(f), views());
        if (r.empty()) continue;
        if (r.front().k[0] == 0) return {r};
        insert(std::move(r));
    }
    while (!pairs.empty()) {
        // Normal strategy: smallest lcm first.
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.lcm < b.lcm; });
        Pair p = *it;
        pairs.erase(it);
        GPoly r = reduce(spoly(G[p.i], G[p.j]), views());
        if (r.empty()) continue;
        if (r.front().k[0] == 0) return {r};
        insert(std::move(r));
    }

    // Minimal, then reduced.
    std::vector<GPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j || !key_divides(G[j].front().k, G[i].front().k)) continue;
            redundant = G[j].front().k != G[i].front().k || j < i;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<GPoly> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<const GPoly*> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(&minimal[j]);
        // Minimality keeps the head irreducible, so only the tail changes.
        GPoly r = reduce(minimal[i], others);
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const GPoly& a, const GPoly& b) { return a.front().k > b.front().k; });
    return out;
}

}  // namespace

int grevlex_compare(const Monomial& a, const Monomial& b) {
    unsigned n = std::max(a.max_var(), b.max_var());
    Key ka = key_of(a, n), kb = key_of(b, n);
    return ka < kb ? -1 : ka > kb ? 1 : 0;
}

Monomial grevlex_leading(const Polynomial& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading monomial of the zero polynomial");
    Monomial best = p.terms().begin()->first;
    for (const auto& [m, c] : p.terms())
        if (grevlex_compare(m, best) > 0) best = m;
    return best;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& fs, unsigned nvars) {
    std::vector<GPoly> in;
    for (const auto& f : fs) {
        if (f.max_var() > nvars) throw Error(ErrorCode::ArityMismatch, "polynomial uses more variables than declared");
        if (!f.is_zero()) in.push_back(from_polynomial(f, nvars));
    }
    // Cheap inputs first tends to keep intermediate growth down.
    std::stable_sort(in.begin(), in.end(), [](const GPoly& a, const GPoly& b) { return a.front().k < b.front().k; });
    std::vector<Polynomial> out;
    for (const auto& g : buchberger(std::move(in))) out.push_back(to_monic_polynomial(g, nvars));
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, unsigned nvars) {
    if (f.is_zero()) return Polynomial(nvars);
    // Rational division, so the result is the true remainder, not a multiple.
    std::vector<std::pair<Monomial, Polynomial>> lead;
    for (const auto& g : G) {
        Monomial m = grevlex_leading(g);
        lead.emplace_back(m, g * (Rational(1) / g.coeff(m)));
    }
    std::map<Key, std::pair<Monomial, Rational>, std::greater<Key>> work;
    for (const auto& [m, c] : f.terms()) work[key_of(m, nvars)] = {m, c};
    Polynomial r(nvars);
    while (!work.empty()) {
        auto it = work.begin();
        auto [m, c] = it->second;
        work.erase(it);
        const Polynomial* red = nullptr;
        Monomial lm;
        for (const auto& [lmg, g] : lead)
            if (lmg.divides(m)) {
                red = &g;
                lm = lmg;
                break;
            }
        if (!red) {
            r.add_term(m, c);
            continue;
        }
        Monomial q = m / lm;
        for (const auto& [gm, gc] : red->terms()) {
            if (gm == lm) continue;
            Monomial mm = gm * q;
            Key k = key_of(mm, nvars);
            auto jt = work.find(k);
            Rational v = -c * gc;
            if (jt == work.end()) {
                work.emplace(std::move(k), std::make_pair(mm, v));
            } else {
                jt->second.second += v;
                if (jt->second.second == 0) work.erase(jt);
            }
        }
    }
    return r.with_nvars(nvars);
}

bool is_zero_dimensional(const std::vector<Polynomial>& G, unsigned nvars) {
    for (unsigned i = 1; i <= nvars; ++i) {
        bool found = false;
        for (const auto& g : G) {
            Monomial m = grevlex_leading(g);
            if (m.degree() == m.exponent(i)) found = true;  // pure power (or 1)
        }
        if (!found) return false;
    }
    return true;
}

std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& G, unsigned nvars) {
    if (!is_zero_dimensional(G, nvars))
        throw Error(ErrorCode::PositiveDimensional, "the quotient ring is infinite dimensional");
    std::vector<Monomial> leads;
    for (const auto& g : G) leads.push_back(grevlex_leading(g));
    auto is_standard = [&](const Monomial& m) {
        for (const auto& l : leads)
            if (l.divides(m)) return false;
        return true;
    };
    std::vector<Monomial> out;
    if (!is_standard(Monomial())) return out;
    // Breadth-first over the order ideal; it is closed under division.
    std::vector<Monomial> frontier{Monomial()};
    std::map<Key, Monomial> seen;
    seen.emplace(key_of(Monomial(), nvars), Monomial());
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& m : frontier)
            for (unsigned i = 1; i <= nvars; ++i) {
                Monomial mm = m * Monomial::var(i);
                if (!is_standard(mm)) continue;
                if (seen.emplace(key_of(mm, nvars), mm).second) next.push_back(mm);
            }
        frontier = std::move(next);
    }
    for (const auto& [k, m] : seen) out.push_back(m);
    return out;
}

}  // namespace symalg
