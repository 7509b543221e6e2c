#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "symalg/linalg.hpp"
#include "symalg/unipoly.hpp"

namespace symalg {

// q / gcd(q, q'), monic.
UniPoly squarefree_part(const UniPoly& q);

// Signed subresultants of (P, Q) with deg Q < deg P = p, over a coefficient
// ring R (Rational, or UniPoly for coefficients in Q[T]). polys[i] holds
// sResP_{p-i}; principal[i] is its coefficient of X^{p-i}, except that the
// top entry is lc(P) so that sign counts come out right for any sign of lc(P).
template <class R>
struct SubresultantSeq {
    std::vector<std::vector<R>> polys;
    std::vector<R> principal;

    int p() const { return static_cast<int>(polys.size()) - 1; }
    const std::vector<R>& sres(int j) const { return polys[p() - j]; }
    const R& s(int j) const { return principal[p() - j]; }
};

// Dense polynomial in X with coefficients in R, ascending.
template <class R>
using DensePoly = std::vector<R>;

template <class R>
SubresultantSeq<R> signed_subresultants(const DensePoly<R>& P, const DensePoly<R>& Q);

// Sign-count rule over the principal coefficient signs, highest index first.
int pmv(const std::vector<int>& signs);

// Signed subresultant sequence of (q, p) over Q. If deg p >= deg q, p is first
// reduced modulo q, which leaves the Cauchy index Ind(p/q) unchanged.
struct SturmHabicht {
    SubresultantSeq<Rational> seq;

    std::vector<UniPoly> all() const;
    // First two entries, then the nonzero entries whose degree equals their
    // index, stopping after the first constant.
    std::vector<UniPoly> regular_chain() const;
    // Ind(p/q) via the sign-count rule.
    int cauchy_index() const;
};

SturmHabicht sturm_habicht(const UniPoly& q, const UniPoly& p);

// Distinct real roots.
int count_real_roots(const UniPoly& q);

// TaQ(Q, Z) = sum over real roots x of Z of sign(Q(x)); Z squarefree.
int tarski_query(const UniPoly& Q, const UniPoly& Z);

struct ThomEncoding {
    // signs[k-1] = sign of q^(k) at the root, k = 1..deg q.
    std::vector<int> signs;

    bool operator==(const ThomEncoding& o) const { return signs == o.signs; }
};

// "(+,-,+)"; prefix 0 prints everything.
std::string to_string(const ThomEncoding& e, std::size_t prefix = 0);
std::string sign_char(int s);

// Root order from the encodings alone: -1, 0 or +1 for x <, =, > x'.
int thom_compare(const ThomEncoding& a, const ThomEncoding& b);

// Realized sign conditions of a list of polynomials on the real roots of Z,
// maintained incrementally.
class SignDetermination {
public:
    explicit SignDetermination(UniPoly Z);

    void add(const UniPoly& P);

    std::size_t num_polys() const { return npolys_; }
    // Each realized condition, with the number of roots realizing it.
    const std::vector<std::vector<int>>& conditions() const { return sigma_; }
    const std::vector<long>& counts() const { return counts_; }
    const UniPoly& modulus() const { return Z_; }

private:
    UniPoly Z_, Zd_;
    std::size_t npolys_ = 0;
    std::vector<std::vector<int>> sigma_;
    std::vector<long> counts_;
    std::vector<std::vector<int>> ada_;  // adapted exponents in {0,1,2}
    std::vector<UniPoly> prod_;          // prod P_i^{alpha_i} mod Z
    std::vector<long> taq_;
};

// Derivative sign conditions of q on its real roots, computed once and
// reused for any number of sign queries at those roots.
class ThomContext {
public:
    explicit ThomContext(const UniPoly& q);

    const UniPoly& poly() const { return q_; }
    // Ascending by root value.
    const std::vector<ThomEncoding>& encodings() const { return enc_; }
    std::size_t root_count() const { return enc_.size(); }

    // Signs of p at every real root, in encoding order.
    std::vector<int> signs_at_roots(const UniPoly& p) const;
    int sign_at(const ThomEncoding& enc, const UniPoly& p) const;
    // Position of enc in encodings(); throws EncodingMismatch.
    std::size_t index_of(const ThomEncoding& enc) const;

private:
    UniPoly q_;
    SignDetermination base_;
    std::vector<ThomEncoding> enc_;
    std::vector<std::size_t> order_;  // encoding index -> condition index

    // Queries repeat across roots and blocks; answers are memoized by the
    // reduced polynomial. Shared so copies of a context share the cache.
    struct Cache {
        std::mutex mu;
        std::map<std::vector<Rational>, std::vector<int>> signs;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

std::vector<ThomEncoding> thom_encodings(const UniPoly& q);
int sign_at(const UniPoly& q, const ThomEncoding& enc, const UniPoly& p);

// Bivariate rho(u, T) stored by powers of u with coefficients in Q[T].
using BiPoly = std::vector<UniPoly>;
BiPoly bipoly_from(const Polynomial& p, unsigned u_var = 1, unsigned t_var = 2);
Polynomial to_polynomial(const BiPoly& b, unsigned u_var = 1, unsigned t_var = 2);

// Distinct real roots of rho(., theta) at the root theta of q encoded by enc.
int parametric_real_root_count(const BiPoly& rho, const UniPoly& q, const ThomEncoding& enc);
int parametric_real_root_count(const BiPoly& rho, const ThomContext& ctx, const ThomEncoding& enc);

// Real roots counted with multiplicity, via the chain of gcds with the
// u-derivative taken at theta.
int parametric_real_root_count_mult(const BiPoly& rho, const ThomContext& ctx, const ThomEncoding& enc);

}  // namespace symalg
