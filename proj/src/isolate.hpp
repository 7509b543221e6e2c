#pragma once

#include <vector>

#include "symalg/realroot.hpp"

namespace symalg::detail {

// Half-open interval (lo, hi] holding exactly one root, or the point lo == hi.
struct RootInterval {
    Rational lo, hi;
};

class SturmChain {
public:
    explicit SturmChain(const UniPoly& q) {
        UniPoly a = squarefree_part(q), b = a.derivative();
        seq_.push_back(a);
        while (!b.is_zero()) {
            seq_.push_back(b);
            UniPoly r = -rem(seq_[seq_.size() - 2], b);
            b = r.is_zero() ? r : r.primitive();
        }
    }

    const UniPoly& poly() const { return seq_.front(); }

    int variations(const Rational& x) const {
        int v = 0, last = 0;
        for (const auto& s : seq_) {
            int sg = sign(s.evaluate(x));
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++v;
            last = sg;
        }
        return v;
    }

    // Roots in (a, b].
    int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

private:
    std::vector<UniPoly> seq_;
};

// 1 + max |c_i / lc|, a bound on the absolute value of every root.
inline Rational cauchy_bound(const UniPoly& q) {
    Rational m = 0;
    for (int i = 0; i < q.degree(); ++i) m = std::max(m, Rational(abs(q[i] / q.lc())));
    return m + 1;
}

inline std::vector<RootInterval> isolate_real_roots(const UniPoly& q) {
    std::vector<RootInterval> out;
    if (q.degree() <= 0) return out;
    SturmChain sc(q);
    Rational B = cauchy_bound(sc.poly());
    std::vector<RootInterval> work{{-B, B}};
    while (!work.empty()) {
        RootInterval iv = work.back();
        work.pop_back();
        int c = sc.count(iv.lo, iv.hi);
        if (c == 0) continue;
        if (c == 1) {
            out.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        work.push_back({mid, iv.hi});
        work.push_back({iv.lo, mid});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    for (auto& iv : out)
        if (sc.poly().evaluate(iv.hi) == 0) iv.lo = iv.hi;
    return out;
}

// Bisect until hi - lo <= width; exact roots collapse to a point.
inline RootInterval refine_root(const UniPoly& q, RootInterval iv, const Rational& width) {
    UniPoly z = squarefree_part(q);
    while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int smid = sign(z.evaluate(mid));
        if (smid == 0) return {mid, mid};
        if (smid == sign(z.evaluate(iv.hi)))
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

}  // namespace symalg::detail
