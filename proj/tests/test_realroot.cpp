#include <gtest/gtest.h>

#include <random>

#include "../src/isolate.hpp"
#include "oracles/descartes.hpp"
#include "oracles/subresultant_det.hpp"
#include "symalg/realroot.hpp"
#include "test_util.hpp"

using namespace symalg;
namespace st = symalg::testing;

namespace {

UniPoly T(const std::string& s) { return parse_unipoly(s); }

ThomEncoding enc(std::vector<int> s) { return ThomEncoding{std::move(s)}; }

std::vector<std::string> enc_strings(const std::vector<ThomEncoding>& es, std::size_t prefix = 0) {
    std::vector<std::string> out;
    for (const auto& e : es) out.push_back(to_string(e, prefix));
    return out;
}

// Random polynomial of degree <= 8, sometimes with repeated factors.
UniPoly random_case(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(1, 8), kind(0, 3);
    if (kind(rng) == 0) {
        UniPoly a = symalg::testing::rand_unipoly(rng, 1 + d(rng) % 3, 4);
        UniPoly b = symalg::testing::rand_unipoly(rng, 1 + d(rng) % 2, 4);
        return a * a * b;
    }
    return symalg::testing::rand_unipoly(rng, d(rng), 9);
}

}  // namespace

TEST(Squarefree, Examples) {
    EXPECT_EQ(squarefree_part(UniPoly::from_roots({1, 1, 2})), UniPoly::from_roots({1, 2}));
    EXPECT_EQ(squarefree_part(T("2*T^2 - 4")), T("T^2 - 2"));
    EXPECT_EQ(squarefree_part(T("T^4")), T("T"));
    EXPECT_EQ(squarefree_part(T("5")), T("1"));
    EXPECT_THROW(squarefree_part(UniPoly()), Error);
}

TEST(Squarefree, KeepsDistinctRoots) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
        UniPoly q = random_case(rng);
        UniPoly z = squarefree_part(q);
        EXPECT_TRUE(rem(q, z).is_zero());
        EXPECT_EQ(gcd(z, z.derivative()), T("1"));
        EXPECT_EQ(oracle::isolate(q).size(), oracle::isolate(z).size());
    }
}

TEST(SturmHabicht, QuadraticChain) {
    auto sh = sturm_habicht(T("T^2 - 2"), T("2*T"));
    auto all = sh.all();
    ASSERT_EQ(all.size(), 3u);
    EXPECT_EQ(all[0], T("T^2 - 2"));
    EXPECT_EQ(all[1], T("2*T"));
    EXPECT_EQ(all[2], T("8"));
    EXPECT_EQ(sh.cauchy_index(), 2);
}

TEST(SturmHabicht, DegenerateShapes) {
    EXPECT_EQ(sturm_habicht(T("3"), T("1")).all().size(), 1u);
    auto sh = sturm_habicht(T("T^3 - 3*T + 1"), T("1"));
    EXPECT_EQ(sh.regular_chain().size(), 2u);
    EXPECT_THROW(sturm_habicht(UniPoly(), T("1")), Error);
}

TEST(SturmHabicht, SignCountExamples) {
    EXPECT_EQ(pmv({1, 1, 1}), 2);
    EXPECT_EQ(pmv({1, 0, 0, -1}), 1);
    EXPECT_EQ(sturm_habicht(T("T^3"), T("1")).cauchy_index(), 1);
    EXPECT_EQ(sturm_habicht(T("T^2"), T("1")).cauchy_index(), 0);
    EXPECT_EQ(pmv({1, 0, 1}), 0);
}

TEST(SturmHabicht, MatchesDeterminantDefinition) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dp(1, 7);
    for (int it = 0; it < 60; ++it) {
        int p = dp(rng);
        std::uniform_int_distribution<int> dq(0, p - 1);
        UniPoly P = symalg::testing::rand_unipoly(rng, p, 5);
        UniPoly Q = symalg::testing::rand_unipoly(rng, dq(rng), 5);
        if (it % 3 == 0) Q = rem(P.derivative() * Q, P);  // sometimes a big gap
        if (Q.is_zero()) continue;
        auto seq = signed_subresultants<Rational>(P.coeffs(), Q.coeffs());
        const int q = Q.degree();
        EXPECT_EQ(UniPoly(seq.sres(p)), P);
        if (p >= 1) EXPECT_EQ(UniPoly(seq.sres(p - 1)), Q);
        for (int j = q; j >= 0; --j) {
            if (j == p - 1) continue;
            UniPoly expect = oracle::subresultant_det(P, Q, j);
            EXPECT_EQ(UniPoly(seq.sres(j)), expect) << to_string(P) << " / " << to_string(Q) << " j=" << j;
            EXPECT_EQ(seq.s(j), expect[j]);
        }
        for (int j = q + 1; j < p - 1; ++j) EXPECT_TRUE(UniPoly(seq.sres(j)).is_zero());
    }
}

TEST(SturmHabicht, SpecializationCommutesOverQT) {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 30; ++it) {
        int p = 2 + it % 4;
        BiPoly P, Q;
        for (int i = 0; i <= p; ++i) P.push_back(symalg::testing::rand_unipoly(rng, it % 3, 4));
        for (int i = 0; i < p; ++i) Q.push_back(symalg::testing::rand_unipoly(rng, it % 2, 4));
        Rational t0 = symalg::testing::rand_rational(rng);
        if (P.back().evaluate(t0) == 0 || Q.back().evaluate(t0) == 0) continue;
        auto seq = signed_subresultants<UniPoly>(P, Q);
        std::vector<Rational> Pt, Qt;
        for (auto& c : P) Pt.push_back(c.evaluate(t0));
        for (auto& c : Q) Qt.push_back(c.evaluate(t0));
        auto ref = signed_subresultants<Rational>(Pt, Qt);
        for (int j = p; j >= 0; --j) {
            std::vector<Rational> spec;
            for (auto& c : seq.sres(j)) spec.push_back(c.evaluate(t0));
            EXPECT_EQ(UniPoly(spec), UniPoly(ref.sres(j)));
            EXPECT_EQ(seq.s(j).evaluate(t0), ref.s(j));
        }
    }
}

TEST(CountRealRoots, Examples) {
    EXPECT_EQ(count_real_roots(T("T^3 - 3*T + 1")), 3);
    EXPECT_EQ(count_real_roots(T("T^2 + 1")), 0);
    EXPECT_EQ(count_real_roots(UniPoly::from_roots({1, 2, 3})), 3);
    EXPECT_EQ(count_real_roots(UniPoly::from_roots({1, 1, 2})), 2);
    EXPECT_THROW(count_real_roots(UniPoly()), Error);
}

TEST(CountRealRoots, AgreesWithDescartesOracle) {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 200; ++it) {
        UniPoly q = random_case(rng);
        auto iv = oracle::isolate(q);
        EXPECT_EQ(count_real_roots(q), static_cast<int>(iv.size())) << to_string(q);
        EXPECT_EQ(sturm_habicht(squarefree_part(q), squarefree_part(q).derivative()).cauchy_index(),
                  static_cast<int>(iv.size()));
        Rational w(1, 1ul << 40);
        for (const auto& i : iv) {
            auto r = oracle::refine(oracle::radical(q), i, w);
            EXPECT_LE(r.hi - r.lo, w);
        }
    }
}

TEST(TarskiQuery, AgreesWithOracle) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 60; ++it) {
        UniPoly Z = squarefree_part(random_case(rng));
        UniPoly Q = symalg::testing::rand_unipoly(rng, 1 + it % 5, 5);
        int expect = 0;
        for (const auto& iv : oracle::isolate(Z)) expect += oracle::sign_at_root(Z, iv, Q);
        EXPECT_EQ(tarski_query(Q, Z), expect);
    }
}

TEST(Thom, CubicEncodings) {
    auto es = thom_encodings(T("T^3 - 3*T + 1"));
    ASSERT_EQ(es.size(), 3u);
    EXPECT_EQ(enc_strings(es, 2), (std::vector<std::string>{"(+,-)", "(-,+)", "(+,+)"}));
}

TEST(Thom, QuadraticEncodings) {
    auto es = thom_encodings(T("T^2 - 2"));
    EXPECT_EQ(enc_strings(es), (std::vector<std::string>{"(-,+)", "(+,+)"}));
    EXPECT_TRUE(thom_encodings(T("T^2 + 1")).empty());
    EXPECT_THROW(thom_encodings(UniPoly()), Error);
}

TEST(Thom, SignsAtCubicRoots) {
    UniPoly q = T("T^3 - 3*T + 1");
    ThomContext ctx(q);
    EXPECT_EQ(ctx.signs_at_roots(T("T^2 - 2")), (std::vector<int>{1, -1, 1}));
    for (const auto& e : ctx.encodings()) {
        EXPECT_EQ(sign_at(q, e, q), 0);
        EXPECT_EQ(sign_at(q, e, T("-7/2")), -1);
    }
    EXPECT_THROW(sign_at(q, enc({-1, -1, 1}), T("T")), Error);
}

TEST(Thom, EncodingsMatchOracle) {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 60; ++it) {
        UniPoly q = random_case(rng);
        ThomContext ctx(q);
        auto iv = oracle::isolate(q);
        ASSERT_EQ(ctx.root_count(), iv.size());
        const auto& es = ctx.encodings();
        for (std::size_t i = 0; i < es.size(); ++i) {
            ASSERT_EQ(es[i].signs.size(), static_cast<std::size_t>(q.degree()));
            for (int k = 1; k <= q.degree(); ++k)
                EXPECT_EQ(es[i].signs[k - 1], oracle::sign_at_root(q, iv[i], q.derivative(k))) << to_string(q);
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                EXPECT_FALSE(es[i] == es[j]);
                EXPECT_EQ(thom_compare(es[i], es[j]), -1);
            }
        }
        UniPoly p = symalg::testing::rand_unipoly(rng, 1 + it % 6, 5);
        auto signs = ctx.signs_at_roots(p);
        for (std::size_t i = 0; i < es.size(); ++i) EXPECT_EQ(signs[i], oracle::sign_at_root(q, iv[i], p));
    }
}

TEST(Parametric, Examples) {
    UniPoly q = T("T^2 - 4");
    ThomContext ctx(q);
    auto es = ctx.encodings();  // roots -2, 2
    auto rho = [](const std::string& s) { return bipoly_from(parse(s, Names{"u", "T"})); };
    for (const auto& e : es) {
        EXPECT_EQ(parametric_real_root_count(rho("u^2 + 1"), ctx, e), 0);
        EXPECT_EQ(parametric_real_root_count(rho("u^2 - 1"), ctx, e), 2);
    }
    EXPECT_EQ(parametric_real_root_count(rho("u^2 - T"), q, es[1]), 2);
    EXPECT_EQ(parametric_real_root_count(rho("u^2 - T"), q, es[0]), 0);
    EXPECT_EQ(parametric_real_root_count(rho("u^2 - T - 2"), q, es[0]), 1);
    EXPECT_THROW(parametric_real_root_count(rho("(T - 2)*u^2 + u"), q, es[1]), Error);
    try {
        parametric_real_root_count(rho("(T - 2)*u^2 + u"), q, es[1]);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LeadingCoefficientVanishes);
    }
}

TEST(Parametric, MultiplicityChain) {
    UniPoly q = T("T^2 - 4");
    ThomContext ctx(q);
    auto es = ctx.encodings();
    auto rho = bipoly_from(parse("(u - T)^2*(u + 1)", Names{"u", "T"}));
    EXPECT_EQ(parametric_real_root_count(rho, ctx, es[1]), 2);
    EXPECT_EQ(parametric_real_root_count_mult(rho, ctx, es[1]), 3);
    EXPECT_EQ(parametric_real_root_count_mult(rho, ctx, es[0]), 3);
    EXPECT_EQ(parametric_real_root_count(rho, ctx, es[0]), 2);
}

TEST(Parametric, AgreesWithRationalSpecialization) {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 40; ++it) {
        // rational roots so the specialization can be checked directly
        std::vector<Rational> roots{symalg::testing::rand_rational(rng), symalg::testing::rand_rational(rng)};
        if (roots[0] == roots[1]) continue;
        UniPoly q = UniPoly::from_roots(roots);
        ThomContext ctx(q);
        BiPoly rho;
        for (int i = 0; i <= 1 + it % 4; ++i) rho.push_back(symalg::testing::rand_unipoly(rng, it % 3, 4));
        for (std::size_t r = 0; r < ctx.root_count(); ++r) {
            Rational t0 = std::min(roots[0], roots[1]);
            if (r == 1) t0 = std::max(roots[0], roots[1]);
            std::vector<Rational> c;
            for (auto& x : rho) c.push_back(x.evaluate(t0));
            UniPoly spec(c);
            if (spec.degree() != static_cast<int>(rho.size()) - 1) continue;
            EXPECT_EQ(parametric_real_root_count(rho, ctx, ctx.encodings()[r]), count_real_roots(spec));
        }
    }
}

TEST(Isolation, HelperMatchesOracle) {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 80; ++it) {
        UniPoly q = random_case(rng);
        auto mine = detail::isolate_real_roots(q);
        auto ref = oracle::isolate(q);
        ASSERT_EQ(mine.size(), ref.size());
        for (std::size_t i = 0; i < mine.size(); ++i) {
            auto r = detail::refine_root(q, mine[i], Rational(1, 1 << 20));
            EXPECT_LE(r.hi - r.lo, Rational(1, 1 << 20));
            UniPoly z = squarefree_part(q);
            if (r.lo == r.hi)
                EXPECT_EQ(z.evaluate(r.lo), 0);
            else
                EXPECT_LE(sign(z.evaluate(r.lo)) * sign(z.evaluate(r.hi)), 0);
        }
    }
}
