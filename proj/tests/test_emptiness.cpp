#include <gtest/gtest.h>

#include <random>

#include "symalg/emptiness.hpp"
#include "symalg/error.hpp"
#include "symalg/groebner.hpp"
#include "symalg/symfun.hpp"
#include "test_util.hpp"

using namespace symalg;
namespace st = symalg::testing;

namespace {

Polynomial p(unsigned k, unsigned n) { return basis_polynomial(BasisKind::PowerSum, k, n); }
Polynomial e(unsigned k, unsigned n) { return basis_polynomial(BasisKind::Elementary, k, n); }

// f at the parametrized points, as a polynomial in T reduced mod q.
UniPoly eval_mod_q(const Polynomial& f, const ZeroDimParam& param) {
    std::vector<UniPoly> coords;
    for (std::size_t i = 0; i < param.dimension(); ++i) coords.push_back(coordinate_poly(param, i));
    UniPoly out;
    for (const auto& [m, c] : f.terms()) {
        UniPoly t(c);
        for (unsigned i = 1; i <= m.max_var(); ++i)
            for (unsigned k = 0; k < m.exponent(i); ++k) t = rem(t * coords[i - 1], param.q);
        out += t;
    }
    return rem(out, param.q);
}

// Grid zero of fs with step 1/4 on [-3, 3]^n.
bool grid_has_zero(const std::vector<Polynomial>& fs, unsigned n) {
    std::vector<int> idx(n, -12);
    for (;;) {
        std::vector<Rational> x;
        for (int i : idx) x.push_back(Rational(i, 4));
        bool all = true;
        for (const auto& f : fs)
            if (f.evaluate(x) != 0) {
                all = false;
                break;
            }
        if (all) return true;
        std::size_t k = 0;
        while (k < n && ++idx[k] > 12) idx[k++] = -12;
        if (k == n) return false;
    }
}

}  // namespace

TEST(Objective, OddBlockGetsTopPowerSum) {
    Partition lam({1, 1, 1});
    auto spec = build_objective(lam, {{Rational(2), Rational(3), Rational(5)}});
    ASSERT_EQ(spec.c, std::vector<int>{1});
    Polynomial want = p(4, 3) + 2 * p(1, 3) + 3 * p(2, 3) + 5 * p(3, 3);
    EXPECT_EQ(spec.phi, want);
}

TEST(Objective, EvenBlockHasNoTopTerm) {
    auto spec = build_objective(Partition({1, 1}), {{Rational(7), Rational(11)}});
    EXPECT_EQ(spec.c, std::vector<int>{0});
    EXPECT_EQ(spec.phi, 7 * p(1, 2) + 11 * p(2, 2));
}

TEST(Objective, EvenDegreeAndBlockSymmetric) {
    std::mt19937_64 rng(3);
    for (unsigned n = 1; n <= 6; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            auto spec = build_objective(lam, rng);
            EXPECT_EQ(spec.phi.degree() % 2, 0) << to_string(lam);
            EXPECT_TRUE(is_block_symmetric(spec.phi, lambda_blocks(lam))) << to_string(lam);
            for (const auto& row : spec.a)
                for (const auto& a : row) {
                    EXPECT_GE(a, 1);
                    EXPECT_LE(a, 1 << 20);
                }
        }
}

TEST(Objective, RejectsWrongShape) {
    EXPECT_THROW(build_objective(Partition({1, 2}), {{Rational(1)}}), Error);
}

TEST(Lagrange, CircleWithLinearObjective) {
    Polynomial g = parse("x1^2+x2^2-1", 2);
    auto sys = lagrange_system({g}, parse("x1", 2), 2);
    ASSERT_EQ(sys.nvars, 3u);
    ASSERT_EQ(sys.equations.size(), 3u);
    EXPECT_EQ(sys.equations[0], parse("x1^2+x2^2-1", 3));
    EXPECT_EQ(sys.equations[1], parse("2*x3*x1+1", 3));
    EXPECT_EQ(sys.equations[2], parse("2*x3*x2", 3));
    SolveOptions opts;
    opts.keep = std::vector<unsigned>{1, 2};
    auto pts = rational_points(solve_zero_dim(sys.equations, sys.nvars, opts));
    std::vector<std::vector<Rational>> want{{-1, 0}, {1, 0}};
    std::sort(pts.begin(), pts.end());
    EXPECT_EQ(pts, want);
}

TEST(Lagrange, EmptyConstraintsGiveGradient) {
    Polynomial phi = parse("x1^2*x2+x2^3", 2);
    auto sys = lagrange_system({}, phi, 2);
    EXPECT_EQ(sys.multipliers, 0u);
    ASSERT_EQ(sys.equations.size(), 2u);
    EXPECT_EQ(sys.equations[0], phi.derivative(1));
    EXPECT_EQ(sys.equations[1], phi.derivative(2));
}

TEST(CriticalPoints, SingleVariableQuadratic) {
    auto op = critical_points_sym({}, parse("x1^2+5*x1", 1), Partition({1}), 1);
    EXPECT_EQ(op.param.degree(), 1);
    EXPECT_EQ(rational_points(op.param), (std::vector<std::vector<Rational>>{{Rational(-5, 2)}}));
}

// With two distinct coordinates the e2 equation forces a1 = 0, so the
// critical locus in symmetric coordinates is empty; the circle extrema of
// a1 p1 + a2 p2 sit on the wall x1 = x2 and are found on the pattern (2).
TEST(CriticalPoints, CircleExtremaLieOnTheWall) {
    Polynomial g = p(2, 2) - Polynomial(1, 2);
    std::mt19937_64 rng(9);
    auto obj = build_objective(Partition({1, 1}), rng);
    auto op = critical_points_sym({g}, obj.phi, Partition({1, 1}), 4);
    EXPECT_EQ(op.param.degree(), 0);
    EXPECT_FALSE(decide_real_preimage(op));

    Polynomial g2 = lambda_substitute(g, Partition({2}));
    auto obj2 = build_objective(Partition({2}), rng);
    auto op2 = critical_points_sym({g2}, obj2.phi, Partition({2}), 4);
    EXPECT_EQ(op2.param.degree(), 2);
    EXPECT_TRUE(decide_real_preimage(op2));
}

TEST(CriticalPoints, OutputSatisfiesLagrangeConditions) {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int trial = 0; trial < 6; ++trial) {
        const unsigned n = 3;
        Polynomial f = p(2, n) + Rational(trial + 1) * e(3, n) - Polynomial(Rational(trial + 2), n);
        for (const auto& lam : enumerate_partitions(n, 1u)) {
            Polynomial fl = lambda_substitute(f, lam);
            auto obj = build_objective(lam, rng);
            OrbitParam op;
            try {
                op = critical_points_sym({fl}, obj.phi, lam, rng());
            } catch (const Error& err) {
                continue;
            }
            ASSERT_TRUE(validate(op.param)) << validate(op.param).diagnostic;
            if (op.param.degree() <= 0) continue;
            BlockStructure bs = lambda_blocks(lam);
            const unsigned l = bs.total();
            Polynomial G = ftsp_rewrite(fl, BasisKind::Elementary, bs).with_nvars(l);
            Polynomial Phi = ftsp_rewrite(obj.phi, BasisKind::Elementary, bs).with_nvars(l);
            ++checked;
            EXPECT_TRUE(eval_mod_q(G, op.param).is_zero());
            // grad Phi parallel to grad G: all 2x2 minors vanish.
            for (unsigned j = 1; j <= l; ++j)
                for (unsigned k = j + 1; k <= l; ++k) {
                    Polynomial minor = Phi.derivative(j) * G.derivative(k) - Phi.derivative(k) * G.derivative(j);
                    EXPECT_TRUE(eval_mod_q(minor, op.param).is_zero());
                }
        }
    }
    EXPECT_GE(checked, 10);
}

TEST(Emptiness, CircleIsNonempty) { EXPECT_FALSE(real_emptiness({p(2, 2) - Polynomial(1, 2)}, 2)); }

TEST(Emptiness, ShiftedSumOfSquaresIsEmpty) { EXPECT_TRUE(real_emptiness({p(2, 2) + Polynomial(1, 2)}, 2)); }

TEST(Emptiness, LineIsNonempty) { EXPECT_FALSE(real_emptiness({e(1, 2)}, 2)); }

TEST(Emptiness, RejectsNonSymmetricInput) {
    EXPECT_THROW(real_emptiness({parse("x1-1", 2)}, 2), Error);
    try {
        real_emptiness({parse("x1^2+2*x2^2-1", 2)}, 2);
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::NotSymmetric);
    }
}

TEST(Emptiness, RegularityGateThrowsOnSingularInput) {
    EmptinessOptions opts;
    opts.check_regularity = true;
    try {
        real_emptiness({p(2, 2)}, 2, opts);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::AssumptionViolated);
    }
    EXPECT_FALSE(real_emptiness({p(2, 2) - Polynomial(1, 2)}, 2, opts));
}

TEST(Emptiness, ComplexInfeasibleSystemsAreEmpty) {
    const unsigned n = 3;
    std::vector<Polynomial> fs{e(2, n) - Polynomial(1, n), e(1, n) * (e(2, n) - Polynomial(1, n)) + Polynomial(1, n)};
    EXPECT_EQ(groebner_basis(fs, n), std::vector<Polynomial>{Polynomial(1, n)});
    EXPECT_TRUE(real_emptiness(fs, n));
}

TEST(Emptiness, SeedStability) {
    std::vector<std::pair<std::vector<Polynomial>, bool>> cases{
        {{p(2, 3) - Polynomial(3, 3)}, false},
        {{p(2, 3) + e(2, 3) + Polynomial(1, 3)}, true},
        {{p(4, 3) - Polynomial(2, 3)}, false},
        {{e(1, 3) - Polynomial(1, 3), e(2, 3) - Polynomial(1, 3)}, true},
    };
    for (const auto& [fs, want] : cases)
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            EmptinessOptions opts;
            opts.seed = seed;
            EXPECT_EQ(real_emptiness(fs, 3, opts), want) << to_string(fs[0]) << " seed " << seed;
        }
}

TEST(Emptiness, AgreesWithGridOnPlantedZeros) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> q(-8, 8);
    int checked = 0;
    for (int trial = 0; trial < 8; ++trial) {
        const unsigned n = 2 + trial % 2;
        Polynomial g = p(2, n) + Rational(q(rng)) * e(2, n) + Rational(q(rng)) * p(1, n);
        std::vector<Rational> u;
        for (unsigned i = 0; i < n; ++i) u.push_back(Rational(q(rng), 4));
        Polynomial f = g - Polynomial(g.evaluate(u), n);
        if (!verify_regularity({f}, n)) continue;
        ASSERT_TRUE(grid_has_zero({f}, n));
        ++checked;
        EXPECT_FALSE(real_emptiness({f}, n)) << to_string(f);
    }
    EXPECT_GE(checked, 5);
}

TEST(Regularity, SpecExamples) {
    EXPECT_TRUE(verify_regularity({p(2, 2) - Polynomial(1, 2)}, 2));
    EXPECT_FALSE(verify_regularity({p(2, 2)}, 2));
    EXPECT_TRUE(verify_regularity({e(1, 2)}, 2));
}

TEST(Regularity, TwoEquations) {
    // The sphere meets the plane transversally except where it is tangent.
    const unsigned n = 3;
    EXPECT_TRUE(verify_regularity({p(2, n) - Polynomial(1, n), e(1, n)}, n));
    EXPECT_FALSE(verify_regularity({p(2, n) - Polynomial(3, n), e(1, n) - Polynomial(3, n)}, n));
}

TEST(Nonneg, PowerSumTwoIsNonnegative) {
    for (unsigned n = 2; n <= 4; ++n) EXPECT_EQ(nonneg_degree_principle(p(2, n), n).status, Nonneg::Nonnegative);
}

TEST(Nonneg, PowerSumOneHasWitness) {
    auto r = nonneg_degree_principle(p(1, 3), 3);
    ASSERT_EQ(r.status, Nonneg::Witness);
    ASSERT_EQ(r.witness.size(), 3u);
    EXPECT_LT(p(1, 3).evaluate(r.witness), 0);
    EXPECT_EQ(r.value, p(1, 3).evaluate(r.witness));
}

TEST(Nonneg, SquaredPowerSumMinusFourthIsNonnegative) {
    Polynomial f = p(2, 4) * p(2, 4) - p(4, 4);
    EXPECT_EQ(nonneg_degree_principle(f, 4).status, Nonneg::Nonnegative);
}

TEST(Nonneg, ShiftedPowerSumHasWitness) {
    Polynomial f = p(2, 3) - Polynomial(3, 3);
    auto r = nonneg_degree_principle(f, 3);
    ASSERT_EQ(r.status, Nonneg::Witness);
    EXPECT_LT(f.evaluate(r.witness), 0);
}

TEST(Nonneg, IrrationalNegativeMinimumIsUnknown) {
    // Negative only on a tiny neighbourhood of an irrational point.
    Polynomial t = p(1, 2) * p(1, 2) - Polynomial(2, 2);
    Polynomial f = t * t * Polynomial(1000000, 2) - Polynomial(Rational(1, 1000000), 2) + p(2, 2) - Rational(1, 2) * p(1, 2) * p(1, 2);
    auto r = nonneg_degree_principle(f, 2);
    if (r.status == Nonneg::Witness) EXPECT_LT(f.evaluate(r.witness), 0);
    else EXPECT_EQ(r.status, Nonneg::Unknown);
}

TEST(Nonneg, WitnessesAlwaysEvaluateNegative) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned n = 3;
        Polynomial f = p(4, n) + Rational(trial - 5) * p(2, n) + Rational(trial % 3) * e(3, n) * e(1, n) +
                       Polynomial(Rational(trial - 3), n);
        auto r = nonneg_degree_principle(f, n, rng());
        if (r.status == Nonneg::Witness) {
            EXPECT_LT(f.evaluate(r.witness), 0) << to_string(f);
        }
    }
}

TEST(Nonneg, RejectsNonSymmetric) { EXPECT_THROW(nonneg_degree_principle(parse("x1^2-x2", 2), 2), Error); }
