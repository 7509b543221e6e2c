#include <gtest/gtest.h>

#include "symalg/symfun.hpp"
#include "test_util.hpp"

using namespace symalg;
using symalg::testing::rand_point;
using symalg::testing::rand_rational;

namespace {

const char* kFtsf = "x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2";

// F(b_1, ..., b_m) expanded in x, the independent check for every rewrite.
Polynomial expand(const Polynomial& F, BasisKind kind, unsigned n, const std::optional<BlockStructure>& bs = std::nullopt) {
    std::map<unsigned, Polynomial> images;
    if (!bs) {
        for (unsigned k = 1; k <= std::max(F.nvars(), n); ++k) images[k] = basis_polynomial(kind, k, n);
    } else {
        unsigned y = 1;
        for (unsigned b = 1; b <= bs->count(); ++b)
            for (unsigned j = 1; j <= bs->sizes[b - 1]; ++j) images[y++] = block_basis_polynomial(kind, b, j, *bs);
    }
    return F.substitute(images);
}

// Random symmetric polynomial as a combination of products of power sums.
Polynomial rand_symmetric(std::mt19937_64& rng, unsigned n, unsigned max_deg) {
    std::uniform_int_distribution<unsigned> k(1, max_deg);
    Polynomial f(n);
    for (int t = 0; t < 3; ++t) {
        Polynomial term(rand_rational(rng), n);
        unsigned d = 0;
        for (;;) {
            unsigned j = k(rng);
            if (d + j > max_deg) break;
            term *= basis_polynomial(BasisKind::PowerSum, j, n);
            d += j;
            if (rng() % 2) break;
        }
        f += term;
    }
    return f;
}

}  // namespace

TEST(Basis, Examples) {
    EXPECT_EQ(basis_polynomial(BasisKind::Elementary, 2, 3), parse("x1*x2 + x1*x3 + x2*x3", 3));
    Polynomial h2 = basis_polynomial(BasisKind::CompleteHomogeneous, 2, 3);
    EXPECT_EQ(h2.size(), 6u);
    EXPECT_EQ(h2, parse("x1^2 + x2^2 + x3^2 + x1*x2 + x1*x3 + x2*x3", 3));
    EXPECT_EQ(monomial_symmetric(Partition({1, 2}), 3), parse(kFtsf, 3));
    EXPECT_EQ(basis_polynomial(BasisKind::Elementary, 0, 3), Polynomial(1, 3));
    EXPECT_EQ(basis_polynomial(BasisKind::PowerSum, 0, 3), Polynomial(3, 3));
    EXPECT_THROW(basis_polynomial(BasisKind::Elementary, 4, 3), Error);
}

TEST(Symmetry, Examples) {
    EXPECT_TRUE(is_symmetric(basis_polynomial(BasisKind::PowerSum, 2, 4)));
    EXPECT_FALSE(is_symmetric(parse("x1 - x2", 2)));
    Polynomial g = parse("(x1 + x2 + x3)^3 + (x4^2 + x5^2)", 5);
    EXPECT_TRUE(is_block_symmetric(g, BlockStructure{{3, 2}}));
    EXPECT_FALSE(is_symmetric(g));
}

TEST(Newton, Examples) {
    const unsigned n = 3;
    Polynomial y2 = Polynomial::variable(2, 3);
    EXPECT_EQ(newton_convert(y2, BasisKind::PowerSum, BasisKind::Elementary, n), parse("x1^2 - 2*x2", 3));
    EXPECT_EQ(newton_convert(Polynomial::variable(1, 3), BasisKind::PowerSum, BasisKind::Elementary, n),
              Polynomial::variable(1, 3));
    Polynomial p3 = newton_convert(Polynomial::variable(3, 3), BasisKind::PowerSum, BasisKind::Elementary, n);
    EXPECT_EQ(p3, parse("x1^3 - 3*x1*x2 + 3*x3", 3));
    // oracle: expand and compare with p_3
    EXPECT_EQ(expand(p3, BasisKind::Elementary, n), basis_polynomial(BasisKind::PowerSum, 3, n));
    EXPECT_THROW(newton_convert(y2, BasisKind::PowerSum, BasisKind::CompleteHomogeneous, n), Error);
}

TEST(Newton, RoundTrip) {
    std::mt19937_64 rng(31);
    for (unsigned n = 1; n <= 4; ++n)
        for (int it = 0; it < 10; ++it) {
            Polynomial F = symalg::testing::rand_poly(rng, n, n, 4);
            Polynomial G = newton_convert(F, BasisKind::Elementary, BasisKind::PowerSum, n);
            EXPECT_EQ(newton_convert(G, BasisKind::PowerSum, BasisKind::Elementary, n), F);
        }
}

TEST(Ftsp, ExampleTriple) {
    Polynomial f = parse(kFtsf, 3);
    Polynomial Fe = ftsp_rewrite(f, BasisKind::Elementary);
    Polynomial Fp = ftsp_rewrite(f, BasisKind::PowerSum);
    Polynomial Fh = ftsp_rewrite(f, BasisKind::CompleteHomogeneous);
    EXPECT_EQ(to_string(Fe, y_names(BasisKind::Elementary, 3)), "e1*e2 - 3*e3");
    EXPECT_EQ(to_string(Fp, y_names(BasisKind::PowerSum, 3)), "p1*p2 - p3");
    // Verified by expansion below; the printed reference form with
    // coefficients 4/3, -1, 1/3 does not expand to f.
    EXPECT_EQ(to_string(Fh, y_names(BasisKind::CompleteHomogeneous, 3)), "-2*h1^3 + 5*h1*h2 - 3*h3");
    EXPECT_EQ(expand(Fe, BasisKind::Elementary, 3), f);
    EXPECT_EQ(expand(Fp, BasisKind::PowerSum, 3), f);
    EXPECT_EQ(expand(Fh, BasisKind::CompleteHomogeneous, 3), f);
    Polynomial printed = parse("4/3*x1^3 - x1*x2 + 1/3*x3", 3);
    EXPECT_NE(expand(printed, BasisKind::CompleteHomogeneous, 3), f);
}

TEST(Ftsp, RejectsNonSymmetric) {
    try {
        ftsp_rewrite(parse("x1^2 + x2", 2), BasisKind::Elementary);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
    }
}

TEST(Ftsp, RoundTripElementary) {
    std::mt19937_64 rng(32);
    for (unsigned n = 1; n <= 5; ++n)
        for (int it = 0; it < 6; ++it) {
            Polynomial F = symalg::testing::rand_poly(rng, n, 4, 4);
            Polynomial f = expand(F, BasisKind::Elementary, n);
            EXPECT_EQ(ftsp_rewrite(f, BasisKind::Elementary), F);
        }
}

TEST(Ftsp, EvaluationAgreesAtRandomPoints) {
    std::mt19937_64 rng(33);
    for (unsigned n = 2; n <= 4; ++n) {
        Polynomial f = rand_symmetric(rng, n, 4);
        Polynomial F = ftsp_rewrite(f, BasisKind::Elementary);
        for (int t = 0; t < 20; ++t) {
            auto a = rand_point(rng, n);
            std::vector<Rational> e;
            for (unsigned k = 1; k <= n; ++k) e.push_back(basis_polynomial(BasisKind::Elementary, k, n).evaluate(a));
            EXPECT_EQ(F.evaluate(e), f.evaluate(a));
        }
    }
}

TEST(Ftsp, PowerSumDegreeRestriction) {
    std::mt19937_64 rng(34);
    for (unsigned n = 3; n <= 5; ++n)
        for (unsigned d = 1; d <= n; ++d) {
            Polynomial f = rand_symmetric(rng, n, d);
            if (f.is_zero()) continue;
            unsigned deg = static_cast<unsigned>(f.degree());
            Polynomial F = ftsp_rewrite(f, BasisKind::PowerSum);
            EXPECT_LE(F.max_var(), deg);
            EXPECT_EQ(expand(F, BasisKind::PowerSum, n), f);
        }
}

TEST(Ftsp, BlockRewriting) {
    BlockStructure bs{{3, 2}};
    Polynomial g = parse("(x1 + x2 + x3)^3 + (x4^2 + x5^2) + x1*x2*x3*x4*x5", 5);
    for (BasisKind k : {BasisKind::Elementary, BasisKind::PowerSum, BasisKind::CompleteHomogeneous}) {
        Polynomial F = ftsp_rewrite(g, k, bs);
        EXPECT_EQ(expand(F, k, 5, bs), g) << basis_letter(k);
    }
    Polynomial Fe = ftsp_rewrite(g, BasisKind::Elementary, bs);
    EXPECT_EQ(to_string(Fe, y_names(BasisKind::Elementary, 5, bs)), "e{1,1}^3 + e{1,3}*e{2,2} + e{2,1}^2 - 2*e{2,2}");
}

TEST(Subring, Examples) {
    Polynomial f = expand(parse("x1*x2 - 3*x3", 3), BasisKind::Elementary, 3);
    std::vector<Polynomial> gens;
    for (unsigned k = 1; k <= 3; ++k) gens.push_back(basis_polynomial(BasisKind::Elementary, k, 3));
    auto F = subring_membership(f, gens, 2);
    ASSERT_TRUE(F.has_value());
    EXPECT_EQ(*F, parse("x1*x2 - 3*x3", 3));

    EXPECT_FALSE(subring_membership(parse("x1", 1), {parse("x1^2", 1)}, 4).has_value());

    std::mt19937_64 rng(35);
    Polynomial g1 = symalg::testing::rand_poly(rng, 2, 3, 3);
    if (g1.is_constant()) g1 += Polynomial::variable(1, 2);
    auto G = subring_membership(g1 * g1, {g1}, 2);
    ASSERT_TRUE(G.has_value());
    EXPECT_EQ(*G, parse("x1^2", 1));
}

TEST(LambdaSubstitute, Examples) {
    Polynomial p2 = basis_polynomial(BasisKind::PowerSum, 2, 3);
    EXPECT_EQ(lambda_substitute(p2, Composition({2, 1})), parse("2*x1^2 + x2^2", 2));
    Polynomial f = parse(kFtsf, 3);
    EXPECT_EQ(lambda_substitute(f, Composition({1, 1, 1})), f);
    Polynomial p1 = basis_polynomial(BasisKind::PowerSum, 1, 7);
    EXPECT_EQ(lambda_substitute(p1, Partition({2, 2, 3})), parse("2*x1 + 2*x2 + 3*x3", 3));
    EXPECT_THROW(lambda_substitute(p1, Composition({1, 1})), Error);
}

TEST(LambdaSubstitute, WeightedPowerSums) {
    EXPECT_EQ(weighted_power_sum(1, {1, 1, 1}), basis_polynomial(BasisKind::PowerSum, 1, 3));
    EXPECT_EQ(weighted_power_sum(2, {2, 1}), parse("2*x1^2 + x2^2", 2));
    for (unsigned n = 1; n <= 6; ++n)
        for (const auto& c : enumerate_compositions(n))
            for (unsigned j = 1; j <= 4; ++j)
                EXPECT_EQ(lambda_substitute(basis_polynomial(BasisKind::PowerSum, j, n), c), weighted_power_sum(j, c.parts));
}

TEST(LambdaSubstitute, PartitionGivesBlockSymmetry) {
    std::mt19937_64 rng(36);
    for (unsigned n = 2; n <= 6; ++n) {
        Polynomial f = rand_symmetric(rng, n, 4);
        for (const auto& lambda : enumerate_partitions(n))
            EXPECT_TRUE(is_block_symmetric(lambda_substitute(f, lambda), lambda_blocks(lambda)));
    }
}

TEST(Distribution, Examples) {
    QMatrix D = distribution_matrix(Partition({2, 2, 3}));
    ASSERT_EQ(D.rows(), 3u);
    ASSERT_EQ(D.cols(), 7u);
    std::vector<std::vector<Rational>> expected = {
        {Rational(1, 2), Rational(1, 2), 0, 0, 0, 0, 0},
        {0, 0, Rational(1, 2), Rational(1, 2), 0, 0, 0},
        {0, 0, 0, 0, Rational(1, 3), Rational(1, 3), Rational(1, 3)},
    };
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(D(i, j), expected[i][j]);
    EXPECT_EQ(distribution_matrix(Partition({1, 1, 1, 1})), QMatrix::identity(4));
    QMatrix one = distribution_matrix(Partition({4}));
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(one(0, j), Rational(1, 4));
}

TEST(ChainRule, JacobianFactorsThroughD) {
    std::mt19937_64 rng(37);
    for (unsigned n = 2; n <= 5; ++n) {
        Polynomial f = rand_symmetric(rng, n, 4);
        for (const auto& lambda : enumerate_partitions(n)) {
            auto J = jacobian({f});
            PolyMatrix lhs(1);
            for (const auto& e : J[0]) lhs[0].push_back(lambda_substitute(e, lambda));
            QMatrix D = distribution_matrix(lambda);
            PolyMatrix Dp(D.rows(), std::vector<Polynomial>(D.cols()));
            for (std::size_t i = 0; i < D.rows(); ++i)
                for (std::size_t j = 0; j < D.cols(); ++j) Dp[i][j] = Polynomial(D(i, j), lambda.length());
            PolyMatrix rhs = matmul(jacobian({lambda_substitute(f, lambda)}), Dp);
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(ClosureGate, Examples) {
    EXPECT_EQ(symmetric_closure_gate({parse("x1 - x2", 2)}), parse("2*(x1 - x2)^2", 2));
    EXPECT_EQ(symmetric_closure_gate({parse("x1", 2)}), parse("x1^2 + x2^2", 2));
    EXPECT_THROW(symmetric_closure_gate({Polynomial::variable(1, 7)}), Error);
}

TEST(ClosureGate, VanishesExactlyOnCommonZeros) {
    std::mt19937_64 rng(38);
    for (int it = 0; it < 20; ++it) {
        // plant a common zero at a so both outcomes are exercised
        auto a = rand_point(rng, 3, 2, 2);
        std::vector<Polynomial> fs;
        for (int k = 0; k < 2; ++k) {
            Polynomial f = symalg::testing::rand_poly(rng, 3, 2, 3);
            fs.push_back(f - Polynomial(f.evaluate(a), 3));
        }
        Polynomial g = symmetric_closure_gate(fs);
        EXPECT_TRUE(is_symmetric(g));
        for (auto pt : {a, rand_point(rng, 3, 2, 2)}) {
            bool all_zero = true;
            // the gate sums over permutations, so compare against all permuted points
            std::vector<unsigned> perm{0, 1, 2};
            do {
                std::vector<Rational> q{pt[perm[0]], pt[perm[1]], pt[perm[2]]};
                for (const auto& f : fs)
                    if (f.evaluate(q) != 0) all_zero = false;
            } while (std::next_permutation(perm.begin(), perm.end()));
            EXPECT_EQ(g.evaluate(pt) == 0, all_zero);
        }
    }
}
