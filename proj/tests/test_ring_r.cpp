#include <gtest/gtest.h>

#include "rcc/error.hpp"
#include "rcc/ring_r.hpp"
#include "support.hpp"

using namespace rcc;

namespace {

RingElem el(Residue p, int k, std::initializer_list<std::int64_t> c) { return RingElem(RingContext{p, k}, c); }

/// 4^{-1}(u^{k-2} + 2u^{k-1} + u^k), the square of sigma_2 for k >= 3.
RingElem sigma2_square_residual(RingContext ctx) {
    const Residue q = fp::inv(4, ctx.p);
    RingElem r = RingElem::u_power(ctx, ctx.k - 2) + ring_scalar_mul(RingElem::u_power(ctx, ctx.k - 1), 2) +
                 RingElem::u_power(ctx, ctx.k);
    return ring_scalar_mul(r, q);
}

}  // namespace

TEST(RingElem, AdditionExamples) {
    EXPECT_EQ(el(5, 2, {1, 1}) + el(5, 2, {1, -1}), el(5, 2, {2}));
    const RingElem x = el(7, 3, {1, 2, 3, 4});
    EXPECT_EQ(x + RingElem(x.context()), x);
    EXPECT_EQ(-el(3, 2, {1, 0, -1}), el(3, 2, {2, 0, 1}));
}

TEST(RingElem, MultiplicationExamples) {
    const RingContext ctx{5, 2};
    EXPECT_EQ(RingElem::u_power(ctx, 1) * RingElem::u_power(ctx, 2), RingElem::u_power(ctx, 1));
    EXPECT_EQ(el(5, 2, {1, 1}) * el(5, 2, {1, -1}), el(5, 2, {1, 0, -1}));
    for (Residue p : {3u, 5u, 7u})
        for (int k = 1; k <= 6; ++k) EXPECT_TRUE((lambda_unit({p, k}) * lambda_unit({p, k})).is_one());
}

TEST(RingElem, ConstructorValidation) {
    EXPECT_THROW(RingElem(RingContext{5, 2}, std::vector<Residue>{1, 2}), Error);
    EXPECT_THROW((void)(el(5, 2, {1}) + el(7, 2, {1})), Error);
    EXPECT_THROW((void)(el(5, 2, {1}) * el(5, 3, {1})), Error);
}

TEST(RingElem, ReduceExponent) {
    EXPECT_EQ(reduce_exponent(0, 2), 0);
    EXPECT_EQ(reduce_exponent(2, 2), 2);
    EXPECT_EQ(reduce_exponent(3, 2), 1);
    EXPECT_EQ(reduce_exponent(4, 2), 2);
    EXPECT_EQ(reduce_exponent(7, 3), 1);
    for (Residue p : {3u, 5u})
        for (int k = 1; k <= 6; ++k) {
            const RingContext ctx{p, k};
            EXPECT_EQ(RingElem::u_power(ctx, 1) * RingElem::u_power(ctx, k), RingElem::u_power(ctx, 1));
        }
}

TEST(RingElem, LambdaAndSigmaCoefficients) {
    EXPECT_EQ(lambda_unit({5, 2}).coeffs(), (std::vector<Residue>{1, 0, 3}));
    EXPECT_EQ(lambda_unit({3, 2}).coeffs(), (std::vector<Residue>{1, 0, 1}));
    EXPECT_EQ(sigma(1, {5, 2}).coeffs(), (std::vector<Residue>{1, 0, 4}));
    EXPECT_EQ(sigma(2, {5, 2}).coeffs(), (std::vector<Residue>{0, 3, 3}));
    EXPECT_EQ(sigma(3, {7, 2}).coeffs(), (std::vector<Residue>{0, 3, 4}));
    EXPECT_TRUE((lambda_unit({7, 4}) * lambda_unit({7, 4})).is_one());
}

TEST(RingElem, SigmaNeedsKAtLeastTwoForSecondAndThird) {
    EXPECT_NO_THROW(sigma(1, {5, 1}));
    try {
        sigma(2, {5, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Precondition);
    }
}

TEST(RingElem, MatchesOracleOnSeededTriples) {
    oracle::Gen gen(99);
    for (Residue p : {3u, 5u, 7u, 11u})
        for (int k = 1; k <= 6; ++k) {
            const RingContext ctx{p, k};
            for (int i = 0; i < 1000; ++i) {
                const RingElem a = gen.elem(ctx), b = gen.elem(ctx), c = gen.elem(ctx);
                ASSERT_EQ((a * b).coeffs(), oracle::oracle_ring_mul(a.coeffs(), b.coeffs(), p, k));
                ASSERT_EQ((a * b) * c, a * (b * c));
                ASSERT_EQ(a * b, b * a);
                ASSERT_EQ(a * (b + c), a * b + a * c);
                ASSERT_EQ((a + b) + c, a + (b + c));
                ASSERT_EQ(a - a, RingElem(ctx));
                ASSERT_EQ(a * RingElem::constant(ctx, 1), a);
            }
        }
}

TEST(RingElem, RingPowMatchesRepeatedProduct) {
    oracle::Gen gen(3);
    const RingContext ctx{5, 3};
    for (int i = 0; i < 50; ++i) {
        const RingElem x = gen.elem(ctx);
        RingElem acc = RingElem::constant(ctx, 1);
        for (unsigned n = 0; n < 9; ++n) {
            EXPECT_EQ(ring_pow(x, n), acc);
            acc = acc * x;
        }
    }
}

TEST(IdempotentReport, AllHoldAtKEqualsTwo) {
    for (Residue p : {3u, 5u, 7u, 11u}) {
        const IdempotentReport r = idempotent_report({p, 2});
        EXPECT_TRUE(r.all_hold()) << p;
        for (const auto& id : r.identities()) EXPECT_TRUE(id.holds()) << id.name << " p=" << p;
    }
}

TEST(IdempotentReport, GeneralKMeasurements) {
    for (Residue p : {3u, 5u, 7u, 11u})
        for (int k = 3; k <= 6; ++k) {
            const RingContext ctx{p, k};
            const IdempotentReport r = idempotent_report(ctx);
            EXPECT_TRUE(r.lambda_square_is_one());
            EXPECT_TRUE(r.sum_is_one());
            EXPECT_TRUE(r.lambda_fixes_sigma1());
            EXPECT_TRUE(r.lambda_negates(2));
            EXPECT_TRUE(r.lambda_negates(3));
            EXPECT_FALSE(r.idempotent(2));
            EXPECT_FALSE(r.all_hold());
            EXPECT_EQ(r.products[1][1], sigma2_square_residual(ctx)) << "p=" << p << " k=" << k;
        }
}

TEST(IdempotentReport, SigmaSquareResidualAtP5K3) {
    const IdempotentReport r = idempotent_report({5, 3});
    // 4 (u + 2u^2 + u^3) over F_5.
    EXPECT_EQ(r.products[1][1].coeffs(), (std::vector<Residue>{0, 4, 3, 4}));
}

TEST(IdempotentReport, RequiresKAtLeastTwo) { EXPECT_THROW(idempotent_report({5, 1}), Error); }

TEST(RingEval, Examples) {
    EXPECT_EQ(ring_eval(sigma(1, {5, 2}), 0).value(), 1u);
    EXPECT_EQ(ring_eval(lambda_unit({5, 2}), 1).value(), 4u);
    EXPECT_EQ(ring_eval(sigma(3, {5, 2}), 4).value(), 1u);
    EXPECT_TRUE(is_eval_point({5, 2}, 4));
    EXPECT_FALSE(is_eval_point({5, 3}, 4));
    EXPECT_THROW(ring_eval(sigma(1, {5, 3}), 4), Error);
}

TEST(RingEval, SigmasAreIndicatorsAtKTwo) {
    for (Residue p : {3u, 5u, 7u}) {
        const RingContext ctx{p, 2};
        const std::array<Residue, 3> pts{0, 1, p - 1};
        for (int i = 1; i <= 3; ++i)
            for (std::size_t t = 0; t < 3; ++t)
                EXPECT_EQ(ring_eval(sigma(i, ctx), pts[t]).value(), static_cast<Residue>(t + 1 == static_cast<std::size_t>(i)));
    }
}

TEST(RingEval, IsAHomomorphism) {
    oracle::Gen gen(17);
    for (int k : {2, 4, 6}) {
        const RingContext ctx{7, k};
        for (int i = 0; i < 200; ++i) {
            const RingElem a = gen.elem(ctx), b = gen.elem(ctx);
            for (Residue c : {0u, 1u, 6u}) {
                EXPECT_EQ(ring_eval(a * b, c), ring_eval(a, c) * ring_eval(b, c));
                EXPECT_EQ(ring_eval(a + b, c), ring_eval(a, c) + ring_eval(b, c));
            }
        }
    }
}

TEST(LambdaParity, OddAndEvenPowers) {
    for (Residue p : {3u, 5u, 7u, 11u})
        for (int k = 1; k <= 6; ++k) {
            const RingContext ctx{p, k};
            for (unsigned m = 1; m <= 10; ++m)
                EXPECT_EQ(ring_pow(lambda_unit(ctx), m), m % 2 ? lambda_unit(ctx) : RingElem::constant(ctx, 1));
        }
}

TEST(RingElem, Formatting) {
    EXPECT_EQ(to_array_string(el(5, 2, {1, 0, 3})), "[1,0,3]");
    EXPECT_EQ(to_pretty_string(el(5, 2, {1, 0, 3})), "1 + 3u^2");
    EXPECT_EQ(to_pretty_string(RingElem(RingContext{5, 2})), "0");
}
