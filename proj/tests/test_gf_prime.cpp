#include <gtest/gtest.h>

#include "rcc/error.hpp"
#include "rcc/gf_prime.hpp"
#include "support.hpp"

using namespace rcc;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an rcc::Error";
    return ErrorKind::Io;
}

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(FpElem, SmallExamples) {
    EXPECT_EQ(fp_add(FpElem(4, 5), FpElem(3, 5)).value(), 2u);
    EXPECT_EQ(fp_neg(FpElem(0, 7)).value(), 0u);
    EXPECT_EQ(fp_mul(FpElem(3, 7), FpElem(5, 7)).value(), 1u);
    EXPECT_EQ(fp_sub(FpElem(1, 5), FpElem(3, 5)).value(), 3u);
    EXPECT_EQ(FpElem(-2, 5).value(), 3u);
}

TEST(FpElem, Inverse) {
    EXPECT_EQ(fp_inv(FpElem(2, 5)).value(), 3u);
    EXPECT_EQ(fp_inv(FpElem(2, 7)).value(), 4u);
    EXPECT_EQ(kind_of([] { fp_inv(FpElem(0, 5)); }), ErrorKind::NotInvertible);
    EXPECT_EQ(kind_of([] { fp::inv(0, 11); }), ErrorKind::NotInvertible);
}

TEST(FpElem, MismatchedModuliThrow) {
    EXPECT_EQ(kind_of([] { fp_add(FpElem(1, 5), FpElem(1, 7)); }), ErrorKind::ContextMismatch);
    EXPECT_EQ(kind_of([] { fp_mul(FpElem(1, 3), FpElem(1, 5)); }), ErrorKind::ContextMismatch);
}

TEST(FpElem, InverseExhaustiveSmallPrimes) {
    for (Residue p : {3u, 5u, 7u, 11u})
        for (Residue x = 1; x < p; ++x) EXPECT_EQ(fp::mul(x, fp::inv(x, p), p), 1u) << "p=" << p << " x=" << x;
}

TEST(FpElem, InverseSampledLargerPrimes) {
    oracle::Gen gen(11);
    for (Residue p : {101u, 65521u})
        for (int i = 0; i < 1000; ++i) {
            const Residue x = gen.nonzero(p);
            EXPECT_EQ(fp::mul(x, fp::inv(x, p), p), 1u);
        }
}

TEST(FpElem, FieldAxiomsOnSeededTriples) {
    oracle::Gen gen(2024);
    for (Residue p : {3u, 5u, 7u, 11u, 101u, 65521u}) {
        for (int i = 0; i < 1000; ++i) {
            const FpElem a(gen.residue(p), p), b(gen.residue(p), p), c(gen.residue(p), p);
            const FpElem zero(0, p), one(1, p);
            ASSERT_EQ((a + b) + c, a + (b + c));
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a + b, b + a);
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ(a * (b + c), a * b + a * c);
            ASSERT_EQ(a + zero, a);
            ASSERT_EQ(a * one, a);
            ASSERT_EQ(a + (-a), zero);
            ASSERT_EQ(a - b, a + (-b));
            if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), one);
        }
    }
}

TEST(ExtEuclid, BezoutIdentity) {
    oracle::Gen gen(5);
    for (int i = 0; i < 1000; ++i) {
        const auto a = static_cast<std::int64_t>(gen.below(100000));
        const auto b = static_cast<std::int64_t>(gen.below(100000));
        const Bezout r = ext_euclid(a, b);
        EXPECT_EQ(r.s * a + r.t * b, r.g);
        EXPECT_EQ(r.g, std::gcd(a, b));
    }
}

TEST(IsPrime, MatchesTrialDivision) {
    for (std::uint64_t n = 0; n < 2000; ++n) {
        bool prime = n >= 2;
        for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
        EXPECT_EQ(is_prime(n), prime) << n;
    }
}

TEST(ValidateParams, AcceptsStandingAssumptions) {
    const Params pr = validate_params(5, 2, 7);
    EXPECT_EQ(pr.p, 5u);
    EXPECT_EQ(pr.k, 2);
    EXPECT_EQ(pr.m, 7);
}

TEST(ValidateParams, Diagnostics) {
    EXPECT_NE(message_of([] { validate_params(2, 2, 7); }).find("2 not invertible"), std::string::npos);
    EXPECT_NE(message_of([] { validate_params(9, 2, 3); }).find("p not prime"), std::string::npos);
    EXPECT_EQ(kind_of([] { validate_params(9, 2, 3); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([] { validate_params(4, 2, 3); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([] { validate_params(5, 0, 3); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([] { validate_params(5, 2, 0); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([] { validate_params(65537, 2, 1); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(validate_prime(2, true), 2u);
    EXPECT_EQ(kind_of([] { validate_prime(2); }), ErrorKind::InvalidParameter);
}

TEST(FpVector, ArithmeticAndWeight) {
    const FpVector x(5, {1, 2, 3});
    const FpVector y(5, {4, 4, 0});
    EXPECT_EQ(x + y, FpVector(5, {0, 1, 3}));
    EXPECT_EQ(x - y, FpVector(5, {2, 3, 3}));
    EXPECT_EQ(scale(x, 2), FpVector(5, {2, 4, 1}));
    EXPECT_EQ(dot(x, y), (4u + 8u) % 5u);
    EXPECT_EQ(x.weight(), 3u);
    EXPECT_TRUE(FpVector(5, 3).is_zero());
    EXPECT_EQ(kind_of([&] { (void)(x + FpVector(5, {1, 2})); }), ErrorKind::ContextMismatch);
    EXPECT_EQ(kind_of([&] { (void)(x + FpVector(7, {1, 2, 3})); }), ErrorKind::ContextMismatch);
}
