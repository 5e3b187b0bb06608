#include <gtest/gtest.h>

#include <set>

#include "rcc/error.hpp"
#include "rcc/graymaps.hpp"
#include "support.hpp"

using namespace rcc;

namespace {

RingElem el(RingContext ctx, std::initializer_list<std::int64_t> c) { return RingElem(ctx, c); }

/// Every element of R at the given context, a_0 varying fastest.
std::vector<RingElem> all_elements(RingContext ctx) {
    std::vector<RingElem> out;
    std::vector<Residue> c(static_cast<std::size_t>(ctx.k) + 1, 0);
    for (;;) {
        out.emplace_back(ctx, c);
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == ctx.p) c[i++] = 0;
        if (i == c.size()) break;
    }
    return out;
}

}  // namespace

TEST(GrayLayout, ComponentsByK) {
    EXPECT_EQ(GrayLayout({5, 2}).width(), 3u);
    EXPECT_EQ(GrayLayout({5, 3}).width(), 3u);
    EXPECT_EQ(GrayLayout({5, 4}).width(), 4u);
    EXPECT_EQ(GrayLayout({5, 6}).width(), 5u);
}

TEST(GrayMap, Examples) {
    const RingContext ctx{5, 2};
    const GrayLayout g(ctx);
    EXPECT_EQ(gray_map(el(ctx, {1, 2, 3}), g), FpVector(5, {2, 2, 0}));
    EXPECT_EQ(gray_inverse(FpVector(5, {2, 2, 0}), ctx), el(ctx, {1, 2, 3}));
    EXPECT_EQ(gray_map(RingElem::constant(ctx, 1), g), FpVector(5, {0, 0, 2}));
    EXPECT_EQ(gray_map(lambda_unit(ctx), g), FpVector(5, {2, 0, 0}));
}

TEST(GrayMap, ElementMatchesOracleAndRoundTrips) {
    for (Residue p : {3u, 5u, 7u}) {
        const RingContext ctx{p, 2};
        const GrayLayout g(ctx);
        std::set<std::vector<Residue>> images;
        for (const auto& x : all_elements(ctx)) {
            const FpVector w = gray_map(x, g);
            std::vector<Residue> v(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i];
            ASSERT_EQ(v, oracle::oracle_gray_k2(x));
            ASSERT_EQ(gray_inverse(w, ctx), x);
            images.insert(v);
        }
        EXPECT_EQ(images.size(), std::size_t{p} * p * p);
    }
}

TEST(GrayMap, WordLayoutIsBlockMajor) {
    const RingContext ctx{5, 2};
    const GrayLayout g(ctx);
    const RWord w{el(ctx, {1, 2, 3}), el(ctx, {0, 1, 0})};
    // Components (-a2, a1, 2a0 + a2) of each coordinate, grouped by component.
    EXPECT_EQ(gray_map(w, g), FpVector(5, {2, 0, 2, 1, 0, 0}));
    oracle::Gen gen(8);
    for (std::size_t m = 1; m <= 4; ++m)
        for (int i = 0; i < 50; ++i) {
            const RWord x = gen.word(ctx, m);
            EXPECT_EQ(gray_inverse_word(gray_map(x, g), ctx, m), x);
        }
}

TEST(GrayMap, LinearOverFp) {
    oracle::Gen gen(31);
    for (int k = 2; k <= 6; ++k) {
        const RingContext ctx{7, k};
        const GrayLayout g(ctx);
        for (int i = 0; i < 100; ++i) {
            const RWord x = gen.word(ctx, 3), y = gen.word(ctx, 3);
            RWord s;
            for (std::size_t j = 0; j < 3; ++j) s.push_back(x[j] + ring_scalar_mul(y[j], 4));
            ASSERT_EQ(gray_map(s, g), gray_map(x, g) + scale(gray_map(y, g), 4));
        }
    }
}

TEST(GrayMap, KernelWitnessBeyondKTwo) {
    EXPECT_FALSE(gray_kernel_witness(GrayLayout({5, 2})).has_value());
    for (int k = 3; k <= 6; ++k) {
        const GrayLayout g({5, k});
        const auto w = gray_kernel_witness(g);
        ASSERT_TRUE(w.has_value()) << k;
        EXPECT_FALSE(w->is_zero());
        EXPECT_TRUE(gray_map(*w, g).is_zero());
    }
    EXPECT_THROW(gray_inverse(FpVector(5, {0, 0, 0}), {5, 3}), Error);
}

TEST(GrayImage, SizeMatchesEnumeration) {
    oracle::Gen gen(4);
    const RingContext ctx{3, 2};
    const GrayLayout g(ctx);
    for (int i = 0; i < 30; ++i) {
        const ConstaCodeR c(ctx, 2, UnitTag::Lambda, {gen.word(ctx, 2)});
        const LinearCodeFp img = gray_image(c, g);
        EXPECT_EQ(img.size(), c.size());
        for (const auto& v : oracle::oracle_r_span(ctx, 2, c.generators()))
            ASSERT_TRUE(img.contains(gray_map(collapse(ctx, FpVector(3, v)), g)));
    }
}

TEST(Permutation, Basics) {
    const Permutation s({2, 1, 0});
    EXPECT_EQ(s.apply(FpVector(3, {1, 2, 0})), FpVector(3, {0, 2, 1}));
    EXPECT_TRUE(s.compose(s).is_identity());
    EXPECT_EQ(s.inverse(), s);
    EXPECT_THROW(Permutation({0, 0, 1}), Error);
    EXPECT_THROW(Permutation({0, 3}), Error);
    const Permutation r({1, 2, 0});
    EXPECT_TRUE(r.compose(r.inverse()).is_identity());
    EXPECT_EQ(r.compose(r), Permutation({2, 0, 1}));
}

TEST(Nechaev, Psi) {
    EXPECT_TRUE(nechaev_psi(1).is_identity());
    EXPECT_EQ(nechaev_psi(3), Permutation({0, 4, 2, 3, 1, 5}));
    const Permutation p5 = nechaev_psi(5);
    EXPECT_EQ(p5(1), 6u);
    EXPECT_EQ(p5(6), 1u);
    EXPECT_EQ(p5(3), 8u);
    EXPECT_EQ(p5(8), 3u);
    for (std::size_t i : {0u, 2u, 4u, 5u, 7u, 9u}) EXPECT_EQ(p5(i), i);
    EXPECT_THROW(nechaev_psi(4), Error);
    for (std::size_t m : {1u, 3u, 5u, 7u, 9u}) EXPECT_TRUE(nechaev_psi(m).compose(nechaev_psi(m)).is_identity());
}

TEST(Nechaev, RhoExtendsByIdentity) {
    EXPECT_EQ(nechaev_rho_permutation(3), Permutation({0, 4, 2, 3, 1, 5, 6, 7, 8}));
    FpVector w(3, 9);
    for (std::size_t i = 0; i < 9; ++i) w.set(i, static_cast<Residue>(i % 3));
    EXPECT_EQ(nechaev_rho(w, 3), nechaev_rho_permutation(3).apply(w));
    EXPECT_THROW(nechaev_rho(FpVector(3, 6), 3), Error);
}

TEST(PermuteCode, Example) {
    const LinearCodeFp c(3, 3, {FpVector(3, {1, 2, 0})});
    EXPECT_EQ(permute_code(c, Permutation({2, 1, 0})), LinearCodeFp(3, 3, {FpVector(3, {0, 2, 1})}));
    EXPECT_EQ(permute_code(c, Permutation::identity(3)), c);
}
