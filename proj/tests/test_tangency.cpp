#include "core/examples.hpp"
#include "core/tangency.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tropogw;

TEST(Tangency, SixtyFourMultiplicities) {
    auto w = sixty_four_instance();
    auto mv = to_multiplicity(w.data);
    EXPECT_EQ(mv.alpha, (std::map<std::int64_t, std::int64_t>{{5, 1}}));
    EXPECT_EQ(mv.beta, (std::map<std::int64_t, std::int64_t>{{1, 1}}));
    EXPECT_EQ(mv.alpha_tilde, (std::map<std::int64_t, std::int64_t>{{1, 1}}));
    EXPECT_TRUE(mv.beta_tilde.empty());
    EXPECT_NO_THROW(check_degrees(w.polygon, w.data));
    auto back = from_multiplicity(mv, w.polygon);
    EXPECT_EQ(back.x, (IntVec{1, -5}));
    EXPECT_EQ(back.y, (IntVec{-1}));
    // 2a + g + n2 - 1 = 4 points.
    EXPECT_EQ(point_count(w.polygon, 0, mv), 4);
}

TEST(Tangency, RoundTripRandom) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> val(-6, 6), len(0, 4);
    for (int it = 0; it < 200; ++it) {
        DivergenceData d;
        for (int i = len(rng); i > 0; --i) {
            int v = val(rng);
            if (v) d.x.push_back(v);
        }
        for (int i = len(rng); i > 0; --i) {
            int v = val(rng);
            if (v) d.y.push_back(v);
        }
        auto back = from_multiplicity(to_multiplicity(d));
        auto sx = d.x, sy = d.y;
        std::sort(sx.rbegin(), sx.rend());
        std::sort(sy.rbegin(), sy.rend());
        EXPECT_EQ(back.x, sx);
        EXPECT_EQ(back.y, sy);
        EXPECT_EQ(to_multiplicity(back), to_multiplicity(d));
    }
}

TEST(Tangency, Errors) {
    auto P = sixty_four_instance().polygon;
    try {
        check_lambda(P.shape, {{1, 0}, {}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroEntry);
    }
    try {
        check_lambda(P.shape, {{1, -4}, {-1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotInLambda);
    }
    // In Lambda but with the wrong top degree: sum = 2 - 7 = -5 = -K.
    try {
        check_degrees(P, {{2, -7}, {}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InfeasibleDegree);
    }
    MultiplicityVector mv;
    mv.alpha[2] = 1;
    try {
        from_multiplicity(mv, P);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InconsistentDegrees);
    }
}

TEST(Tangency, Parts) {
    EXPECT_EQ(positive_part({3, -1, 2, -4}), (IntVec{3, 2}));
    EXPECT_EQ(negative_part({3, -1, 2, -4}), (IntVec{4, 1}));
}
