#include "core/examples.hpp"
#include "core/polygon.hpp"

#include <gtest/gtest.h>

using namespace tropogw;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::Internal;
}

}  // namespace

TEST(Polygon, HirzebruchDerivedLengths) {
    auto P = build_polygon({2}, {0}, {1}, {1}, 1);
    EXPECT_EQ(P.d_b, 3);
    EXPECT_EQ(P.a, 1);
    EXPECT_EQ(P.shape.lambda_constant(), 2);
}

TEST(Polygon, FourFloorDerivedLengths) {
    auto P = four_floor_polygon();
    EXPECT_EQ(P.d_b, 6);
    EXPECT_EQ(P.a, 4);
    auto [Dr, Dl] = boundary_multisets(P.shape);
    EXPECT_EQ(Dr, (IntVec{3, 1, 1, -3}));
    EXPECT_EQ(Dl, (IntVec{-1, -1, 0, 0}));
}

TEST(Polygon, SixtyFourPolygon) {
    auto P = sixty_four_instance().polygon;
    EXPECT_EQ(P.a, 2);
    EXPECT_EQ(P.d_b, 6);  // d_t + 2*2 - (-1 + 0)
}

TEST(Polygon, Errors) {
    EXPECT_EQ(code_of([] { build_polygon({0, 1}, {0}, {1, 1}, {2}, 1); }), ErrorCode::OrderingViolation);
    EXPECT_EQ(code_of([] { build_polygon({1}, {0, 0}, {1}, {1, 0}, 1); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { build_polygon({1}, {1, 0}, {2}, {1, 1}, 1); }), ErrorCode::OrderingViolation);
    EXPECT_EQ(code_of([] { build_polygon({1}, {0}, {1, 2}, {1}, 1); }), ErrorCode::LengthMismatch);
    EXPECT_EQ(code_of([] { build_polygon({1}, {0}, {2}, {1}, 1); }), ErrorCode::LengthMismatch);
    // d_b = 1 + (-3) - 0 < 0.
    EXPECT_EQ(code_of([] { build_polygon({-3}, {0}, {1}, {1}, 1); }), ErrorCode::DegeneratePolygon);
}

TEST(Polygon, ArrangementsAreDistinct) {
    auto P = four_floor_polygon();
    auto arr = boundary_arrangements(P.shape);
    // 4!/2! arrangements of D_r times 4!/(2!2!) of D_l.
    EXPECT_EQ(arr.size(), 12u * 6u);
    std::set<std::pair<IntVec, IntVec>> s(arr.begin(), arr.end());
    EXPECT_EQ(s.size(), arr.size());
}

TEST(Polygon, AutomorphismAndPermutations) {
    EXPECT_EQ(automorphism_count({1, 1, 2, 2, 2}), 12);
    EXPECT_EQ(multiset_permutations({2, 1, 1}).size(), 3u);
    EXPECT_EQ(factorial(6), 720);
}
