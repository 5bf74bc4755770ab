#include "core/chambers.hpp"
#include "core/examples.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace tropogw;

TEST(Chambers, TwoFloorWallsAreSixHyperplanes) {
    for (std::int64_t k : {1, 2, 3}) {
        auto arr = walls(two_floor_shape(k), 2, 1);
        EXPECT_EQ(arr.walls.size(), 6u);
        // Before merging: 2^2 * 2^1 * 2 * 2 * 3 forms, minus the trivial one.
        EXPECT_EQ(arr.raw_count, 4u * 2u * 2u * 2u * 3u - 1u);
        // Each wall is one of x_i = 0, x_i + k = 0, y1 = 0, y1 + k = 0 written
        // in the chart (x1, x2) where y1 = -k - x1 - x2.
        std::set<std::pair<std::vector<Int>, Int>> forms;
        for (const auto& w : arr.walls) forms.insert({w.coef, w.constant});
        std::set<std::pair<std::vector<Int>, Int>> expect = {
            {{1, 0}, 0}, {{1, 0}, k}, {{0, 1}, 0}, {{0, 1}, k}, {{1, 1}, 0}, {{1, 1}, k}};
        EXPECT_EQ(forms, expect);
    }
}

TEST(Chambers, RawCountFormulaWithEqualizers) {
    PolygonShape s{{2, -1}, {0}, {1, 2}, {3}};
    auto arr = walls(s, 1, 3);
    // 2^1 * 2^3 * (1+1)(2+1) * (3+1) - 1 mixed forms plus C(3,2) equalizers.
    EXPECT_EQ(arr.raw_count, 2u * 8u * 6u * 4u - 1u + 3u);
    int eq = 0;
    for (const auto& w : arr.walls) eq += w.kind == Wall::Kind::Equalizer;
    EXPECT_EQ(eq, 3);
    EXPECT_EQ(walls(s, 2, 0).walls.end() - walls(s, 2, 0).walls.begin() > 0, true);
    for (const auto& w : walls(s, 2, 0).walls) EXPECT_NE(w.kind, Wall::Kind::Equalizer);
}

TEST(Chambers, SignaturesAndLabels) {
    auto s = two_floor_shape(2);
    auto sig = chamber_signature(s, {5, 3}, {-10});
    EXPECT_EQ(named_label(s, {5, 3}, {-10}), "++-");
    EXPECT_EQ(chamber_signature(s, {6, 2}, {-10}), sig);
    EXPECT_NE(chamber_signature(s, {-1, 9}, {-10}), sig);
    EXPECT_EQ(named_label(s, {-1, 9}, {-10}), "0+-");
    try {
        chamber_signature(s, {-1, -1}, {0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroEntry);
    }
    try {
        chamber_signature(s, {-2, 3}, {-3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OnWall);
    }
}

TEST(Chambers, ExtendedSignature) {
    PolygonShape s{{3, 1}, {-1}, {1, 1}, {2}};
    auto sig = extended_signature(s, {5, 3}, {-14});
    // A small perturbation of the slopes (rebalanced through y) stays put.
    PolygonShape t{{4, 1}, {-1}, {1, 1}, {2}};
    EXPECT_EQ(extended_signature(t, {5, 3}, {-15}), sig);
    PolygonShape bad{{1, 3}, {-1}, {1, 1}, {2}};
    try {
        extended_signature(bad, {5, 3}, {-14});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OrderingViolation);
    }
    // Slope zero lies on the wall c_r2 = 0.
    try {
        extended_signature(two_floor_shape(2), {5, 3}, {-10});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OnWall);
    }
}

TEST(Chambers, SampleChamber) {
    auto s = two_floor_shape(2);
    auto arr = walls(s, 2, 1);
    IntVec anchor{5, 3, -10};
    auto pts = sample_chamber(arr, anchor, 20, 15);
    ASSERT_EQ(pts.size(), 20u);
    EXPECT_EQ(pts[0], anchor);
    std::set<IntVec> distinct(pts.begin(), pts.end());
    EXPECT_EQ(distinct.size(), pts.size());
    auto sig = arr.signature(anchor);
    for (const auto& p : pts) {
        EXPECT_TRUE(arr.in_lambda(p));
        EXPECT_EQ(arr.signature(p), sig);
    }
    // Radius zero only returns the anchor.
    EXPECT_EQ(sample_chamber(arr, anchor, 1, 0).size(), 1u);
    try {
        sample_chamber(arr, anchor, 2, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InsufficientSamples);
    }
    try {
        sample_chamber(arr, {-2, 3, -3}, 2, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OnWall);
    }
}

TEST(Chambers, ChambersAreConvex) {
    auto s = two_floor_shape(3);
    auto arr = walls(s, 2, 1);
    auto pts = sample_chamber(arr, {4, -5, -2}, 12, 10);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            // Lattice points on the segment between the two samples.
            IntVec d(3);
            std::int64_t gcd = 0;
            for (int c = 0; c < 3; ++c) {
                d[c] = pts[j][c] - pts[i][c];
                gcd = std::gcd(gcd, std::abs(d[c]));
            }
            for (std::int64_t t = 1; t < gcd; ++t) {
                IntVec q(3);
                for (int c = 0; c < 3; ++c) q[c] = pts[i][c] + d[c] / gcd * t;
                EXPECT_EQ(arr.signature(q), arr.signature(pts[i]));
            }
        }
}

TEST(Chambers, RepresentativesCarryTheirLabel) {
    for (std::int64_t k : {2, 3})
        for (const auto& row : reference_table()) {
            auto p = chamber_representative(k, row.label);
            if (!p) continue;
            EXPECT_EQ(named_label(two_floor_shape(k), {(*p)[0], (*p)[1]}, {(*p)[2]}), row.label);
        }
    // Chambers whose defining inequalities contradict the balancing relation.
    for (std::int64_t k : {1, 2, 3, 4}) {
        EXPECT_FALSE(chamber_representative(k, "00-").has_value());
        EXPECT_FALSE(chamber_representative(k, "0-0").has_value());
    }
}
