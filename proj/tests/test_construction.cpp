#include <gtest/gtest.h>

#include <set>

#include "loosesat/construction.hpp"
#include "loosesat/errors.hpp"
#include "loosesat/saturation.hpp"

using namespace loosesat;

TEST(Construct, SmallCases) {
    const auto c14 = construct_gn(14);
    EXPECT_EQ(c14.graph.vertex_count(), 14u);
    EXPECT_EQ(c14.graph.edge_count(), 18u);
    EXPECT_EQ(c14.bricks.size(), 3u);
    for (const auto& b : c14.bricks) EXPECT_EQ(b.kind, BrickKind::A);

    const auto c16 = construct_gn(16);
    EXPECT_EQ(c16.graph.edge_count(), 24u);
    ASSERT_EQ(c16.bricks.size(), 3u);
    EXPECT_EQ(c16.bricks[0].kind, BrickKind::A);
    EXPECT_EQ(c16.bricks[1].kind, BrickKind::B);
    EXPECT_EQ(c16.bricks[2].kind, BrickKind::B);

    EXPECT_EQ(construct_gn(17).graph.edge_count(), 27u);
}

TEST(Construct, RejectsSmallN) {
    for (std::size_t n : {0u, 5u, 13u}) {
        EXPECT_THROW(construct_gn(n), DomainError);
        EXPECT_THROW(expected_edge_count(n), DomainError);
        EXPECT_THROW(brick_counts(n), DomainError);
    }
}

TEST(ExpectedEdgeCount, Examples) {
    EXPECT_EQ(expected_edge_count(20), 30u);
    EXPECT_EQ(expected_edge_count(15), 21u);
    EXPECT_EQ(expected_edge_count(14), 18u);
}

TEST(ExpectedEdgeCount, PiecewiseClosedForm) {
    // Twice the count: 3n, 3n+3, 3n-6, 3n-3 for n = 0,1,2,3 mod 4.
    const long offset[] = {0, 3, -6, -3};
    for (std::size_t n = 14; n <= 500; ++n) {
        const long twice = 3 * long(n) + offset[n % 4];
        ASSERT_EQ(2 * long(expected_edge_count(n)), twice) << n;
        ASSERT_EQ(construct_gn(n).graph.edge_count(), expected_edge_count(n)) << n;
    }
}

TEST(BrickCounts, Decomposition) {
    for (std::size_t n = 14; n <= 200; ++n) {
        const auto b = brick_counts(n);
        ASSERT_GE(b.c, 2u);
        ASSERT_LE(b.c, 5u);
        ASSERT_EQ(4 * b.m + b.c, n);
        ASSERT_EQ(b.a_bricks, b.m + 2 - b.c);
        ASSERT_EQ(b.b_bricks, b.c - 2);
        ASSERT_EQ(2 + 4 * b.a_bricks + 5 * b.b_bricks, n);
    }
}

TEST(Bricks, StructuralInvariants) {
    for (std::size_t n = 14; n <= 80; ++n) {
        const auto c = construct_gn(n);
        const auto& g = c.graph;
        EXPECT_EQ(g.codegree(kHubX, kHubY), 0u);
        std::set<Vertex> seen{kHubX, kHubY};
        std::size_t edges = 0;
        for (const auto& b : c.bricks) {
            const auto verts = b.vertices();
            EXPECT_EQ(b.at("x"), kHubX);
            EXPECT_EQ(b.at("y"), kHubY);
            const std::size_t fresh = b.kind == BrickKind::A ? 4 : 5;
            ASSERT_EQ(verts.size(), fresh + 2);
            for (std::size_t i = 2; i < verts.size(); ++i) EXPECT_TRUE(seen.insert(verts[i]).second);

            const auto brick = induced_subgraph(g, verts);
            EXPECT_EQ(brick.edge_count(), b.kind == BrickKind::A ? 6u : 9u);
            edges += brick.edge_count();
            EXPECT_TRUE(is_free(brick));
            // Hubs are the first two vertices of every brick.
            EXPECT_TRUE(find_link(brick, 0, 1).has_value());
        }
        EXPECT_EQ(seen.size(), n);
        EXPECT_EQ(edges, g.edge_count());
    }
}

TEST(Bricks, NumberingIsConsecutive) {
    const auto c = construct_gn(16);
    Vertex next = 2;
    for (const auto& b : c.bricks) {
        const auto verts = b.vertices();
        for (std::size_t i = 2; i < verts.size(); ++i) EXPECT_EQ(verts[i], next++);
    }
    EXPECT_EQ(c.bricks[0].at("a_1"), 4u);
    EXPECT_EQ(c.bricks[1].at("b_x"), 6u);
    EXPECT_THROW(c.bricks[0].at("b_1"), DomainError);
}

TEST(Construct, ABrickEdgeList) {
    const auto c = construct_gn(14);
    const auto& b = c.bricks[0];
    const auto& g = c.graph;
    const Vertex x = b.at("x"), ax = b.at("a_x"), ay = b.at("a_y"), a1 = b.at("a_1"),
                 a2 = b.at("a_2");
    EXPECT_TRUE(g.has_edge(make_triple(x, ax, ay)));
    EXPECT_TRUE(g.has_edge(make_triple(x, ax, a1)));
    EXPECT_TRUE(g.has_edge(make_triple(x, ax, a2)));
    EXPECT_EQ(g.codegree(x, ax), 3u);
    EXPECT_EQ(g.degree(a1), 2u);
    EXPECT_EQ(g.degree(ax), 4u);
}

TEST(Construct, SaturatedUpTo60) {
    for (std::size_t n = 14; n <= 60; ++n) {
        const auto g = construct_gn(n).graph;
        EXPECT_TRUE(is_free(g)) << n;
        EXPECT_EQ(verify_saturated(g).verdict, Verdict::Saturated) << n;
    }
}
