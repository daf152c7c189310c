#include <gtest/gtest.h>

#include "loosesat/construction.hpp"
#include "loosesat/errors.hpp"
#include "loosesat/hypergraph.hpp"
#include "support.hpp"

using namespace loosesat;
using namespace loosesat::testing;

TEST(Build, LooseTriangleDegrees) {
    const auto g = loose_triangle();
    EXPECT_EQ(g.edge_count(), 3u);
    const std::size_t expected[] = {2, 1, 2, 1, 2, 1};
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), expected[v]) << v;
}

TEST(Build, EmptyGraph) {
    const auto g = empty_graph(9);
    EXPECT_EQ(g.vertex_count(), 9u);
    EXPECT_EQ(g.edge_count(), 0u);
    for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(g.degree(v), 0u);
    EXPECT_EQ(g.codegree(3, 7), 0u);
}

TEST(Build, RejectsInvalidTriples) {
    EXPECT_THROW(Hypergraph3::build(5, {{0, 1, 1}}), DomainError);
    EXPECT_THROW(Hypergraph3::build(5, {{0, 1, 5}}), DomainError);
    EXPECT_THROW(Hypergraph3::build(5, {{0, 1, 2}, {2, 1, 0}}), DomainError);
}

TEST(Build, SortsEdgesAndTriples) {
    const auto g = Hypergraph3::build(6, {{5, 4, 3}, {2, 0, 1}});
    ASSERT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.edge(0), (Triple{0, 1, 2}));
    EXPECT_EQ(g.edge(1), (Triple{3, 4, 5}));
    EXPECT_TRUE(g.indexes_consistent());
}

TEST(Degree, OutOfRangeThrows) {
    const auto g = loose_triangle();
    EXPECT_THROW(g.degree(6), DomainError);
}

TEST(Degree, HubOfG16) {
    const auto c = construct_gn(16);
    EXPECT_EQ(c.graph.degree(kHubX), 11u);
    EXPECT_EQ(c.graph.degree(kHubY), 11u);
}

TEST(Codegree, G16Values) {
    const auto c = construct_gn(16);
    const Vertex ax = c.bricks[0].at("a_x");
    EXPECT_EQ(c.graph.codegree(kHubX, ax), 3u);
    EXPECT_EQ(c.graph.codegree(ax, kHubX), 3u);
    EXPECT_EQ(c.graph.codegree(kHubX, kHubY), 0u);
}

TEST(Codegree, Errors) {
    const auto g = loose_triangle();
    EXPECT_THROW(g.codegree(2, 2), DomainError);
    EXPECT_THROW(g.codegree(0, 9), DomainError);
}

TEST(FindLink, HubsOfG14) {
    const auto c = construct_gn(14);
    const auto link = find_link(c.graph, kHubX, kHubY);
    ASSERT_TRUE(link.has_value());
    EXPECT_TRUE(is_valid_link(c.graph, *link));
    EXPECT_EQ(link->endpoint_u, kHubX);
    EXPECT_EQ(link->endpoint_v, kHubY);
}

TEST(FindLink, EmptyGraphHasNone) {
    const auto g = empty_graph(7);
    EXPECT_FALSE(find_link(g, 0, 1).has_value());
}

TEST(FindLink, CrossBrickLinksNeedTheHubs) {
    const auto c = construct_gn(16);
    const Vertex a1 = c.bricks[0].at("a_1");
    const Vertex b1 = c.bricks[1].at("b_1");
    const Vertex hubs[] = {kHubX, kHubY};
    EXPECT_FALSE(find_link(c.graph, a1, b1, hubs).has_value());
    EXPECT_TRUE(find_link(c.graph, a1, b1).has_value() || !is_good_pair(c.graph, a1, b1));
}

TEST(FindLink, LooseTriangleLeastLink) {
    const auto g = loose_path();
    const auto link = find_link(g, 0, 4);
    ASSERT_TRUE(link.has_value());
    EXPECT_EQ(*link, (Link{0, 1, 2, 0, 4}));
}

TEST(FindLink, Errors) {
    const auto g = loose_path();
    EXPECT_THROW(find_link(g, 1, 1), DomainError);
    const Vertex forbidden[] = {0};
    EXPECT_THROW(find_link(g, 0, 4, forbidden), DomainError);
}

TEST(GoodPair, Examples) {
    EXPECT_TRUE(is_good_pair(construct_gn(14).graph, kHubX, kHubY));
    EXPECT_FALSE(is_good_pair(empty_graph(4), 0, 1));
    const auto p = loose_path();
    EXPECT_TRUE(is_good_pair(p, 0, 4));
    EXPECT_THROW(is_good_pair(p, 2, 2), DomainError);
}

TEST(GoodPair, BlockedEndpoints) {
    // 1 lies in the first edge and 3 in the second; a 1,3-link would need 1 off the
    // second edge and 3 off the first, which holds, so the pair is good through center 2.
    const auto p = loose_path();
    const auto link = find_link(p, 1, 3);
    ASSERT_TRUE(link.has_value());
    EXPECT_EQ(link->center, 2u);
    // Endpoints that share the center's edge cannot be linked.
    EXPECT_FALSE(is_good_pair(p, 0, 1));
    EXPECT_FALSE(is_good_pair(p, 2, 4));
}

TEST(EdgePattern, Examples) {
    const auto c = construct_gn(16);
    const auto& g = c.graph;
    const Vertex ax = c.bricks[0].at("a_x"), a1 = c.bricks[0].at("a_1");
    const auto M = VertexClass::in({kHubX, kHubY});
    const auto L = VertexClass{[&](const Hypergraph3& h, Vertex v) { return h.degree(v) < 6; }};
    EXPECT_TRUE(edge_pattern(g, make_triple(kHubX, ax, a1), {M, L, VertexClass::of_degree(2)}));

    const auto t = loose_triangle();
    const auto all = VertexClass::all();
    for (const auto& e : t.edges()) EXPECT_TRUE(edge_pattern(t, e, {all, all, all}));
    const auto two = VertexClass::of_degree(2);
    EXPECT_FALSE(edge_pattern(t, {0, 1, 2}, {two, two, two}));
    EXPECT_THROW(edge_pattern(t, {1, 3, 5}, {all, all, all}), DomainError);
}

TEST(EdgePattern, AssignmentOrderDoesNotMatter) {
    const auto t = loose_triangle();
    const auto one = VertexClass::of_degree(1), two = VertexClass::of_degree(2);
    EXPECT_TRUE(edge_pattern(t, {0, 1, 2}, {one, two, two}));
    EXPECT_TRUE(edge_pattern(t, {0, 1, 2}, {two, one, two}));
    EXPECT_FALSE(edge_pattern(t, {0, 1, 2}, {one, one, two}));
    EXPECT_TRUE(edge_pattern(t, {0, 1, 2}, {VertexClass::just(1), VertexClass::just(2), VertexClass::just(0)}));
}

TEST(Derived, WithAndWithoutEdge) {
    const auto p = loose_path();
    const auto t = p.with_edge({0, 4, 5});
    EXPECT_EQ(t, loose_triangle());
    EXPECT_THROW(p.with_edge({0, 1, 2}), DomainError);
    EXPECT_EQ(t.without_edge(*t.find_edge({0, 4, 5})), p);
}

TEST(Derived, InducedAndRelabel) {
    const auto c = construct_gn(14);
    const auto verts = c.bricks[0].vertices();
    const auto brick = induced_subgraph(c.graph, verts);
    EXPECT_EQ(brick.vertex_count(), 6u);
    EXPECT_EQ(brick.edge_count(), 6u);

    std::vector<Vertex> perm = {5, 4, 3, 2, 1, 0};
    const auto r = relabel(loose_triangle(), perm);
    EXPECT_TRUE(r.has_edge({3, 4, 5}));
    EXPECT_TRUE(r.has_edge({1, 2, 3}));
    EXPECT_TRUE(r.has_edge({0, 1, 5}));
}

// Properties on random graphs.

class RandomGraphs : public ::testing::TestWithParam<int> {};

TEST_P(RandomGraphs, DegreeCodegreeIdentities) {
    std::mt19937_64 rng(1000 + GetParam());
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t n = 3 + rng() % 10;
        const auto g = random_graph(rng, n, 30);
        std::size_t sum = 0;
        for (Vertex v = 0; v < n; ++v) sum += g.degree(v);
        EXPECT_EQ(sum, 3 * g.edge_count());
        EXPECT_TRUE(g.indexes_consistent());
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                const auto cd = g.codegree(u, v);
                EXPECT_EQ(cd, g.codegree(v, u));
                EXPECT_LE(cd, std::min(g.degree(u), g.degree(v)));
                std::size_t naive = 0;
                for (const auto& e : g.edges()) naive += contains(e, u) && contains(e, v);
                EXPECT_EQ(cd, naive);
            }
    }
}

TEST_P(RandomGraphs, LinkExistenceIsSymmetricAndValid) {
    std::mt19937_64 rng(2000 + GetParam());
    for (int iter = 0; iter < 30; ++iter) {
        const std::size_t n = 5 + rng() % 7;
        const auto g = random_graph(rng, n, 20);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                if (u == v) continue;
                const auto a = find_link(g, u, v), b = find_link(g, v, u);
                EXPECT_EQ(a.has_value(), b.has_value());
                if (a) EXPECT_TRUE(is_valid_link(g, *a));
                // Brute force over ordered edge pairs, least first.
                std::optional<Link> naive;
                for (EdgeId i = 0; i < g.edge_count() && !naive; ++i)
                    for (EdgeId j = 0; j < g.edge_count() && !naive; ++j) {
                        const auto &e = g.edge(i), &f = g.edge(j);
                        if (i == j || overlap(e, f) != 1 || !contains(e, u) || !contains(f, v) || contains(f, u) ||
                            contains(e, v))
                            continue;
                        Vertex z = 0;
                        for (Vertex w : e)
                            if (contains(f, w)) z = w;
                        naive = Link{i, j, z, u, v};
                    }
                EXPECT_EQ(a, naive);
            }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraphs, ::testing::Range(0, 4));
