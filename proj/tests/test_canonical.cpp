#include <gtest/gtest.h>

#include <algorithm>

#include "loosesat/canonical.hpp"
#include "loosesat/construction.hpp"
#include "loosesat/saturation.hpp"
#include "support.hpp"

using namespace loosesat;
using namespace loosesat::testing;

namespace {

bool isomorphic_bruteforce(const Hypergraph3& a, const Hypergraph3& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<Vertex> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), Vertex(0));
    do {
        if (relabel(a, perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

void expect_invariant(const Hypergraph3& g, std::uint64_t seed, int rounds) {
    const auto form = canonical_form(g);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < rounds; ++i) {
        const auto perm = random_permutation(rng, g.vertex_count());
        ASSERT_EQ(canonical_form(relabel(g, perm)), form) << "round " << i;
    }
}

}  // namespace

TEST(CanonicalForm, InvariantUnderPermutation) {
    expect_invariant(loose_triangle(), 1, 1000);
    expect_invariant(loose_path(), 2, 1000);
    expect_invariant(construct_gn(14).graph, 3, 1000);
    expect_invariant(saturate_greedy(empty_graph(10), 4), 5, 1000);
}

TEST(CanonicalForm, InvariantOnRandomGraphs) {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20; ++i) {
        const auto g = random_graph(rng, 4 + rng() % 9, 25);
        expect_invariant(g, 100 + i, 50);
    }
}

TEST(CanonicalForm, RegularGraphsWithManyAutomorphisms) {
    // Complete graphs and disjoint unions stress the automorphism pruning.
    std::vector<Triple> k6;
    for (Vertex a = 0; a < 6; ++a)
        for (Vertex b = a + 1; b < 6; ++b)
            for (Vertex c = b + 1; c < 6; ++c) k6.push_back({a, b, c});
    expect_invariant(Hypergraph3::build(6, k6), 9, 200);
    expect_invariant(Hypergraph3::build(12, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}}), 10, 200);
}

TEST(CanonicalForm, DistinguishesTriangleFromPath) {
    const auto path3 = Hypergraph3::build(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    const auto tri = Hypergraph3::build(7, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
    EXPECT_NE(canonical_form(path3), canonical_form(tri));
}

TEST(CanonicalForm, TwoLabelingsOfG14) {
    const auto g = construct_gn(14).graph;
    std::mt19937_64 rng(8);
    const auto h = relabel(g, random_permutation(rng, 14));
    EXPECT_NE(g, h);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_EQ(canonical_graph(g), canonical_graph(h));
}

TEST(CanonicalForm, AgreesWithBruteForceIsomorphism) {
    // Same n and edge count, so only structure separates the pairs.
    std::mt19937_64 rng(31);
    int iso = 0, non_iso = 0;
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = 6 + rng() % 2;
        const std::size_t m = 2 + rng() % 4;
        std::set<Triple> ea, eb;
        while (ea.size() < m) ea.insert(random_triple(rng, n));
        while (eb.size() < m) eb.insert(random_triple(rng, n));
        const auto a = Hypergraph3::build(n, std::vector<Triple>(ea.begin(), ea.end()));
        const auto b = Hypergraph3::build(n, std::vector<Triple>(eb.begin(), eb.end()));
        const bool same = canonical_form(a) == canonical_form(b);
        ASSERT_EQ(same, isomorphic_bruteforce(a, b)) << i;
        (same ? iso : non_iso)++;
    }
    EXPECT_GT(iso, 0);
    EXPECT_GT(non_iso, 0);
}

TEST(CanonicalForm, LabelingIsAPermutationProducingTheForm) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto g = random_graph(rng, 3 + rng() % 10, 20);
        auto lab = canonical_labeling(g);
        ASSERT_EQ(lab.size(), g.vertex_count());
        auto sorted = lab;
        std::sort(sorted.begin(), sorted.end());
        for (Vertex v = 0; v < sorted.size(); ++v) ASSERT_EQ(sorted[v], v);
        EXPECT_EQ(relabel(g, lab), canonical_graph(g));
    }
}

TEST(CanonicalForm, EncodingHeader) {
    const auto form = canonical_form(loose_triangle());
    ASSERT_EQ(form.size(), 4u * (2 + 3 * 3));
    EXPECT_EQ(to_hex(form.substr(0, 8)), "0000000600000003");
    EXPECT_EQ(canonical_form(empty_graph(0)).size(), 8u);
}
