#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "loosesat/hypergraph.hpp"

namespace loosesat::testing {

inline Hypergraph3 loose_triangle() { return Hypergraph3::build(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}); }

inline Hypergraph3 loose_path() { return Hypergraph3::build(6, {{0, 1, 2}, {2, 3, 4}}); }

inline Hypergraph3 empty_graph(std::size_t n) { return Hypergraph3::build(n, std::span<const Triple>{}); }

inline Triple random_triple(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<Vertex> pick(0, Vertex(n - 1));
    Vertex a = pick(rng), b = pick(rng), c = pick(rng);
    while (b == a) b = pick(rng);
    while (c == a || c == b) c = pick(rng);
    return make_triple(a, b, c);
}

/// Up to `max_edges` distinct random edges on n >= 3 vertices.
inline Hypergraph3 random_graph(std::mt19937_64& rng, std::size_t n, std::size_t max_edges) {
    std::set<Triple> edges;
    std::uniform_int_distribution<std::size_t> count(0, max_edges);
    const std::size_t m = count(rng);
    for (std::size_t i = 0; i < m; ++i) edges.insert(random_triple(rng, n));
    return Hypergraph3::build(n, std::vector<Triple>(edges.begin(), edges.end()));
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex(0));
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace loosesat::testing
