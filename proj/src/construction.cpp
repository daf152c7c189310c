#include "loosesat/construction.hpp"

#include <algorithm>

#include "loosesat/errors.hpp"

namespace loosesat {

Vertex BrickLayout::at(const std::string& role) const {
    for (const auto& [name, v] : vertex_map)
        if (name == role) return v;
    throw DomainError("brick has no role " + role);
}

std::vector<Vertex> BrickLayout::vertices() const {
    std::vector<Vertex> out;
    for (const auto& entry : vertex_map) out.push_back(entry.second);
    return out;
}

BrickCounts brick_counts(std::size_t n) {
    if (n < 14) throw DomainError("construction needs n >= 14, got " + std::to_string(n));
    const std::size_t c = (n - 2) % 4 + 2;
    const std::size_t m = (n - c) / 4;
    return {m, c, m + 2 - c, c - 2};
}

std::size_t expected_edge_count(std::size_t n) {
    auto k = brick_counts(n);
    return 6 * k.a_bricks + 9 * k.b_bricks;
}

Construction construct_gn(std::size_t n) {
    const auto counts = brick_counts(n);
    Construction out;
    std::vector<Triple> edges;
    Vertex next = 2;
    auto fresh = [&] { return next++; };

    for (std::size_t i = 1; i <= counts.a_bricks; ++i) {
        const Vertex ax = fresh(), ay = fresh(), a1 = fresh(), a2 = fresh();
        out.bricks.push_back({BrickKind::A, i,
                              {{"x", kHubX}, {"y", kHubY}, {"a_x", ax}, {"a_y", ay}, {"a_1", a1}, {"a_2", a2}}});
        for (const Triple& t : {Triple{kHubX, ax, ay}, Triple{kHubY, ax, ay}, Triple{kHubX, ax, a1},
                                Triple{kHubX, ax, a2}, Triple{kHubY, ay, a1}, Triple{kHubY, ay, a2}})
            edges.push_back(t);
    }
    for (std::size_t i = 1; i <= counts.b_bricks; ++i) {
        const Vertex bx = fresh(), by = fresh(), b1 = fresh(), b2 = fresh(), b3 = fresh();
        out.bricks.push_back({BrickKind::B, i,
                              {{"x", kHubX}, {"y", kHubY}, {"b_x", bx}, {"b_y", by}, {"b_1", b1}, {"b_2", b2},
                               {"b_3", b3}}});
        edges.push_back({kHubX, bx, by});
        edges.push_back({kHubY, bx, by});
        edges.push_back({b1, b2, b3});
        for (Vertex bj : {b1, b2, b3}) {
            edges.push_back({kHubX, bx, bj});
            edges.push_back({kHubY, by, bj});
        }
    }
    out.graph = Hypergraph3::build(n, edges);
    return out;
}

}  // namespace loosesat
