#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "loosesat/hypergraph.hpp"

namespace loosesat {

enum class BrickKind { A, B };

/// One brick of G_n. Roles are listed in numbering order; the hubs come first.
///   A brick: x, y, a_x, a_y, a_1, a_2     (4 fresh vertices, 6 edges)
///   B brick: x, y, b_x, b_y, b_1, b_2, b_3 (5 fresh vertices, 9 edges)
struct BrickLayout {
    BrickKind kind;
    std::size_t index;  // 1-based within its kind
    std::vector<std::pair<std::string, Vertex>> vertex_map;

    Vertex at(const std::string& role) const;
    std::vector<Vertex> vertices() const;
};

struct Construction {
    Hypergraph3 graph;
    std::vector<BrickLayout> bricks;
};

inline constexpr Vertex kHubX = 0;
inline constexpr Vertex kHubY = 1;

/// n = 4m + c with 2 <= c <= 5.
struct BrickCounts {
    std::size_t m;
    std::size_t c;
    std::size_t a_bricks;  // m + 2 - c
    std::size_t b_bricks;  // c - 2
};

/// Throws DomainError for n < 14.
BrickCounts brick_counts(std::size_t n);

/// The two-hub brick construction on n >= 14 vertices: (m+2-c) A-bricks then (c-2)
/// B-bricks glued at x = 0 and y = 1, fresh vertices numbered consecutively per brick.
Construction construct_gn(std::size_t n);

/// 6(m+2-c) + 9(c-2).
std::size_t expected_edge_count(std::size_t n);

}  // namespace loosesat
