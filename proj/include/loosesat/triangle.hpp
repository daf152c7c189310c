#pragma once

#include <array>
#include <optional>
#include <string>

#include "loosesat/hypergraph.hpp"

namespace loosesat {

/// One edge of a witness: stored edges carry their index, an added edge does not.
struct WitnessEdge {
    std::optional<EdgeId> index;
    Triple vertices;

    friend bool operator==(const WitnessEdge&, const WitnessEdge&) = default;
};

/// A loose triangle C3(3): three edges pairwise meeting in exactly one vertex, the three
/// meeting points (core) distinct, six vertices in total.
struct TriangleWitness {
    std::array<WitnessEdge, 3> edges;
    std::array<Vertex, 3> core;          // ascending
    std::array<Vertex, 6> all_vertices;  // ascending

    friend bool operator==(const TriangleWitness&, const TriangleWitness&) = default;
};

/// Builds the witness fields for three triples, or nullopt if they do not form a loose
/// triangle. This is the independent checker used to re-validate witnesses.
std::optional<TriangleWitness> make_witness(const WitnessEdge& a, const WitnessEdge& b, const WitnessEdge& c);

/// True iff the witness satisfies the loose-triangle invariants and every indexed edge
/// matches g. An edge without index must not be an edge of g.
bool validate_witness(const Hypergraph3& g, const TriangleWitness& w);

/// Lexicographically least edge-index triple forming a loose triangle, if any.
std::optional<TriangleWitness> find_triangle(const Hypergraph3& g);

/// Reference scan over all edge triples. Intended for small graphs only.
std::optional<TriangleWitness> find_triangle_bruteforce(const Hypergraph3& g);

/// A loose triangle of g+e through e, found without building g+e: for each pair of e in
/// ascending order, the least link between the pair that avoids the third vertex.
/// Throws DomainError if e is invalid or already an edge.
std::optional<TriangleWitness> creates_triangle(const Hypergraph3& g, const Triple& e);

std::string to_string(const TriangleWitness& w);

namespace detail {
/// creates_triangle without argument validation; t must be an ascending non-edge.
std::optional<TriangleWitness> triangle_through(const Hypergraph3& g, const Triple& t);
}  // namespace detail

}  // namespace loosesat
