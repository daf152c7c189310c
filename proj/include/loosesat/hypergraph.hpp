#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace loosesat {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Three distinct vertices in ascending order.
using Triple = std::array<Vertex, 3>;

/// Sorts three vertices into a Triple. Throws DomainError on a repeated vertex.
Triple make_triple(Vertex a, Vertex b, Vertex c);

inline bool contains(const Triple& t, Vertex v) noexcept {
    return t[0] == v || t[1] == v || t[2] == v;
}

/// Number of vertices shared by two triples.
inline int overlap(const Triple& a, const Triple& b) noexcept {
    return int(contains(b, a[0])) + int(contains(b, a[1])) + int(contains(b, a[2]));
}

std::string to_string(const Triple& t);

/// Immutable 3-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored as ascending triples in lexicographic order, so two graphs with the
/// same labeled edge set compare equal and serialize identically. Per-vertex incidence
/// lists and the sparse pair index (pairs with codegree >= 1) hold edge ids in ascending
/// order; every query that returns "the least" witness relies on that ordering.
class Hypergraph3 {
public:
    Hypergraph3() = default;

    /// Validates and indexes. Throws DomainError on an out-of-range vertex, a repeated
    /// vertex inside a triple, or a duplicate edge. Input order is irrelevant.
    static Hypergraph3 build(std::size_t n, std::span<const Triple> triples);
    static Hypergraph3 build(std::size_t n, std::initializer_list<Triple> triples) {
        return build(n, std::span<const Triple>(triples.begin(), triples.size()));
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Triple>& edges() const noexcept { return edges_; }
    const Triple& edge(EdgeId e) const { return edges_.at(e); }

    /// Edge ids containing v, ascending.
    std::span<const EdgeId> incident(Vertex v) const;
    /// Edge ids containing both u and v, ascending. Empty when the codegree is 0.
    std::span<const EdgeId> edges_containing(Vertex u, Vertex v) const;

    std::size_t degree(Vertex v) const;
    std::size_t codegree(Vertex u, Vertex v) const;

    std::optional<EdgeId> find_edge(const Triple& t) const;
    bool has_edge(const Triple& t) const { return find_edge(t).has_value(); }

    /// N(v): vertices other than v sharing an edge with v, ascending.
    std::vector<Vertex> neighbors(Vertex v) const;

    /// A new graph with one more edge. Throws DomainError if t is invalid or present.
    Hypergraph3 with_edge(const Triple& t) const;
    /// A new graph with edge e removed.
    Hypergraph3 without_edge(EdgeId e) const;

    /// Recomputes the indexes from the edge list and compares them with the stored ones.
    bool indexes_consistent() const;

    void check_vertex(Vertex v) const;

    friend bool operator==(const Hypergraph3& a, const Hypergraph3& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    using PairIndex = std::unordered_map<std::uint64_t, std::vector<EdgeId>>;

    static std::uint64_t pair_key(Vertex u, Vertex v) noexcept {
        if (u > v) std::swap(u, v);
        return (std::uint64_t(u) << 32) | v;
    }
    static void index(std::size_t n, const std::vector<Triple>& edges,
                      std::vector<std::vector<EdgeId>>& incidence, PairIndex& pairs);

    std::size_t n_ = 0;
    std::vector<Triple> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    PairIndex pair_index_;
};

/// A 2-edge loose path: first_edge and second_edge meet exactly in `center`;
/// endpoint_u lies only in first_edge, endpoint_v only in second_edge.
struct Link {
    EdgeId first_edge;
    EdgeId second_edge;
    Vertex center;
    Vertex endpoint_u;
    Vertex endpoint_v;

    friend bool operator==(const Link&, const Link&) = default;
};

/// Lexicographically least (first_edge, second_edge) u,v-link whose edges avoid every
/// vertex of `forbidden`, or nullopt if none exists.
std::optional<Link> find_link(const Hypergraph3& g, Vertex u, Vertex v,
                              std::span<const Vertex> forbidden = {});

/// Checks the Link invariants against g from scratch.
bool is_valid_link(const Hypergraph3& g, const Link& link);

bool is_good_pair(const Hypergraph3& g, Vertex u, Vertex v);

/// A vertex class for (A,B,C)-edge patterns: a set, a degree value, or any predicate.
struct VertexClass {
    std::function<bool(const Hypergraph3&, Vertex)> test;

    static VertexClass all();
    static VertexClass of_degree(std::size_t d);
    static VertexClass in(std::vector<Vertex> members);
    static VertexClass just(Vertex v);
};

/// True iff some assignment of the vertices of edge e to the three classes satisfies all
/// three tests. Throws DomainError if e is not an edge of g.
bool edge_pattern(const Hypergraph3& g, const Triple& e, const std::array<VertexClass, 3>& classes);

/// Sub-hypergraph induced by `vertices` (relabeled 0..k-1 in the given order).
Hypergraph3 induced_subgraph(const Hypergraph3& g, std::span<const Vertex> vertices);

/// Applies a vertex relabeling: vertex v becomes perm[v].
Hypergraph3 relabel(const Hypergraph3& g, std::span<const Vertex> perm);

}  // namespace loosesat
