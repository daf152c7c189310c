#include "loosesat/triangle.hpp"

#include <algorithm>
#include <set>

#include "loosesat/errors.hpp"

namespace loosesat {
namespace {

// The single common vertex of two triples meeting in exactly one vertex.
Vertex meet(const Triple& a, const Triple& b) {
    for (Vertex v : a)
        if (contains(b, v)) return v;
    return Vertex(-1);
}

}  // namespace

std::optional<TriangleWitness> make_witness(const WitnessEdge& a, const WitnessEdge& b, const WitnessEdge& c) {
    const Triple& x = a.vertices;
    const Triple& y = b.vertices;
    const Triple& z = c.vertices;
    if (overlap(x, y) != 1 || overlap(y, z) != 1 || overlap(x, z) != 1) return std::nullopt;
    std::array<Vertex, 3> core{meet(x, y), meet(y, z), meet(x, z)};
    std::sort(core.begin(), core.end());
    if (core[0] == core[1] || core[1] == core[2]) return std::nullopt;
    std::set<Vertex> all(x.begin(), x.end());
    all.insert(y.begin(), y.end());
    all.insert(z.begin(), z.end());
    if (all.size() != 6) return std::nullopt;
    TriangleWitness w{{a, b, c}, core, {}};
    std::copy(all.begin(), all.end(), w.all_vertices.begin());
    return w;
}

bool validate_witness(const Hypergraph3& g, const TriangleWitness& w) {
    for (const auto& e : w.edges) {
        for (Vertex v : e.vertices)
            if (v >= g.vertex_count()) return false;
        if (e.index) {
            if (*e.index >= g.edge_count() || g.edge(*e.index) != e.vertices) return false;
        } else if (g.has_edge(e.vertices)) {
            return false;
        }
    }
    auto rebuilt = make_witness(w.edges[0], w.edges[1], w.edges[2]);
    if (!rebuilt || rebuilt->core != w.core || rebuilt->all_vertices != w.all_vertices) return false;
    for (Vertex c : w.core) {
        int hits = 0;
        for (const auto& e : w.edges) hits += contains(e.vertices, c);
        if (hits != 2) return false;
    }
    return true;
}

std::optional<TriangleWitness> find_triangle(const Hypergraph3& g) {
    const auto& edges = g.edges();
    std::vector<EdgeId> partners;
    for (EdgeId i = 0; i < edges.size(); ++i) {
        const Triple& a = edges[i];
        // Edges j > i sharing exactly one vertex with a, ascending.
        partners.clear();
        for (Vertex v : a)
            for (EdgeId j : g.incident(v))
                if (j > i && overlap(a, edges[j]) == 1) partners.push_back(j);
        std::sort(partners.begin(), partners.end());
        partners.erase(std::unique(partners.begin(), partners.end()), partners.end());

        for (EdgeId j : partners) {
            const Triple& b = edges[j];
            Vertex shared = meet(a, b);
            std::optional<EdgeId> best;
            // The closing edge holds one private vertex of a, one of b, and a fresh vertex.
            for (Vertex p : a) {
                if (p == shared) continue;
                for (Vertex q : b) {
                    if (q == shared) continue;
                    for (EdgeId k : g.edges_containing(p, q)) {
                        if (k <= j) continue;
                        if (best && k >= *best) break;
                        const Triple& c = edges[k];
                        if (overlap(a, c) == 1 && overlap(b, c) == 1 && !contains(c, shared)) {
                            best = k;
                            break;
                        }
                    }
                }
            }
            if (best)
                return make_witness({i, a}, {j, b}, {*best, edges[*best]});
        }
    }
    return std::nullopt;
}

std::optional<TriangleWitness> find_triangle_bruteforce(const Hypergraph3& g) {
    const auto& edges = g.edges();
    for (EdgeId i = 0; i < edges.size(); ++i)
        for (EdgeId j = i + 1; j < edges.size(); ++j)
            for (EdgeId k = j + 1; k < edges.size(); ++k)
                if (auto w = make_witness({i, edges[i]}, {j, edges[j]}, {k, edges[k]})) return w;
    return std::nullopt;
}

std::optional<TriangleWitness> creates_triangle(const Hypergraph3& g, const Triple& e) {
    Triple t = make_triple(e[0], e[1], e[2]);
    for (Vertex v : t) g.check_vertex(v);
    if (g.has_edge(t)) throw DomainError(to_string(t) + " is already an edge");
    return detail::triangle_through(g, t);
}

std::optional<TriangleWitness> detail::triangle_through(const Hypergraph3& g, const Triple& t) {
    // Pairs in ascending order: (0,1) avoiding 2, (0,2) avoiding 1, (1,2) avoiding 0.
    constexpr int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    for (const auto& p : pairs) {
        Vertex avoid[1] = {t[p[2]]};
        if (auto link = find_link(g, t[p[0]], t[p[1]], avoid)) {
            return make_witness({std::nullopt, t}, {link->first_edge, g.edge(link->first_edge)},
                                {link->second_edge, g.edge(link->second_edge)});
        }
    }
    return std::nullopt;
}

std::string to_string(const TriangleWitness& w) {
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) s += " ";
        s += to_string(w.edges[i].vertices);
        if (w.edges[i].index) s += "#" + std::to_string(*w.edges[i].index);
        else s += "+";
    }
    return s;
}

}  // namespace loosesat
