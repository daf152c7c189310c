#include "loosesat/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "loosesat/errors.hpp"

namespace loosesat {

Triple make_triple(Vertex a, Vertex b, Vertex c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
        throw DomainError("repeated vertex in triple " + to_string(t));
    return t;
}

std::string to_string(const Triple& t) {
    return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

void Hypergraph3::index(std::size_t n, const std::vector<Triple>& edges,
                        std::vector<std::vector<EdgeId>>& incidence, PairIndex& pairs) {
    incidence.assign(n, {});
    pairs.clear();
    for (EdgeId e = 0; e < edges.size(); ++e) {
        const auto& t = edges[e];
        for (Vertex v : t) incidence[v].push_back(e);
        pairs[pair_key(t[0], t[1])].push_back(e);
        pairs[pair_key(t[0], t[2])].push_back(e);
        pairs[pair_key(t[1], t[2])].push_back(e);
    }
}

Hypergraph3 Hypergraph3::build(std::size_t n, std::span<const Triple> triples) {
    Hypergraph3 g;
    g.n_ = n;
    g.edges_.reserve(triples.size());
    for (const auto& raw : triples) {
        for (Vertex v : raw)
            if (v >= n)
                throw DomainError("vertex " + std::to_string(v) + " out of range for n=" +
                                  std::to_string(n));
        g.edges_.push_back(make_triple(raw[0], raw[1], raw[2]));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) throw DomainError("duplicate edge " + to_string(*dup));
    index(n, g.edges_, g.incidence_, g.pair_index_);
    return g;
}

void Hypergraph3::check_vertex(Vertex v) const {
    if (v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

std::span<const EdgeId> Hypergraph3::incident(Vertex v) const {
    check_vertex(v);
    return incidence_[v];
}

std::span<const EdgeId> Hypergraph3::edges_containing(Vertex u, Vertex v) const {
    auto it = pair_index_.find(pair_key(u, v));
    if (it == pair_index_.end()) return {};
    return it->second;
}

std::size_t Hypergraph3::degree(Vertex v) const {
    check_vertex(v);
    return incidence_[v].size();
}

std::size_t Hypergraph3::codegree(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("codegree of a vertex with itself");
    return edges_containing(u, v).size();
}

std::optional<EdgeId> Hypergraph3::find_edge(const Triple& t) const {
    if (t[0] >= n_ || t[1] >= n_ || t[2] >= n_) return std::nullopt;
    for (EdgeId e : edges_containing(t[0], t[1]))
        if (contains(edges_[e], t[2])) return e;
    return std::nullopt;
}

std::vector<Vertex> Hypergraph3::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (EdgeId e : incident(v))
        for (Vertex w : edges_[e])
            if (w != v) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Hypergraph3 Hypergraph3::with_edge(const Triple& t) const {
    std::vector<Triple> all = edges_;
    all.push_back(t);
    return build(n_, all);
}

Hypergraph3 Hypergraph3::without_edge(EdgeId e) const {
    std::vector<Triple> all = edges_;
    all.erase(all.begin() + std::ptrdiff_t(e));
    return build(n_, all);
}

bool Hypergraph3::indexes_consistent() const {
    std::vector<std::vector<EdgeId>> inc;
    PairIndex pairs;
    index(n_, edges_, inc, pairs);
    return inc == incidence_ && pairs == pair_index_;
}

std::optional<Link> find_link(const Hypergraph3& g, Vertex u, Vertex v, std::span<const Vertex> forbidden) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw DomainError("link endpoints must differ");
    auto is_forbidden = [&](Vertex w) {
        return std::find(forbidden.begin(), forbidden.end(), w) != forbidden.end();
    };
    if (is_forbidden(u) || is_forbidden(v)) throw DomainError("link endpoint is forbidden");
    auto avoids = [&](const Triple& t) {
        return !is_forbidden(t[0]) && !is_forbidden(t[1]) && !is_forbidden(t[2]);
    };

    for (EdgeId e1 : g.incident(u)) {
        const Triple& first = g.edge(e1);
        if (contains(first, v) || !avoids(first)) continue;
        std::optional<Link> best;
        for (Vertex z : first) {
            if (z == u) continue;
            for (EdgeId e2 : g.edges_containing(z, v)) {
                if (best && e2 >= best->second_edge) break;
                const Triple& second = g.edge(e2);
                if (contains(second, u) || !avoids(second) || overlap(first, second) != 1) continue;
                best = Link{e1, e2, z, u, v};
                break;
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

bool is_valid_link(const Hypergraph3& g, const Link& l) {
    if (l.first_edge >= g.edge_count() || l.second_edge >= g.edge_count()) return false;
    const Triple& a = g.edge(l.first_edge);
    const Triple& b = g.edge(l.second_edge);
    std::set<Vertex> uni(a.begin(), a.end());
    uni.insert(b.begin(), b.end());
    return overlap(a, b) == 1 && contains(a, l.center) && contains(b, l.center) &&
           l.endpoint_u != l.center && l.endpoint_v != l.center && contains(a, l.endpoint_u) &&
           contains(b, l.endpoint_v) && !contains(b, l.endpoint_u) && !contains(a, l.endpoint_v) &&
           uni.size() == 5;
}

bool is_good_pair(const Hypergraph3& g, Vertex u, Vertex v) {
    return find_link(g, u, v).has_value();
}

VertexClass VertexClass::all() {
    return {[](const Hypergraph3&, Vertex) { return true; }};
}

VertexClass VertexClass::of_degree(std::size_t d) {
    return {[d](const Hypergraph3& g, Vertex v) { return g.degree(v) == d; }};
}

VertexClass VertexClass::in(std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    return {[m = std::move(members)](const Hypergraph3&, Vertex v) {
        return std::binary_search(m.begin(), m.end(), v);
    }};
}

VertexClass VertexClass::just(Vertex v) {
    return {[v](const Hypergraph3&, Vertex w) { return v == w; }};
}

bool edge_pattern(const Hypergraph3& g, const Triple& e, const std::array<VertexClass, 3>& classes) {
    if (!g.has_edge(e)) throw DomainError(to_string(e) + " is not an edge");
    std::array<Vertex, 3> order = e;
    do {
        if (classes[0].test(g, order[0]) && classes[1].test(g, order[1]) && classes[2].test(g, order[2]))
            return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

Hypergraph3 induced_subgraph(const Hypergraph3& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> local(g.vertex_count(), Vertex(-1));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.check_vertex(vertices[i]);
        local[vertices[i]] = Vertex(i);
    }
    std::vector<Triple> kept;
    for (const auto& t : g.edges()) {
        if (local[t[0]] == Vertex(-1) || local[t[1]] == Vertex(-1) || local[t[2]] == Vertex(-1)) continue;
        kept.push_back(make_triple(local[t[0]], local[t[1]], local[t[2]]));
    }
    return Hypergraph3::build(vertices.size(), kept);
}

Hypergraph3 relabel(const Hypergraph3& g, std::span<const Vertex> perm) {
    if (perm.size() != g.vertex_count()) throw DomainError("permutation size mismatch");
    std::vector<Triple> out;
    out.reserve(g.edge_count());
    for (const auto& t : g.edges()) out.push_back(make_triple(perm[t[0]], perm[t[1]], perm[t[2]]));
    return Hypergraph3::build(g.vertex_count(), out);
}

}  // namespace loosesat
