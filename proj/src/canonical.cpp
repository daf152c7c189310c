#include "loosesat/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace loosesat {
namespace {

using Coloring = std::vector<std::uint32_t>;
using Certificate = std::vector<Triple>;

// Replaces keys by their rank among the distinct keys. Returns the number of classes.
template <typename Key>
std::size_t rank_keys(const std::vector<Key>& keys, Coloring& out) {
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
    out.assign(keys.size(), 0);
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && keys[order[i - 1]] < keys[order[i]]) ++rank;
        out[order[i]] = rank;
    }
    return keys.empty() ? 0 : rank + 1;
}

class Canonizer {
public:
    explicit Canonizer(const Hypergraph3& g) : g_(g), n_(g.vertex_count()) {}

    std::vector<Vertex> run() {
        if (n_ == 0) return {};
        Coloring colors = initial_coloring();
        refine(colors);
        std::vector<Vertex> prefix;
        search(colors, prefix);
        return std::vector<Vertex>(best_labeling_.begin(), best_labeling_.end());
    }

private:
    Coloring initial_coloring() const {
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> keys(n_);
        for (Vertex v = 0; v < n_; ++v) {
            keys[v].first = g_.degree(v);
            for (Vertex w : g_.neighbors(v)) keys[v].second.push_back(g_.codegree(v, w));
            std::sort(keys[v].second.begin(), keys[v].second.end());
        }
        Coloring c;
        rank_keys(keys, c);
        return c;
    }

    void refine(Coloring& colors) const {
        std::size_t classes = count_classes(colors);
        while (classes < n_) {
            std::vector<std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>> keys(n_);
            for (Vertex v = 0; v < n_; ++v) {
                keys[v].first = colors[v];
                for (EdgeId e : g_.incident(v)) {
                    std::uint32_t a = 0, b = 0;
                    bool first = true;
                    for (Vertex w : g_.edge(e)) {
                        if (w == v) continue;
                        (first ? a : b) = colors[w];
                        first = false;
                    }
                    keys[v].second.emplace_back(std::min(a, b), std::max(a, b));
                }
                std::sort(keys[v].second.begin(), keys[v].second.end());
            }
            Coloring next;
            std::size_t next_classes = rank_keys(keys, next);
            colors = std::move(next);
            if (next_classes == classes) break;
            classes = next_classes;
        }
    }

    static std::size_t count_classes(const Coloring& c) {
        return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    }

    Coloring individualize(const Coloring& colors, Vertex w) const {
        std::vector<std::uint64_t> keys(n_);
        for (Vertex v = 0; v < n_; ++v) keys[v] = 2 * std::uint64_t(colors[v]) + (v == w ? 0 : 1);
        Coloring out;
        rank_keys(keys, out);
        refine(out);
        return out;
    }

    Certificate certificate(const Coloring& labels) const {
        Certificate cert;
        cert.reserve(g_.edge_count());
        for (const auto& t : g_.edges()) cert.push_back(make_triple(labels[t[0]], labels[t[1]], labels[t[2]]));
        std::sort(cert.begin(), cert.end());
        return cert;
    }

    // Orbit representative of every vertex under the automorphisms that fix `prefix` pointwise.
    std::vector<Vertex> orbits(const std::vector<Vertex>& prefix) const {
        std::vector<Vertex> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](Vertex x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; });
            if (!fixes) continue;
            for (Vertex v = 0; v < n_; ++v) {
                Vertex a = find(v), b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
        return parent;
    }

    void record_automorphism(const Coloring& from, const Coloring& to) {
        // gamma maps v to the vertex carrying label from[v] under `to`.
        std::vector<Vertex> inverse(n_);
        for (Vertex v = 0; v < n_; ++v) inverse[to[v]] = v;
        std::vector<Vertex> gamma(n_);
        bool identity = true;
        for (Vertex v = 0; v < n_; ++v) {
            gamma[v] = inverse[from[v]];
            identity = identity && gamma[v] == v;
        }
        if (!identity) automorphisms_.push_back(std::move(gamma));
    }

    void leaf(const Coloring& labels) {
        Certificate cert = certificate(labels);
        if (!have_leaf_) {
            have_leaf_ = true;
            first_cert_ = best_cert_ = cert;
            first_labeling_ = best_labeling_ = labels;
            return;
        }
        if (cert == first_cert_) {
            record_automorphism(labels, first_labeling_);
        } else if (cert == best_cert_) {
            record_automorphism(labels, best_labeling_);
        } else if (cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_labeling_ = labels;
        }
    }

    void search(const Coloring& colors, std::vector<Vertex>& prefix) {
        if (count_classes(colors) == n_) {
            leaf(colors);
            return;
        }
        // Target cell: the non-singleton cell with the smallest color.
        std::vector<std::uint32_t> size(n_, 0);
        for (auto c : colors) ++size[c];
        std::uint32_t target = 0;
        while (size[target] < 2) ++target;
        std::vector<Vertex> cell;
        for (Vertex v = 0; v < n_; ++v)
            if (colors[v] == target) cell.push_back(v);

        std::vector<Vertex> explored;
        for (Vertex w : cell) {
            auto orb = orbits(prefix);
            bool redundant = std::any_of(explored.begin(), explored.end(),
                                         [&](Vertex x) { return orb[x] == orb[w]; });
            if (redundant) continue;
            explored.push_back(w);
            prefix.push_back(w);
            search(individualize(colors, w), prefix);
            prefix.pop_back();
        }
    }

    const Hypergraph3& g_;
    std::size_t n_;
    bool have_leaf_ = false;
    Certificate first_cert_, best_cert_;
    Coloring first_labeling_, best_labeling_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

void put_u32(std::string& out, std::uint32_t x) {
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(char((x >> shift) & 0xff));
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Hypergraph3& g) {
    return Canonizer(g).run();
}

Hypergraph3 canonical_graph(const Hypergraph3& g) {
    auto labels = canonical_labeling(g);
    return relabel(g, labels);
}

std::string canonical_form(const Hypergraph3& g) {
    Hypergraph3 c = canonical_graph(g);
    std::string out;
    out.reserve(8 + 12 * c.edge_count());
    put_u32(out, std::uint32_t(c.vertex_count()));
    put_u32(out, std::uint32_t(c.edge_count()));
    for (const auto& t : c.edges())
        for (Vertex v : t) put_u32(out, v);
    return out;
}

std::string to_hex(const std::string& bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

}  // namespace loosesat
