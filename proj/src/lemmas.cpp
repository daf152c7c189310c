#include "loosesat/lemmas.hpp"

#include <algorithm>

#include "loosesat/errors.hpp"
#include "loosesat/saturation.hpp"
#include "loosesat/triangle.hpp"

namespace loosesat {
namespace {

void require_saturated(const Hypergraph3& g, const char* check) {
    if (verify_saturated(g).verdict != Verdict::Saturated)
        throw PreconditionError(std::string(check) + " requires a saturated hypergraph");
}

void require_free(const Hypergraph3& g, const char* check) {
    if (!is_free(g)) throw PreconditionError(std::string(check) + " requires a triangle-free hypergraph");
}

std::string str(std::size_t x) { return std::to_string(x); }

}  // namespace

const char* to_string(LemmaId id) {
    switch (id) {
        case LemmaId::CodegreeStep: return "codegree-step";
        case LemmaId::TwoDeg2Neighbors: return "two-deg2-neighbors";
        case LemmaId::GoodPairDoubleNeighbor: return "good-pair-double-neighbor";
        case LemmaId::JFarBound: return "jfar-bound";
    }
    return "?";
}

namespace unchecked {

std::vector<LemmaViolation> codegree_step(const Hypergraph3& g) {
    std::vector<LemmaViolation> out;
    const auto n = Vertex(g.vertex_count());
    for (Vertex u = 0; u < n; ++u) {
        std::vector<Vertex> tight_deg2;
        for (Vertex v : g.neighbors(u)) {
            const std::size_t cod = g.codegree(u, v), dv = g.degree(v), du = g.degree(u);
            if (cod == dv && dv + 3 <= n && du < dv + 2) {
                out.push_back({LemmaId::CodegreeStep, {u, v}, {},
                               "d(uv)=d(v)=" + str(dv) + " but d(u)=" + str(du)});
            }
            if (cod == 2 && dv == 2) tight_deg2.push_back(v);
        }
        if (tight_deg2.size() >= 2) {
            std::vector<Vertex> subjects{u};
            subjects.insert(subjects.end(), tight_deg2.begin(), tight_deg2.end());
            out.push_back({LemmaId::CodegreeStep, subjects, {},
                           "vertex has " + str(tight_deg2.size()) + " 2-vertices v with d(uv)=2"});
        }
    }
    return out;
}

std::vector<LemmaViolation> two_deg2(const Hypergraph3& g) {
    std::vector<LemmaViolation> out;
    const auto n = Vertex(g.vertex_count());
    std::vector<char> in_nbhd(n);
    for (Vertex v = 0; v < n; ++v) {
        std::fill(in_nbhd.begin(), in_nbhd.end(), 0);
        for (Vertex w : g.neighbors(v)) in_nbhd[w] = 1;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Triple& t = g.edge(e);
            if (contains(t, v)) continue;
            std::vector<Vertex> hits;
            for (Vertex w : t)
                if (in_nbhd[w] && g.degree(w) == 2) hits.push_back(w);
            if (hits.size() >= 2) {
                std::vector<Vertex> subjects{v};
                subjects.insert(subjects.end(), hits.begin(), hits.end());
                out.push_back({LemmaId::TwoDeg2Neighbors, subjects, {e},
                               "edge " + to_string(t) + " avoids v but holds " + str(hits.size()) +
                                   " 2-vertices of N(v)"});
            }
        }
    }
    return out;
}

std::vector<LemmaViolation> good_pair_double_neighbor(const Hypergraph3& g) {
    std::vector<LemmaViolation> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Triple& t = g.edge(e);
        constexpr int splits[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
        for (const auto& s : splits) {
            const Vertex a = t[s[0]], b = t[s[1]], c = t[s[2]];
            if (!is_good_pair(g, a, b)) continue;
            if (g.codegree(a, c) >= 2 || g.codegree(b, c) >= 2) continue;
            out.push_back({LemmaId::GoodPairDoubleNeighbor, {a, b, c}, {e},
                           "pair is good but the third vertex is a double neighbor of neither"});
        }
    }
    return out;
}

std::vector<LemmaViolation> jfar_bound(const Hypergraph3& g, std::size_t j) {
    if (j < 2) throw DomainError("j-far neighbors need j >= 2");
    std::vector<LemmaViolation> out;
    const std::size_t bound = 2 * j * j;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto far = j_far_neighbors(g, v, j);
        if (far.size() > bound) {
            std::vector<Vertex> subjects{v};
            subjects.insert(subjects.end(), far.begin(), far.end());
            out.push_back({LemmaId::JFarBound, subjects, {},
                           str(far.size()) + " " + str(j) + "-far neighbors exceed " + str(bound)});
        }
    }
    return out;
}

}  // namespace unchecked

std::vector<LemmaViolation> check_codegree_step(const Hypergraph3& g) {
    require_saturated(g, "check_codegree_step");
    return unchecked::codegree_step(g);
}

std::vector<LemmaViolation> check_two_deg2(const Hypergraph3& g) {
    require_saturated(g, "check_two_deg2");
    return unchecked::two_deg2(g);
}

std::vector<LemmaViolation> check_good_pair_double_neighbor(const Hypergraph3& g) {
    require_free(g, "check_good_pair_double_neighbor");
    return unchecked::good_pair_double_neighbor(g);
}

std::vector<LemmaViolation> check_jfar_bound(const Hypergraph3& g, std::size_t j) {
    if (j < 2) throw DomainError("j-far neighbors need j >= 2");
    require_saturated(g, "check_jfar_bound");
    return unchecked::jfar_bound(g, j);
}

std::vector<Vertex> j_far_neighbors(const Hypergraph3& g, Vertex v, std::size_t j) {
    if (j < 2) throw DomainError("j-far neighbors need j >= 2");
    const auto nbhd = g.neighbors(v);
    std::vector<char> in_nbhd(g.vertex_count());
    for (Vertex w : nbhd) in_nbhd[w] = 1;

    std::vector<Vertex> out;
    for (Vertex u : nbhd) {
        if (g.degree(u) > j) continue;
        bool far = true;
        for (EdgeId e : g.incident(u)) {
            const Triple& t = g.edge(e);
            if (contains(t, v)) continue;
            for (Vertex w : t) {
                if (w != u && in_nbhd[w]) far = false;
                if (g.degree(w) > j) far = false;
            }
            if (!far) break;
        }
        if (far) out.push_back(u);
    }
    return out;
}

LemmaReport run_all(const Hypergraph3& g) {
    constexpr std::size_t js[] = {2, 3, 4};
    return run_all(g, js);
}

LemmaReport run_all(const Hypergraph3& g, std::span<const std::size_t> jfar_values, unsigned jobs) {
    for (std::size_t j : jfar_values)
        if (j < 2) throw DomainError("j-far neighbors need j >= 2");
    LemmaReport report;
    const auto cert = verify_saturated(g, jobs);
    report.free = cert.verdict != Verdict::NotFree;
    report.saturated = cert.verdict == Verdict::Saturated;

    auto run = [&](std::string name, bool allowed, const char* reason, auto&& scan) {
        LemmaCheckRun r;
        r.name = std::move(name);
        if (!allowed) {
            r.skipped_reason = reason;
        } else {
            auto start = std::chrono::steady_clock::now();
            auto found = scan();
            r.elapsed = std::chrono::steady_clock::now() - start;
            r.ran = true;
            r.violations = found.size();
            for (auto& v : found) report.violations.push_back(std::move(v));
        }
        report.checks.push_back(std::move(r));
    };
    run("codegree-step", report.saturated, "not saturated", [&] { return unchecked::codegree_step(g); });
    run("two-deg2-neighbors", report.saturated, "not saturated", [&] { return unchecked::two_deg2(g); });
    run("good-pair-double-neighbor", report.free, "contains a triangle",
        [&] { return unchecked::good_pair_double_neighbor(g); });
    for (std::size_t j : jfar_values)
        run("jfar-bound(j=" + str(j) + ")", report.saturated, "not saturated",
            [&] { return unchecked::jfar_bound(g, j); });
    return report;
}

}  // namespace loosesat
