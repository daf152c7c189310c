#include "loosesat/discharge.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "loosesat/errors.hpp"

namespace loosesat {
namespace {

// Counters that depend only on the partition: flatness, supp, flat_count.
struct BaseCounters {
    std::vector<std::size_t> flatness, supp, flat_count;
    std::vector<char> one_flat_two;
};

std::size_t nonlow_in(const DegreePartition& p, const Triple& t) {
    return std::size_t(!p.low_vertex(t[0])) + !p.low_vertex(t[1]) + !p.low_vertex(t[2]);
}

BaseCounters base_counters(const Hypergraph3& g, const DegreePartition& p) {
    const std::size_t n = g.vertex_count();
    BaseCounters b{std::vector<std::size_t>(n), std::vector<std::size_t>(n), std::vector<std::size_t>(n),
                   std::vector<char>(n)};
    for (const auto& t : g.edges()) {
        const std::size_t k = nonlow_in(p, t);
        for (Vertex v : t) {
            if (!p.low_vertex(v)) continue;
            b.flatness[v] += k;
            if (k == 2) ++b.supp[v];
        }
    }
    for (Vertex v = 0; v < n; ++v)
        b.one_flat_two[v] = p.low_vertex(v) && g.degree(v) == 2 && b.flatness[v] == 1;
    for (const auto& t : g.edges())
        for (Vertex v : t) {
            bool holds = false;
            for (Vertex w : t) holds = holds || (w != v && b.one_flat_two[w]);
            if (holds) ++b.flat_count[v];
        }
    return b;
}

bool needy_candidate(const Hypergraph3& g, const DegreePartition& p, const BaseCounters& b, Vertex v) {
    if (!p.low_vertex(v)) return false;
    const auto d = g.degree(v);
    return d == 2 || (d == 3 && b.flatness[v] == 1);
}

// {h,v,u} exceptional with exception v and 4-vertex u.
bool exceptional_as(const Hypergraph3& g, const BaseCounters& b, Vertex h, Vertex v, Vertex u, bool two_flat_reading) {
    if (g.degree(u) != 4 || g.codegree(h, v) != 2 || g.degree(v) < 4 || g.codegree(h, u) < 3) return false;
    return two_flat_reading ? b.flatness[u] == 2 : b.flat_count[u] == 2;
}

bool rich_recipient(const Hypergraph3& g, const BaseCounters& b, Vertex h, Vertex v, Vertex u) {
    if (g.degree(v) > 7 || b.supp[v] > 0 || g.codegree(h, v) >= 3) return false;
    return g.codegree(h, u) >= 3 || (g.degree(u) >= 3 && b.supp[u] > 0) || g.degree(u) >= 8;
}

// The vertex of t that is neither a nor b.
Vertex third(const Triple& t, Vertex a, Vertex b) {
    for (Vertex w : t)
        if (w != a && w != b) return w;
    return Vertex(-1);
}

}  // namespace

const char* to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::LowEdge: return "low";
        case EdgeKind::Supported: return "supported";
        case EdgeKind::Needy: return "needy";
        case EdgeKind::Rich: return "rich";
        case EdgeKind::Reasonable: return "reasonable";
        case EdgeKind::Inert: return "inert";
    }
    return "?";
}

std::size_t default_ell(std::size_t n) {
    const std::size_t log2n = n == 0 ? 0 : std::size_t(std::bit_width(n) - 1);
    return std::max<std::size_t>(3, log2n);
}

DegreePartition partition(const Hypergraph3& g, std::size_t ell) {
    if (ell < 2) throw DomainError("ell must be at least 2, got " + std::to_string(ell));
    DegreePartition p;
    p.ell = ell;
    const std::size_t n = g.vertex_count();
    p.is_low.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        const auto d = g.degree(v);
        if (d < ell) {
            p.low.push_back(v);
            p.is_low[v] = 1;
        } else {
            p.nonlow.push_back(v);
        }
        if (d * ell * ell >= n) p.high.push_back(v);
    }
    return p;
}

bool is_one_flat_two_vertex(const Hypergraph3& g, const DegreePartition& p, std::span<const VertexProfile> prof,
                            Vertex v) {
    return p.low_vertex(v) && g.degree(v) == 2 && prof[v].flatness == 1;
}

std::vector<EdgeClass> classify_edges(const Hypergraph3& g, const DegreePartition& p) {
    const BaseCounters b = base_counters(g, p);
    std::vector<EdgeClass> out;
    out.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Triple& t = g.edge(e);
        EdgeClass c;
        c.edge = e;
        switch (nonlow_in(p, t)) {
            case 0: c.kind = EdgeKind::LowEdge; break;
            case 3: c.kind = EdgeKind::Inert; break;
            case 2:
                c.kind = EdgeKind::Supported;
                for (Vertex v : t)
                    if (p.low_vertex(v)) c.recipient = v;
                break;
            default: {
                Vertex h = 0, lo = 0, hi = 0;
                bool first = true;
                for (Vertex v : t) {
                    if (!p.low_vertex(v)) h = v;
                    else if (first) lo = v, first = false;
                    else hi = v;
                }
                c.hub = h;
                c.exceptional = exceptional_as(g, b, h, lo, hi, false) || exceptional_as(g, b, h, hi, lo, false);
                if (exceptional_as(g, b, h, lo, hi, false)) c.exception_vertex = lo;
                else if (exceptional_as(g, b, h, hi, lo, false)) c.exception_vertex = hi;
                c.exceptional_if_two_flat =
                    exceptional_as(g, b, h, lo, hi, true) || exceptional_as(g, b, h, hi, lo, true);

                const bool need_lo = needy_candidate(g, p, b, lo), need_hi = needy_candidate(g, p, b, hi);
                if (need_lo != need_hi) {
                    c.kind = EdgeKind::Needy;
                    c.recipient = need_lo ? lo : hi;
                } else if (!c.exceptional && rich_recipient(g, b, h, lo, hi)) {
                    c.kind = EdgeKind::Rich;
                    c.recipient = lo;
                } else if (!c.exceptional && rich_recipient(g, b, h, hi, lo)) {
                    c.kind = EdgeKind::Rich;
                    c.recipient = hi;
                } else {
                    c.kind = EdgeKind::Reasonable;
                }
            }
        }
        out.push_back(c);
    }
    return out;
}

std::vector<VertexProfile> vertex_profiles(const Hypergraph3& g, const DegreePartition& p,
                                           std::span<const EdgeClass> classes) {
    const std::size_t n = g.vertex_count();
    const BaseCounters b = base_counters(g, p);
    std::vector<VertexProfile> prof(n);
    for (Vertex v = 0; v < n; ++v) {
        prof[v].flatness = b.flatness[v];
        prof[v].supp = b.supp[v];
        prof[v].flat_count = p.low_vertex(v) ? b.flat_count[v] : 0;
    }
    for (const auto& c : classes) {
        if (c.kind == EdgeKind::Rich) ++prof[*c.recipient].rich_count;
        if (c.kind == EdgeKind::Reasonable)
            for (Vertex v : g.edge(c.edge))
                if (p.low_vertex(v)) ++prof[v].reas_count;
    }
    // Budget in half-units: 2d + 4 supp + 2 rich + reas.
    auto budget = [&](Vertex v) {
        return HalfUnits(2 * g.degree(v) + 4 * prof[v].supp + 2 * prof[v].rich_count + prof[v].reas_count);
    };
    for (Vertex v = 0; v < n; ++v) {
        if (!p.low_vertex(v) || g.degree(v) < 3) continue;
        prof[v].is_helpful = budget(v) >= HalfUnits(prof[v].flat_count) + kTargetCharge;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!p.low_vertex(v)) continue;
        for (EdgeId e : g.incident(v)) {
            const Triple& t = g.edge(e);
            bool donor_edge = false;
            for (Vertex s : t) {
                if (s == v || !b.one_flat_two[s]) continue;
                const Vertex w = third(t, v, s);
                if (!p.low_vertex(w) || !prof[w].is_helpful) donor_edge = true;
            }
            if (donor_edge) ++prof[v].donor_count;
        }
        if (g.degree(v) >= 3)
            prof[v].is_half_helpful = budget(v) >= HalfUnits(prof[v].donor_count) + kTargetCharge;
    }
    return prof;
}

ChargeReport run_discharge(const Hypergraph3& g, std::size_t ell, DischargeOptions options) {
    ChargeReport r;
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    r.partition = partition(g, ell);
    r.edge_classes = classify_edges(g, r.partition);
    r.profiles = vertex_profiles(g, r.partition, r.edge_classes);
    r.d5 = options.d5;
    const auto& p = r.partition;
    const std::size_t n = g.vertex_count();

    r.initial.resize(n);
    for (Vertex v = 0; v < n; ++v) r.initial[v] = 2 * HalfUnits(g.degree(v));
    auto& charge = r.charge;
    charge = r.initial;
    auto move = [&](int rule, Vertex from, Vertex to, HalfUnits amount) {
        charge[from] -= amount;
        charge[to] += amount;
        r.rule_totals[rule - 1] += amount;
    };

    // D1-D4: every transfer out of an M vertex is 1 (2 half-units) per edge.
    for (const auto& c : r.edge_classes) {
        const Triple& t = g.edge(c.edge);
        switch (c.kind) {
            case EdgeKind::Supported:
                for (Vertex h : t)
                    if (!p.low_vertex(h)) move(1, h, *c.recipient, 2);
                break;
            case EdgeKind::Needy: move(2, *c.hub, *c.recipient, 2); break;
            case EdgeKind::Rich: move(3, *c.hub, *c.recipient, 2); break;
            case EdgeKind::Reasonable:
                for (Vertex v : t)
                    if (v != *c.hub) move(4, *c.hub, v, 1);
                break;
            case EdgeKind::LowEdge:
            case EdgeKind::Inert: break;
        }
    }

    auto one_flat_two = [&](Vertex v) { return is_one_flat_two_vertex(g, p, r.profiles, v); };

    // D5
    for (Vertex v = 0; v < n; ++v) {
        if (!r.profiles[v].is_helpful) continue;
        std::vector<Vertex> targets;
        for (EdgeId e : g.incident(v))
            for (Vertex t : g.edge(e))
                if (t != v && one_flat_two(t)) targets.push_back(t);
        if (options.d5 == D5Multiplicity::PerNeighbor) {
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        }
        for (Vertex t : targets) move(5, v, t, 1);
    }

    // D6, against the set frozen after D5.
    std::vector<char> short_after_d5(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (one_flat_two(v) && charge[v] < kTargetCharge) {
            short_after_d5[v] = 1;
            r.deficient_after_d5.push_back(v);
        }
    for (Vertex v = 0; v < n; ++v) {
        const auto& pv = r.profiles[v];
        if (pv.is_helpful || !pv.is_half_helpful) continue;
        for (EdgeId e : g.incident(v)) {
            const Triple& t = g.edge(e);
            for (Vertex s : t) {
                if (s == v || !one_flat_two(s)) continue;
                const Vertex w = third(t, v, s);
                const bool donor_edge = !p.low_vertex(w) || !r.profiles[w].is_helpful;
                if (donor_edge && short_after_d5[s]) {
                    move(6, v, s, 1);
                    break;
                }
            }
        }
    }

    for (Vertex v : p.low)
        if (charge[v] < kTargetCharge) r.deficient.push_back(v);
    return r;
}

AuditSummary audit_summary(const ChargeReport& r) {
    AuditSummary s;
    s.vertex_count = r.vertex_count;
    s.edge_count = r.edge_count;
    s.ell = r.partition.ell;
    s.low = r.partition.low.size();
    s.nonlow = r.partition.nonlow.size();
    s.high = r.partition.high.size();
    s.deficient = r.deficient.size();
    s.deficient_fraction = s.low == 0 ? 0.0 : double(s.deficient) / double(s.low);
    for (const auto& pv : r.profiles) {
        s.helpful += pv.is_helpful;
        s.half_helpful += pv.is_half_helpful;
    }
    for (HalfUnits c : r.charge) {
        s.total_charge += c;
        ++s.charge_histogram[c];
    }
    s.rule_totals = r.rule_totals;
    for (const auto& c : r.edge_classes) ++s.edge_kinds[to_string(c.kind)];
    return s;
}

}  // namespace loosesat
