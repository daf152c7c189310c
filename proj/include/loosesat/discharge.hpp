#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loosesat/hypergraph.hpp"

namespace loosesat {

/// Charges are kept in half-units: a vertex of degree d starts with 2d.
using HalfUnits = std::int64_t;

/// Charge every low vertex should reach: 4, i.e. 8 half-units.
inline constexpr HalfUnits kTargetCharge = 8;

/// L = {d < ell}, M = V \ L, H = {d >= floor(n / ell^2)}.
struct DegreePartition {
    std::size_t ell = 0;
    std::vector<Vertex> low;
    std::vector<Vertex> nonlow;
    std::vector<Vertex> high;
    std::vector<char> is_low;  // indexed by vertex

    bool low_vertex(Vertex v) const { return is_low[v] != 0; }
};

/// Throws DomainError for ell < 2.
DegreePartition partition(const Hypergraph3& g, std::size_t ell);

/// max(3, floor(log2 n)).
std::size_t default_ell(std::size_t n);

enum class EdgeKind {
    LowEdge,     // (L,L,L)
    Supported,   // (M,M,L); recipient is the low vertex
    Needy,       // (M,L,L)
    Rich,        // (M,L,L)
    Reasonable,  // (M,L,L)
    Inert,       // (M,M,M): no rule applies
};

const char* to_string(EdgeKind k);

struct EdgeClass {
    EdgeId edge = 0;
    EdgeKind kind = EdgeKind::LowEdge;
    std::optional<Vertex> hub;        // the M vertex of an (M,L,L) edge
    std::optional<Vertex> recipient;  // Needy, Rich, Supported
    bool exceptional = false;
    std::optional<Vertex> exception_vertex;
    /// Exceptional under the alternative reading where u must be 2-flat (M-incidence 2)
    /// instead of having flat(u) = 2. Reported only; does not affect the class.
    bool exceptional_if_two_flat = false;
};

struct VertexProfile {
    std::size_t flatness = 0;     // sum over edges through v of |e ∩ M|
    std::size_t supp = 0;         // (M,M,v) edges
    std::size_t flat_count = 0;   // edges through v holding a 1-flat 2-vertex other than v
    std::size_t rich_count = 0;   // rich edges with recipient v
    std::size_t reas_count = 0;   // reasonable edges through v (v low)
    std::size_t donor_count = 0;  // k in "v is a k-donor"
    bool is_helpful = false;
    bool is_half_helpful = false;
};

/// Low vertex of degree 2 whose edges hold exactly one M incidence.
bool is_one_flat_two_vertex(const Hypergraph3& g, const DegreePartition& p, std::span<const VertexProfile> prof,
                            Vertex v);

/// One class per edge, in edge order. A rich edge whose two low vertices both qualify as
/// recipient goes to the lower vertex id.
std::vector<EdgeClass> classify_edges(const Hypergraph3& g, const DegreePartition& p);

/// Counters and helpfulness for every vertex; M vertices get flatness 0 and are never
/// helpful.
std::vector<VertexProfile> vertex_profiles(const Hypergraph3& g, const DegreePartition& p,
                                           std::span<const EdgeClass> classes);

/// How a helpful vertex counts its 1-flat 2-neighbors when donating.
enum class D5Multiplicity {
    PerIncidence,  // once per (edge, neighbor) incidence
    PerNeighbor,   // once per distinct neighbor
};

struct DischargeOptions {
    D5Multiplicity d5 = D5Multiplicity::PerIncidence;
};

struct ChargeReport {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    DegreePartition partition;
    std::vector<EdgeClass> edge_classes;
    std::vector<VertexProfile> profiles;
    std::vector<HalfUnits> initial;
    std::vector<HalfUnits> charge;           // final
    std::vector<Vertex> deficient_after_d5;  // 1-flat 2-vertices below target after D5
    std::vector<Vertex> deficient;           // low vertices below target at the end
    std::array<HalfUnits, 6> rule_totals{};  // half-units moved by D1..D6
    D5Multiplicity d5 = D5Multiplicity::PerIncidence;
};

/// Initial charge 2d(v); D1-D4 per edge class in edge order, then D5, then D6 against
/// the deficient set frozen after D5. Throws DomainError for ell < 2.
ChargeReport run_discharge(const Hypergraph3& g, std::size_t ell, DischargeOptions options = {});

struct AuditSummary {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::size_t ell = 0;
    std::size_t low = 0;
    std::size_t nonlow = 0;
    std::size_t high = 0;
    std::size_t deficient = 0;
    double deficient_fraction = 0.0;  // deficient / low, 0 when L is empty
    std::size_t helpful = 0;
    std::size_t half_helpful = 0;
    HalfUnits total_charge = 0;
    std::array<HalfUnits, 6> rule_totals{};
    std::map<HalfUnits, std::size_t> charge_histogram;
    std::map<std::string, std::size_t> edge_kinds;
};

AuditSummary audit_summary(const ChargeReport& report);

}  // namespace loosesat
