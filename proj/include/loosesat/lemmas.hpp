#pragma once

#include <chrono>
#include <span>
#include <string>
#include <vector>

#include "loosesat/hypergraph.hpp"

namespace loosesat {

/// Structural facts every C3(3)-saturated (or, for GoodPairDoubleNeighbor, every
/// C3(3)-free) hypergraph satisfies. A violation on a certified instance is a bug.
enum class LemmaId { CodegreeStep, TwoDeg2Neighbors, GoodPairDoubleNeighbor, JFarBound };

const char* to_string(LemmaId id);

struct LemmaViolation {
    LemmaId lemma;
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
    std::string detail;
};

/// d(uv) = d(v) <= n-3 forces d(u) >= d(v)+2; and u has at most one 2-vertex v with
/// d(uv) = 2. n is the declared vertex count, isolated vertices included.
/// Throws PreconditionError unless g is saturated.
std::vector<LemmaViolation> check_codegree_step(const Hypergraph3& g);

/// No edge avoiding v holds two 2-vertices of N(v). Requires saturation.
std::vector<LemmaViolation> check_two_deg2(const Hypergraph3& g);

/// For every edge {a,b,c} with ab a good pair, c is a double neighbor of a or b.
/// Requires only triangle-freeness.
std::vector<LemmaViolation> check_good_pair_double_neighbor(const Hypergraph3& g);

/// Neighbors u of v with d(u) <= j such that every edge through u either contains v or
/// misses N(v) outside u, and every edge through u avoiding v has only vertices of degree
/// <= j. Throws DomainError for j < 2.
std::vector<Vertex> j_far_neighbors(const Hypergraph3& g, Vertex v, std::size_t j);

/// Every vertex has at most 2j^2 j-far neighbors. Requires saturation.
std::vector<LemmaViolation> check_jfar_bound(const Hypergraph3& g, std::size_t j);

struct LemmaCheckRun {
    std::string name;
    bool ran = false;
    std::string skipped_reason;
    std::size_t violations = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct LemmaReport {
    bool free = false;
    bool saturated = false;
    std::vector<LemmaCheckRun> checks;
    std::vector<LemmaViolation> violations;
};

/// Certifies g once, then runs every check its status allows, cheapest first.
LemmaReport run_all(const Hypergraph3& g, std::span<const std::size_t> jfar_values, unsigned jobs = 1);
LemmaReport run_all(const Hypergraph3& g);

/// The scans without the certification step, for harnesses probing uncertified inputs.
namespace unchecked {
std::vector<LemmaViolation> codegree_step(const Hypergraph3& g);
std::vector<LemmaViolation> two_deg2(const Hypergraph3& g);
std::vector<LemmaViolation> good_pair_double_neighbor(const Hypergraph3& g);
std::vector<LemmaViolation> jfar_bound(const Hypergraph3& g, std::size_t j);
}  // namespace unchecked

}  // namespace loosesat
