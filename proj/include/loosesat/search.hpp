#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loosesat/hypergraph.hpp"

namespace loosesat {

/// Lexicographic: DFS over edge sets in lexicographic order keeping the graph
/// triangle-free, with the saturation test at the leaves. This is the reference.
/// Coverage: the same DFS, plus every triple the DFS has passed over without taking must
/// still be coverable by a link built from current edges and edges not yet passed; a node
/// whose obligations need more edges than the remaining budget is cut.
enum class SearchStrategy { Lexicographic, Coverage };

const char* to_string(SearchStrategy s);

struct SearchBudget {
    std::optional<std::chrono::milliseconds> wall_clock;
    std::optional<std::uint64_t> max_nodes;
};

struct SearchOptions {
    unsigned jobs = 1;
    SearchStrategy strategy = SearchStrategy::Coverage;
    /// Fix the first edge to {0,1,2} and the second to {0,1,3}, {0,3,4} or {3,4,5}
    /// (largest pairwise overlap), restricting later edges accordingly.
    bool symmetry_pruning = true;
    SearchBudget budget;
    /// Called with the current edge list on every `observe_every`-th search node
    /// (0 disables). Calls are serialized.
    std::function<void(std::span<const Triple>)> prefix_observer;
    std::uint64_t observe_every = 0;
};

/// Result of one fixed-(n, m) search.
struct FeasibilityResult {
    std::optional<Hypergraph3> witness;
    std::uint64_t nodes_explored = 0;
    std::uint64_t canonical_rejections = 0;
};

/// Either finds a saturated C3(3)-free hypergraph with exactly m edges on n vertices
/// (the lexicographically least one the search space admits) or proves there is none.
/// Throws TimeoutError when the budget runs out and DomainError for n < 1.
FeasibilityResult search_feasible(std::size_t n, std::size_t m, const SearchOptions& options = {});

std::optional<Hypergraph3> exists_saturated(std::size_t n, std::size_t m, const SearchOptions& options = {});

struct SearchOutcome {
    std::size_t n = 0;
    std::optional<std::size_t> min_edges;
    std::optional<Hypergraph3> witness;
    long exhausted_upto = -1;  // largest m proven infeasible
    std::uint64_t nodes_explored = 0;
    std::uint64_t canonical_rejections = 0;
    std::chrono::nanoseconds elapsed{0};
    std::string strategy;
};

/// Cheap valid lower bound: at most two vertices can be isolated, so m >= ceil((n-2)/3).
std::size_t saturation_lower_seed(std::size_t n);

/// Smallest m for which exists_saturated succeeds, trying m upward from the lower seed.
/// With `max_edges`, stops after that m and reports min_edges = nullopt.
/// Throws TimeoutError carrying the partial exhausted_upto.
SearchOutcome min_saturation(std::size_t n, const SearchOptions& options = {},
                             std::optional<std::size_t> max_edges = std::nullopt);

/// Canonical forms (sorted, distinct) of all saturated hypergraphs with m edges on n
/// vertices.
std::vector<std::string> enumerate_extremal(std::size_t n, std::size_t m, const SearchOptions& options = {});

}  // namespace loosesat
