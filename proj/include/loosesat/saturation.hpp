#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "loosesat/hypergraph.hpp"
#include "loosesat/triangle.hpp"

namespace loosesat {

enum class Verdict { Saturated, NotFree, NotSaturated };

const char* to_string(Verdict v);

struct SaturationCertificate {
    Verdict verdict = Verdict::Saturated;
    /// Triangle when NotFree, the least uncovered non-edge when NotSaturated.
    std::variant<std::monostate, TriangleWitness, Triple> witness;
    /// Non-edges examined in lexicographic order. For Saturated this is C(n,3) - |E|;
    /// for NotSaturated it is the position of the witness among the non-edges (1-based);
    /// 0 for NotFree.
    std::uint64_t checked_nonedges = 0;
};

bool is_free(const Hypergraph3& g);

/// Freeness first, then every non-edge in lexicographic order. `jobs` > 1 splits the
/// non-edges by smallest vertex across threads; the certificate does not depend on it.
SaturationCertificate verify_saturated(const Hypergraph3& g, unsigned jobs = 1);

/// Re-checks a certificate against g with the independent checkers.
bool certificate_holds(const Hypergraph3& g, const SaturationCertificate& cert);

/// Maximal triangle-free supergraph: visits all non-edges in an order shuffled by
/// `order_seed` and inserts each one that keeps the graph triangle-free.
/// Throws DomainError if g contains a triangle.
Hypergraph3 saturate_greedy(const Hypergraph3& g, std::uint64_t order_seed);

/// The corpus seed: LOOSESAT_SEED from the environment when set, else `fallback`.
std::uint64_t corpus_seed(std::uint64_t fallback);

/// C(n,3) as a 64-bit count.
std::uint64_t triples_count(std::uint64_t n);

}  // namespace loosesat
