#pragma once

#include <string>
#include <vector>

#include "loosesat/hypergraph.hpp"

namespace loosesat {

/// Canonical relabeling: result[v] is the new label of v. Isomorphic graphs map to the
/// same relabeled edge list.
///
/// Exact: color refinement seeded by (degree, codegree multiset), then individualization
/// over the first non-singleton cell, keeping the lexicographically smallest relabeled
/// edge list. Automorphisms found at equal leaves prune sibling branches in the same
/// orbit of the prefix stabilizer.
std::vector<Vertex> canonical_labeling(const Hypergraph3& g);

/// Byte string that is equal for two graphs iff they are isomorphic. Encodes n, m and the
/// canonically relabeled sorted edge list, big-endian, so byte order matches numeric order.
std::string canonical_form(const Hypergraph3& g);

/// The relabeled graph itself.
Hypergraph3 canonical_graph(const Hypergraph3& g);

/// Lowercase hex of a canonical form, for text output.
std::string to_hex(const std::string& bytes);

}  // namespace loosesat
