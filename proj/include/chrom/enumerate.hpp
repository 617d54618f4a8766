// Exhaustive generation of small hosts: every nonempty edge subset of the
// complete r-uniform hypergraph on n vertices, in ascending subset-mask
// order over the lexicographic edge list.
#pragma once

#include <functional>

#include "chrom/hypergraph.hpp"

namespace chrom {

// Calls visit for each host; visit returning false stops the walk early.
// edge_filter (optional) restricts the ground edge set before enumeration.
// dedup skips hosts repeating an earlier (edge count, degree multiset,
// chromatic number) fingerprint.  Requires C(n,r) <= 24 after filtering is
// irrelevant: the cap applies to the unfiltered count (resource_error).
// Returns how many hosts were visited.
long long enumerate_hypergraphs(
    int r, int n, const std::function<bool(const Hypergraph&)>& visit,
    const std::function<bool(const std::vector<int>&)>& edge_filter = {},
    bool dedup = false);

}  // namespace chrom
