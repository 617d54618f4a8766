// Exhaustive-search oracles, independent of the constructive finders: direct
// detection of monochromatic targets and backtracking search for partitions
// that avoid them.
#pragma once

#include <optional>

#include "chrom/hypergraph.hpp"
#include "chrom/ramsey.hpp"

namespace chrom {

struct OracleResult {
  bool found = false;
  std::optional<MonoWitness> witness;
};

// Is there a monochromatic copy of the target in some class?  Matchings scan
// each class for k pairwise disjoint edges, stars additionally pin a common
// center, trees run a full embedding search restricted to one class (the
// tree argument is required for WitnessKind::Tree and ignored otherwise).
OracleResult oracle_has_mono(const Hypergraph& h, const EdgePartition& p,
                             WitnessKind kind, int k,
                             const Hypergraph* tree = nullptr);

struct AvoidResult {
  bool exists = false;
  std::optional<EdgePartition> partition;
};

// Is there a t-partition of the edges with no monochromatic copy of the
// target?  Backtracking over edges in a most-entangled-first order, a new
// class only one past the classes already used, pruning as soon as the
// touched class acquires the target.  timeout_sec > 0 bounds the search
// (resource_error on expiry).
AvoidResult oracle_exists_avoiding_partition(const Hypergraph& h,
                                             WitnessKind kind, int k, int t,
                                             const Hypergraph* tree = nullptr,
                                             double timeout_sec = 0);

}  // namespace chrom
