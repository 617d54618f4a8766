// Skeleton of a partitioned 3-uniform system: one matching per class, each
// covering every triple of its class.  Book components contribute their base
// pair, quadruple components contribute a perfect matching of the quadruple.
// Complete components on t+1 vertices that carry no base pair in the first
// matching are repaired by switching quadruple pairs.
#pragma once

#include <vector>

#include "chrom/hypergraph.hpp"
#include "chrom/intersect.hpp"

namespace chrom {

enum class Provenance { BBase, KPair };

struct SkeletonEdge {
  int u = -1, v = -1;  // u < v
  int mi = 0;          // matching index == class index, 1..t
  Provenance prov = Provenance::BBase;
  int part = -1;  // index into class_decomp[mi-1].parts

  bool operator==(const SkeletonEdge& o) const {
    return u == o.u && v == o.v && mi == o.mi && prov == o.prov &&
           part == o.part;
  }
};

struct Skeleton {
  int n = 0;
  int t = 0;
  std::vector<SkeletonEdge> sedges;
  std::vector<StructureDecomposition> class_decomp;  // per class, 1-based - 1
  // repair statistics
  int initial_bad = 0;
  int switches = 0;
};

// matchings straight off the per-class decompositions; quadruple components
// start with the least perfect matching of their quadruple
Skeleton build_initial_skeleton(const Hypergraph& h, const EdgePartition& p);

// connected components of the skeleton multigraph, singletons included,
// ordered by least vertex; component ids index into this list
std::vector<std::vector<int>> skeleton_components(const Skeleton& s);

// ids of components that are complete on t+1 vertices with no base-pair
// edge in matching 1; also asserts such components are exactly factorized
std::vector<int> find_bad_components(const Skeleton& s);

// replaces the two current pairs of the quadruple behind the least
// matching-1 pair edge of the given bad component
Skeleton apply_switch(const Skeleton& s, int bad_component_id);

// initial skeleton plus the repair loop; the number of bad components must
// drop with every switch
Skeleton build_skeleton(const Hypergraph& h, const EdgePartition& p);

// every edge of h contains both endpoints of some skeleton edge of its class
bool skeleton_covers(const Skeleton& s, const Hypergraph& h,
                     const EdgePartition& p);

}  // namespace chrom
