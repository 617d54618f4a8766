// Lifting a coloring of the skeleton to the triple system. With an even
// number of classes the skeleton has no complete component on t+1 vertices
// and Brooks' theorem finishes directly; with odd t those components are
// colored by hand around a marked base pair and the rest is list-colored.
#pragma once

#include <utility>
#include <vector>

#include "chrom/graph.hpp"
#include "chrom/hypergraph.hpp"
#include "chrom/skeleton.hpp"

namespace chrom {

struct MarkedComponent {
  std::vector<int> vertices;  // ascending; size t+1, complete in the skeleton
  std::pair<int, int> base;   // least base pair of matching 1 inside
};

struct LiftContext {
  Graph g;  // underlying simple graph of the skeleton
  std::vector<MarkedComponent> kcomps;
  std::vector<int> rest;                // vertices outside every kcomp
  std::vector<std::vector<int>> lists;  // aligned with rest
};

LiftContext make_lift_context(const Hypergraph& h, const EdgePartition& p,
                              const Skeleton& s);

// proper coloring of h with at most p.t colors
VertexColoring lift_coloring(const Hypergraph& h, const EdgePartition& p,
                             const Skeleton& s);

// End to end: partition the edges by an optimal coloring of the
// 1-intersection graph, build the repaired skeleton, lift. When the
// 1-intersection graph has no edges the structure gives two colors directly.
VertexColoring color_via_intersection(const Hypergraph& h);

}  // namespace chrom
