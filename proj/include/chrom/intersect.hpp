// The 1-intersection graph of a hypergraph, and the component structure of
// 3-uniform systems in which no two triples share exactly one vertex:
// every nontrivial component is a book of triples through a common base
// pair, or 3-4 triples on a common quadruple of vertices.
#pragma once

#include <array>
#include <vector>

#include "chrom/hypergraph.hpp"

namespace chrom {

// graph on edge indices of h; i ~ j iff |e_i cap e_j| == 1
Hypergraph one_intersection_graph(const Hypergraph& h);

// classes of a proper coloring of the 1-intersection graph, as a partition
// of the edges of h; rejects colorings that put a 1-intersecting pair in
// one class
EdgePartition partition_from_igraph_coloring(const Hypergraph& h,
                                             const VertexColoring& c);

enum class PartKind { B, K, Trivial };

struct StructurePart {
  PartKind kind = PartKind::Trivial;
  std::pair<int, int> base{-1, -1};  // B only; the pair shared by all edges
  std::array<int, 4> quad{-1, -1, -1, -1};  // K only; ascending
  std::vector<int> edges;     // edge indices of h, ascending
  std::vector<int> vertices;  // ascending
};

struct StructureDecomposition {
  std::vector<StructurePart> parts;  // ordered by least vertex
};

// requires: h is 3-uniform and its 1-intersection graph has no edges
StructureDecomposition structure_decompose(const Hypergraph& h);

// proper 2-coloring straight off the decomposition; requires an edge
VertexColoring two_color_no_one_intersections(const Hypergraph& h);

}  // namespace chrom
