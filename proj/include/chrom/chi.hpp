// Exact chromatic number by backtracking, and greedy coloring with
// refusal witnesses.
#pragma once

#include <map>
#include <span>
#include <vector>

#include "chrom/hypergraph.hpp"

namespace chrom {

// exact: is there a proper coloring with at most m colors?  Fills *out when
// given.  Search runs over vertices in reverse degeneracy order, new colors
// capped at one past the current maximum.
bool colorable_with(const Hypergraph& h, int m, VertexColoring* out = nullptr);

struct ChiResult {
  int m = 0;
  VertexColoring witness;
};
ChiResult chromatic_number(const Hypergraph& h, int vertex_cap = max_vertices);

// Greedy coloring over a vertex order.  Whenever the vertex that first
// receives color j was refused color i, witness[{i,j}] is the least-index
// refusing edge: all its vertices got color i except the one colored j.
struct GreedyWitnesses {
  VertexColoring coloring;
  std::map<std::pair<int, int>, int> witness;
};
GreedyWitnesses greedy_coloring_with_witnesses(const Hypergraph& h,
                                               std::span<const int> order);

std::vector<int> natural_order(int n);
std::vector<int> max_degree_first_order(const Hypergraph& h);
std::vector<int> random_order(int n, std::uint64_t seed);

}  // namespace chrom
