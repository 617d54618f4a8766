// Simple graphs with the two coloring routines the skeleton lift relies on:
// a constructive Brooks coloring and list coloring.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chrom/hypergraph.hpp"

namespace chrom {

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // ascending, no loops, no parallel edges

  static Graph make(int n, const std::vector<std::pair<int, int>>& edges);
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int max_degree() const;
  std::vector<std::pair<int, int>> edge_list() const;  // u < v, lexicographic
};

bool is_proper(const Graph& g, const VertexColoring& c);

// ordered by least vertex; singletons included
std::vector<std::vector<int>> graph_components(const Graph& g);

struct IndexedSubgraph {
  Graph g;
  std::vector<int> vertex_of;  // subgraph vertex -> original vertex
};

IndexedSubgraph induced_subgraph(const Graph& g,
                                 const std::vector<int>& vertices);

// Proper coloring. Complete components and odd cycles use one color more
// than their maximum degree; every other component stays within its maximum
// degree. Deterministic: all choices are by least vertex.
VertexColoring brooks_color(const Graph& g);

// Proper coloring with c(v) drawn from lists[v], if one exists. Vertices
// whose remaining degree is below their list size are peeled and colored
// last; the rest is settled by exact search, most constrained vertex first.
std::optional<VertexColoring> try_list_color(
    const Graph& g, const std::vector<std::vector<int>>& lists);

}  // namespace chrom
