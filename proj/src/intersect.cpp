#include "chrom/intersect.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace chrom {

Hypergraph one_intersection_graph(const Hypergraph& h) {
  if (!h.uniform() && h.edge_count() > 0)
    throw input_error("1-intersection graph requires a uniform hypergraph");
  int m = h.edge_count();
  if (m > max_vertices)
    throw resource_error("edge count " + std::to_string(m) +
                         " exceeds the vertex cap of the intersection graph");
  std::vector<std::vector<int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::popcount(h.masks[i] & h.masks[j]) == 1) pairs.push_back({i, j});
  return Hypergraph::make(m, 2, std::move(pairs));
}

EdgePartition partition_from_igraph_coloring(const Hypergraph& h,
                                             const VertexColoring& c) {
  if (static_cast<int>(c.colors.size()) != h.edge_count())
    throw input_error("coloring size does not match the edge count");
  int m = h.edge_count();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::popcount(h.masks[i] & h.masks[j]) == 1 &&
          c.colors[i] == c.colors[j])
        throw input_error("edges " + std::to_string(i) + " and " +
                          std::to_string(j) +
                          " share exactly one vertex but share class " +
                          std::to_string(c.colors[i]));
  return EdgePartition::of(c.colors, c.m);
}

StructureDecomposition structure_decompose(const Hypergraph& h) {
  if (h.edge_count() > 0 && h.r != 3)
    throw input_error("structure decomposition requires a 3-uniform system");
  int m = h.edge_count();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::popcount(h.masks[i] & h.masks[j]) == 1)
        throw input_error("edges " + std::to_string(i) + " " +
                          edge_str(h.edges[i]) + " and " + std::to_string(j) +
                          " " + edge_str(h.edges[j]) +
                          " share exactly one vertex");

  StructureDecomposition out;
  std::vector<int> comp_of(h.n, -1);
  auto comps = components(h);
  std::vector<std::vector<int>> edges_in(comps.size());
  for (size_t ci = 0; ci < comps.size(); ++ci)
    for (int v : comps[ci]) comp_of[v] = static_cast<int>(ci);
  for (int e = 0; e < m; ++e) edges_in[comp_of[h.edges[e][0]]].push_back(e);

  for (size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& verts = comps[ci];
    const auto& es = edges_in[ci];
    StructurePart part;
    part.vertices = verts;
    part.edges = es;
    if (es.empty()) {
      if (verts.size() != 1)
        throw invariant_error("edgeless component with several vertices");
      part.kind = PartKind::Trivial;
      out.parts.push_back(std::move(part));
      continue;
    }
    if (verts.size() == 4 && es.size() >= 3) {
      // 3 or 4 triples on a common quadruple
      if (es.size() > 4)
        throw invariant_error("more than four triples on four vertices");
      part.kind = PartKind::K;
      std::copy(verts.begin(), verts.end(), part.quad.begin());
      out.parts.push_back(std::move(part));
      continue;
    }
    // book component: all triples through one base pair
    std::map<std::pair<int, int>, int> pair_count;
    for (int e : es) {
      const auto& t = h.edges[e];
      ++pair_count[{t[0], t[1]}];
      ++pair_count[{t[0], t[2]}];
      ++pair_count[{t[1], t[2]}];
    }
    std::pair<int, int> base{-1, -1};
    for (const auto& [pr, cnt] : pair_count)
      if (cnt == static_cast<int>(es.size())) {
        base = pr;  // lexicographically least shared pair wins
        break;
      }
    if (base.first < 0)
      throw invariant_error(
          "component is neither a book nor triples on a quadruple");
    for (int e : es) {
      const auto& t = h.edges[e];
      if (!std::binary_search(t.begin(), t.end(), base.first) ||
          !std::binary_search(t.begin(), t.end(), base.second))
        throw invariant_error("edge " + edge_str(t) + " misses the base");
    }
    part.kind = PartKind::B;
    part.base = base;
    out.parts.push_back(std::move(part));
  }
  return out;
}

VertexColoring two_color_no_one_intersections(const Hypergraph& h) {
  if (h.edge_count() == 0)
    throw input_error("two-coloring needs at least one edge");
  auto dec = structure_decompose(h);
  std::vector<int> c(h.n, 1);
  for (const auto& part : dec.parts) {
    if (part.kind == PartKind::B) {
      c[part.base.second] = 2;
    } else if (part.kind == PartKind::K) {
      c[part.quad[2]] = 2;
      c[part.quad[3]] = 2;
    }
  }
  auto col = VertexColoring::of(std::move(c));
  if (!is_proper(h, col))
    throw invariant_error("structure two-coloring came out improper");
  return col;
}

}  // namespace chrom
