#include "chrom/lift.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "chrom/chi.hpp"
#include "chrom/intersect.hpp"

namespace chrom {

LiftContext make_lift_context(const Hypergraph& h, const EdgePartition& p,
                              const Skeleton& s) {
  if (s.n != h.n || s.t != p.t ||
      p.class_of.size() != static_cast<size_t>(h.edge_count()))
    throw input_error("skeleton does not match the partitioned system");
  int t = p.t;

  LiftContext ctx;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(s.sedges.size());
  for (const auto& se : s.sedges) pairs.push_back({se.u, se.v});
  ctx.g = Graph::make(h.n, pairs);

  std::vector<char> in_k(h.n, 0);
  for (const auto& comp : graph_components(ctx.g)) {
    if (static_cast<int>(comp.size()) != t + 1) continue;
    bool complete = true;
    for (int v : comp) complete = complete && ctx.g.degree(v) == t;
    if (!complete) continue;
    if (t % 2 == 0)
      throw invariant_error(
          "complete component on t+1 vertices with t even cannot come from t "
          "matchings");
    MarkedComponent mc;
    mc.vertices = comp;
    mc.base = {-1, -1};
    for (const auto& se : s.sedges) {
      if (se.mi != 1 || se.prov != Provenance::BBase) continue;
      if (!std::binary_search(comp.begin(), comp.end(), se.u)) continue;
      if (mc.base.first < 0 || std::pair{se.u, se.v} < mc.base)
        mc.base = {se.u, se.v};
    }
    if (mc.base.first < 0)
      throw input_error(
          "complete component has no base pair in matching 1; repair the "
          "skeleton first");
    for (int v : comp) in_k[v] = 1;
    ctx.kcomps.push_back(std::move(mc));
  }
  for (int v = 0; v < h.n; ++v)
    if (!in_k[v]) ctx.rest.push_back(v);

  // a vertex closing a class-1 triple over a marked base pair must stay off
  // color 1; such a vertex is never matched by matching 1, hence never sits
  // in a complete component itself
  std::vector<char> banned(h.n, 0);
  for (const auto& mc : ctx.kcomps) {
    auto [x, y] = mc.base;
    std::uint64_t xy = (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
    for (int e = 0; e < h.edge_count(); ++e) {
      if (p.class_of[e] != 1 || (h.masks[e] & xy) != xy) continue;
      for (int z : h.edges[e]) {
        if (z == x || z == y) continue;
        if (in_k[z])
          throw invariant_error(
              "page of a marked base pair inside a complete component");
        banned[z] = 1;
      }
    }
  }
  std::vector<int> full(t), tail(t > 0 ? t - 1 : 0);
  std::iota(full.begin(), full.end(), 1);
  std::iota(tail.begin(), tail.end(), 2);
  for (int v : ctx.rest) ctx.lists.push_back(banned[v] ? tail : full);
  return ctx;
}

VertexColoring lift_coloring(const Hypergraph& h, const EdgePartition& p,
                             const Skeleton& s) {
  auto ctx = make_lift_context(h, p, s);
  int t = p.t;
  std::vector<int> color(h.n, 0);
  if (ctx.kcomps.empty()) {
    color = brooks_color(ctx.g).colors;
  } else {
    for (const auto& mc : ctx.kcomps) {
      color[mc.base.first] = color[mc.base.second] = 1;
      int next = 2;
      for (int v : mc.vertices)
        if (v != mc.base.first && v != mc.base.second) color[v] = next++;
    }
    auto sub = induced_subgraph(ctx.g, ctx.rest);
    auto lc = try_list_color(sub.g, ctx.lists);
    if (!lc) throw invariant_error("list coloring of the remainder failed");
    for (int i = 0; i < sub.g.n; ++i) color[sub.vertex_of[i]] = lc->colors[i];
  }
  auto out = VertexColoring::of(std::move(color));
  if (out.m > t || !is_proper(h, out))
    throw invariant_error("lift did not produce a proper coloring in t colors");
  return out;
}

VertexColoring color_via_intersection(const Hypergraph& h) {
  if (h.edge_count() == 0)
    return VertexColoring::of(std::vector<int>(h.n, 1));
  if (h.r != 3) throw input_error("3-uniform input required");
  auto ig = one_intersection_graph(h);
  if (ig.edge_count() == 0) return two_color_no_one_intersections(h);
  auto best = chromatic_number(ig);
  auto p = partition_from_igraph_coloring(h, best.witness);
  auto s = build_skeleton(h, p);
  return lift_coloring(h, p, s);
}

}  // namespace chrom
