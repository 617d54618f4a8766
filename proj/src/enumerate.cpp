#include "chrom/enumerate.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "chrom/chi.hpp"

namespace chrom {

long long enumerate_hypergraphs(
    int r, int n, const std::function<bool(const Hypergraph&)>& visit,
    const std::function<bool(const std::vector<int>&)>& edge_filter,
    bool dedup) {
  Hypergraph full = complete_hypergraph(n, r, 24);
  std::vector<std::vector<int>> ground;
  for (const auto& e : full.edges)
    if (!edge_filter || edge_filter(e)) ground.push_back(e);

  const int m = static_cast<int>(ground.size());
  std::set<std::tuple<int, std::vector<int>, int>> seen;
  long long visited = 0;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) edges.push_back(ground[i]);
    Hypergraph h = Hypergraph::make(n, r, std::move(edges));
    if (dedup) {
      std::vector<int> degs(n, 0);
      for (const auto& e : h.edges)
        for (int v : e) ++degs[v];
      std::sort(degs.begin(), degs.end());
      auto fp = std::make_tuple(h.edge_count(), std::move(degs),
                                chromatic_number(h).m);
      if (!seen.insert(std::move(fp)).second) continue;
    }
    ++visited;
    if (!visit(h)) break;
  }
  return visited;
}

}  // namespace chrom
