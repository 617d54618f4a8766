// Test-side oracles: slow, independent recomputations used to pin expected
// values.  Nothing here may call the solver paths under test.
#pragma once

#include <algorithm>
#include <vector>

#include "chrom/graph.hpp"
#include "chrom/hypergraph.hpp"

namespace testsupport {

// tries every assignment in {1..m}^n; independent of the backtracking solver
inline bool brute_colorable(const chrom::Hypergraph& h, int m) {
  std::vector<int> c(h.n, 1);
  while (true) {
    bool proper = true;
    for (const auto& e : h.edges) {
      bool mono = true;
      for (int v : e)
        if (c[v] != c[e[0]]) {
          mono = false;
          break;
        }
      if (mono) {
        proper = false;
        break;
      }
    }
    if (proper) return true;
    int i = h.n - 1;
    while (i >= 0 && c[i] == m) c[i--] = 1;
    if (i < 0) return false;
    ++c[i];
  }
}

inline int brute_chi(const chrom::Hypergraph& h) {
  for (int m = 1;; ++m)
    if (brute_colorable(h, m)) return m;
}

// recomputes a greedy run the slow way: a color is refused at v exactly when
// some edge has all other vertices already colored with it
inline bool greedy_replay_matches(const chrom::Hypergraph& h,
                                  const std::vector<int>& order,
                                  const std::vector<int>& colors) {
  std::vector<int> c(h.n, 0);
  for (int v : order) {
    int col = 1;
    while (true) {
      bool refused = false;
      for (const auto& e : h.edges) {
        if (std::find(e.begin(), e.end(), v) == e.end()) continue;
        bool all = true;
        for (int u : e)
          if (u != v && c[u] != col) all = false;
        if (all) {
          refused = true;
          break;
        }
      }
      if (!refused) break;
      ++col;
    }
    c[v] = col;
  }
  return c == colors;
}

// odometer over the full list product; independent of the peeling solver
inline bool brute_list_feasible(const chrom::Graph& g,
                                const std::vector<std::vector<int>>& lists) {
  for (int v = 0; v < g.n; ++v)
    if (lists[v].empty()) return false;
  std::vector<size_t> pick(g.n, 0);
  while (true) {
    bool proper = true;
    for (int u = 0; u < g.n && proper; ++u)
      for (int v : g.adj[u])
        if (u < v && lists[u][pick[u]] == lists[v][pick[v]]) {
          proper = false;
          break;
        }
    if (proper) return true;
    int i = 0;
    while (i < g.n && ++pick[i] == lists[i].size()) pick[i++] = 0;
    if (i == g.n) return false;
  }
}

// are there `need` pairwise disjoint masks? index-ordered pick
inline bool brute_has_disjoint(const std::vector<std::uint64_t>& ms, size_t i,
                               int need, std::uint64_t used) {
  if (need == 0) return true;
  if (ms.size() - i < static_cast<size_t>(need)) return false;
  for (size_t a = i; a < ms.size(); ++a)
    if (!(ms[a] & used) &&
        brute_has_disjoint(ms, a + 1, need - 1, used | ms[a]))
      return true;
  return false;
}

inline int brute_max_disjoint(const std::vector<std::uint64_t>& ms) {
  int s = 0;
  while (brute_has_disjoint(ms, 0, s + 1, 0)) ++s;
  return s;
}

// maximum matching among the edges of one class
inline int brute_max_class_matching(const chrom::Hypergraph& h,
                                    const chrom::EdgePartition& p, int cls) {
  std::vector<std::uint64_t> ms;
  for (int i = 0; i < h.edge_count(); ++i)
    if (p.class_of[i] == cls) ms.push_back(h.masks[i]);
  return brute_max_disjoint(ms);
}

// maximum star (edges pairwise meeting exactly in one shared center) in a class
inline int brute_max_class_star(const chrom::Hypergraph& h,
                                const chrom::EdgePartition& p, int cls) {
  int best = 0;
  for (int v = 0; v < h.n; ++v) {
    std::vector<std::uint64_t> ms;
    for (int i = 0; i < h.edge_count(); ++i)
      if (p.class_of[i] == cls && (h.masks[i] >> v & 1))
        ms.push_back(h.masks[i] & ~(1ull << v));
    best = std::max(best, brute_max_disjoint(ms));
  }
  return best;
}

}  // namespace testsupport
