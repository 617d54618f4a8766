#include "chrom/chi.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace chrom {

namespace {

std::vector<std::vector<int>> incidence(const Hypergraph& h) {
  std::vector<std::vector<int>> inc(h.n);
  for (int e = 0; e < h.edge_count(); ++e)
    for (int v : h.edges[e]) inc[v].push_back(e);
  return inc;
}

// peel minimum remaining incident-edge count, then reverse: dense core first
std::vector<int> search_order(const Hypergraph& h,
                              const std::vector<std::vector<int>>& inc) {
  std::vector<int> deg(h.n, 0), order;
  std::vector<bool> gone(h.n, false), dead(h.edge_count(), false);
  for (int v = 0; v < h.n; ++v) deg[v] = static_cast<int>(inc[v].size());
  for (int step = 0; step < h.n; ++step) {
    int best = -1;
    for (int v = 0; v < h.n; ++v)
      if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
    gone[best] = true;
    order.push_back(best);
    for (int e : inc[best]) {
      if (dead[e]) continue;
      dead[e] = true;
      for (int u : h.edges[e])
        if (!gone[u]) --deg[u];
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

struct Searcher {
  const Hypergraph& h;
  int cap;  // max colors allowed
  std::vector<std::vector<int>> inc;
  std::vector<int> order, color;
  std::vector<int> cnt;       // assigned vertices per edge
  std::vector<int> mono_col;  // common color while the edge is monochromatic
  std::vector<bool> mono;     // all assigned vertices share mono_col
  std::vector<std::vector<std::pair<int, bool>>> saved;  // per-depth undo

  Searcher(const Hypergraph& hh, int m)
      : h(hh),
        cap(m),
        inc(incidence(hh)),
        order(search_order(hh, inc)),
        color(hh.n, 0),
        cnt(hh.edge_count(), 0),
        mono_col(hh.edge_count(), 0),
        mono(hh.edge_count(), true),
        saved(hh.n) {
    for (int pos = 0; pos < hh.n; ++pos)
      saved[pos].resize(inc[order[pos]].size());
  }

  // returns false if coloring v with c completes a monochromatic edge;
  // counters are rolled back then, mono flags are restored by the caller
  bool place(int v, int c) {
    for (int e : inc[v]) {
      if (cnt[e] == 0) mono_col[e] = c;
      ++cnt[e];
      if (mono[e] && mono_col[e] != c) mono[e] = false;
      if (mono[e] && cnt[e] == static_cast<int>(h.edges[e].size())) {
        for (int f : inc[v]) {
          --cnt[f];
          if (f == e) break;
        }
        return false;
      }
    }
    color[v] = c;
    return true;
  }

  bool dfs(int pos, int used) {
    if (pos == h.n) return true;
    int v = order[pos];
    int top = std::min(cap, used + 1);
    auto& save = saved[pos];
    for (size_t i = 0; i < inc[v].size(); ++i)
      save[i] = {mono_col[inc[v][i]], mono[inc[v][i]]};
    for (int c = 1; c <= top; ++c) {
      bool ok = place(v, c);
      if (ok && dfs(pos + 1, std::max(used, c))) return true;
      if (ok) {
        for (int e : inc[v]) --cnt[e];
        color[v] = 0;
      }
      for (size_t i = 0; i < inc[v].size(); ++i) {
        mono_col[inc[v][i]] = save[i].first;
        mono[inc[v][i]] = save[i].second;
      }
    }
    return false;
  }
};

}  // namespace

bool colorable_with(const Hypergraph& h, int m, VertexColoring* out) {
  if (m < 1) return false;
  if (h.edge_count() == 0) {
    if (out) *out = VertexColoring::of(std::vector<int>(h.n, 1));
    return true;
  }
  Searcher s(h, m);
  if (!s.dfs(0, 0)) return false;
  if (out) *out = VertexColoring::of(s.color);
  return true;
}

ChiResult chromatic_number(const Hypergraph& h, int vertex_cap) {
  if (!h.uniform() && h.edge_count() > 0)
    throw input_error("chromatic number requires a uniform hypergraph");
  if (h.n > vertex_cap)
    throw resource_error("hypergraph exceeds the vertex cap " +
                         std::to_string(vertex_cap));
  ChiResult res;
  if (h.n == 0) {
    res.m = 1;
    res.witness = VertexColoring{{}, 1};
    return res;
  }
  for (int m = h.edge_count() == 0 ? 1 : 2;; ++m) {
    VertexColoring w;
    if (colorable_with(h, m, &w)) {
      res.m = m;
      res.witness = std::move(w);
      return res;
    }
    if (m > h.n) throw invariant_error("coloring search failed past n colors");
  }
}

GreedyWitnesses greedy_coloring_with_witnesses(const Hypergraph& h,
                                               std::span<const int> order) {
  std::vector<int> ord(order.begin(), order.end());
  if (ord.empty()) ord = natural_order(h.n);
  if (static_cast<int>(ord.size()) != h.n)
    throw input_error("vertex order has wrong length");
  {
    std::vector<bool> seen(h.n, false);
    for (int v : ord) {
      if (v < 0 || v >= h.n || seen[v])
        throw input_error("vertex order is not a permutation");
      seen[v] = true;
    }
  }
  auto inc = incidence(h);  // edge indices ascending per vertex
  GreedyWitnesses gw;
  std::vector<int> color(h.n, 0);
  for (int v : ord) {
    std::vector<std::pair<int, int>> refusals;  // (color, first refusing edge)
    int c = 1;
    while (true) {
      int refusing = -1;
      for (int e : inc[v]) {
        bool others_all_c = true;
        for (int u : h.edges[e])
          if (u != v && color[u] != c) {  // uncolored counts as a mismatch
            others_all_c = false;
            break;
          }
        if (others_all_c) {
          refusing = e;
          break;
        }
      }
      if (refusing < 0) break;
      refusals.emplace_back(c, refusing);
      ++c;
    }
    color[v] = c;
    for (auto [i, e] : refusals) gw.witness.try_emplace({i, c}, e);
  }
  gw.coloring = VertexColoring::of(color);
  return gw;
}

std::vector<int> natural_order(int n) {
  std::vector<int> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

std::vector<int> max_degree_first_order(const Hypergraph& h) {
  std::vector<int> deg(h.n, 0);
  for (const auto& e : h.edges)
    for (int v : e) ++deg[v];
  auto o = natural_order(h.n);
  std::stable_sort(o.begin(), o.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });
  return o;
}

std::vector<int> random_order(int n, std::uint64_t seed) {
  auto o = natural_order(n);
  std::mt19937_64 rng(seed);
  std::shuffle(o.begin(), o.end(), rng);
  return o;
}

}  // namespace chrom
