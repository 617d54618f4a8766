#include "chrom/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

namespace chrom {

Graph Graph::make(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > max_vertices)
    throw resource_error("vertex count out of range");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw input_error("edge endpoint out of range");
    if (u == v) throw input_error("loops are not allowed");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.push_back({u, v});
  return out;
}

bool is_proper(const Graph& g, const VertexColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.n)
    throw input_error("coloring size does not match vertex count");
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v && c.colors[u] == c.colors[v]) return false;
  return true;
}

std::vector<std::vector<int>> graph_components(const Graph& g) {
  std::vector<int> comp_id(g.n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    if (comp_id[s] >= 0) continue;
    std::vector<int> comp{s};
    comp_id[s] = static_cast<int>(out.size());
    for (size_t head = 0; head < comp.size(); ++head)
      for (int v : g.adj[comp[head]])
        if (comp_id[v] < 0) {
          comp_id[v] = comp_id[s];
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

IndexedSubgraph induced_subgraph(const Graph& g,
                                 const std::vector<int>& vertices) {
  IndexedSubgraph sub;
  sub.vertex_of = vertices;
  std::sort(sub.vertex_of.begin(), sub.vertex_of.end());
  sub.vertex_of.erase(std::unique(sub.vertex_of.begin(), sub.vertex_of.end()),
                      sub.vertex_of.end());
  std::vector<int> idx(g.n, -1);
  for (size_t i = 0; i < sub.vertex_of.size(); ++i) {
    int v = sub.vertex_of[i];
    if (v < 0 || v >= g.n) throw input_error("vertex out of range");
    idx[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u : sub.vertex_of)
    for (int v : g.adj[u])
      if (u < v && idx[v] >= 0) edges.push_back({idx[u], idx[v]});
  sub.g = Graph::make(static_cast<int>(sub.vertex_of.size()), edges);
  return sub;
}

namespace {

// colors never exceed max_vertices, so a word of bits suffices
int least_free_color(const Graph& g, const std::vector<int>& color, int v) {
  std::uint64_t used = 0;
  for (int u : g.adj[v]) {
    int c = color[u];
    if (c >= 1) used |= std::uint64_t{1} << (c - 1);
  }
  return std::countr_one(used) + 1;
}

// discovery order from root, confined to alive vertices
std::vector<int> bfs_order(const Graph& g, int root,
                           const std::vector<char>& alive) {
  std::vector<int> order{root};
  std::vector<char> seen(g.n, 0);
  seen[root] = 1;
  for (size_t head = 0; head < order.size(); ++head)
    for (int v : g.adj[order[head]])
      if (alive[v] && !seen[v]) {
        seen[v] = 1;
        order.push_back(v);
      }
  return order;
}

// coloring back to front leaves every vertex except the root with an
// uncolored neighbor (its discovery parent) when its turn comes
void greedy_reverse(const Graph& g, const std::vector<int>& order,
                    std::vector<int>& color) {
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    color[*it] = least_free_color(g, color, *it);
}

void color_component(const Graph& g, const std::vector<int>& comp,
                     std::vector<int>& color) {
  int s = static_cast<int>(comp.size());
  if (s == 1) {
    color[comp[0]] = 1;
    return;
  }
  int delta = 0;
  bool complete = true;
  for (int v : comp) {
    delta = std::max(delta, g.degree(v));
    complete = complete && g.degree(v) == s - 1;
  }
  if (complete) {
    for (int i = 0; i < s; ++i) color[comp[i]] = i + 1;
    return;
  }
  std::vector<char> alive(g.n, 0);
  for (int v : comp) alive[v] = 1;

  for (int v : comp)
    if (g.degree(v) < delta) {
      greedy_reverse(g, bfs_order(g, v, alive), color);
      return;
    }

  if (delta == 2) {  // a cycle; not complete, so length at least four
    std::vector<int> cyc{comp[0], g.adj[comp[0]][0]};
    while (true) {
      int prev = cyc[cyc.size() - 2], cur = cyc.back();
      int next = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
      if (next == comp[0]) break;
      cyc.push_back(next);
    }
    for (int i = 0; i < s; ++i) color[cyc[i]] = i % 2 + 1;
    if (s % 2 == 1) color[cyc[s - 1]] = 3;
    return;
  }

  // regular of degree >= 3 and incomplete: look for a vertex b with two
  // nonadjacent neighbors a, c whose removal keeps the component connected;
  // coloring a and c alike buys b a spare color at the very end
  for (int b : comp) {
    for (int a : g.adj[b]) {
      for (int c : g.adj[b]) {
        if (a >= c || g.has_edge(a, c)) continue;
        alive[a] = alive[c] = 0;
        auto order = bfs_order(g, b, alive);
        if (static_cast<int>(order.size()) == s - 2) {
          color[a] = color[c] = 1;
          greedy_reverse(g, order, color);
          return;
        }
        alive[a] = alive[c] = 1;
      }
    }
  }

  // no such triple: the component has a cut vertex; color the pieces
  // around it independently and line them up on its color
  for (int v : comp) {
    alive[v] = 0;
    int start = comp[0] == v ? comp[1] : comp[0];
    if (static_cast<int>(bfs_order(g, start, alive).size()) == s - 1) {
      alive[v] = 1;
      continue;
    }
    std::vector<char> done(g.n, 0);
    for (int u : g.adj[v]) {
      if (done[u]) continue;
      auto piece = bfs_order(g, u, alive);
      std::vector<char> in_piece(g.n, 0);
      for (int w : piece) done[w] = in_piece[w] = 1;
      in_piece[v] = 1;
      color[v] = 0;
      greedy_reverse(g, bfs_order(g, v, in_piece), color);
      if (int cv = color[v]; cv != 1) {
        for (int w : piece) {
          if (color[w] == cv)
            color[w] = 1;
          else if (color[w] == 1)
            color[w] = cv;
        }
        color[v] = 1;
      }
    }
    return;
  }
  throw invariant_error("regular incomplete component with no cut vertex");
}

}  // namespace

VertexColoring brooks_color(const Graph& g) {
  std::vector<int> color(g.n, 0);
  for (const auto& comp : graph_components(g)) color_component(g, comp, color);
  auto out = VertexColoring::of(std::move(color));
  if (!is_proper(g, out)) throw invariant_error("greedy coloring came out improper");
  return out;
}

std::optional<VertexColoring> try_list_color(
    const Graph& g, const std::vector<std::vector<int>>& lists) {
  if (static_cast<int>(lists.size()) != g.n)
    throw input_error("one color list per vertex required");
  auto ls = lists;
  for (auto& l : ls) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (!l.empty() && l.front() < 1)
      throw input_error("list colors must be positive");
  }

  std::vector<int> color(g.n, 0);
  std::vector<char> alive(g.n, 1);
  std::vector<int> degr(g.n);
  for (int v = 0; v < g.n; ++v) degr[v] = g.degree(v);

  std::vector<int> peeled;
  for (bool progress = true; progress;) {
    progress = false;
    for (int v = 0; v < g.n; ++v) {
      if (!alive[v] || degr[v] >= static_cast<int>(ls[v].size())) continue;
      alive[v] = 0;
      peeled.push_back(v);
      for (int u : g.adj[v])
        if (alive[u]) --degr[u];
      progress = true;
      break;
    }
  }

  std::vector<int> residue;
  for (int v = 0; v < g.n; ++v)
    if (alive[v]) residue.push_back(v);

  auto available = [&](int v) {
    std::vector<int> av;
    for (int c : ls[v]) {
      bool free = true;
      for (int u : g.adj[v])
        if (color[u] == c) {
          free = false;
          break;
        }
      if (free) av.push_back(c);
    }
    return av;
  };

  std::function<bool(int)> settle = [&](int left) -> bool {
    if (left == 0) return true;
    int best = -1;
    std::vector<int> best_av;
    for (int v : residue) {
      if (color[v]) continue;
      auto av = available(v);
      if (best < 0 || av.size() < best_av.size()) {
        best = v;
        best_av = std::move(av);
      }
      if (best_av.empty()) return false;
    }
    for (int c : best_av) {
      color[best] = c;
      if (settle(left - 1)) return true;
    }
    color[best] = 0;
    return false;
  };
  if (!settle(static_cast<int>(residue.size()))) return std::nullopt;

  // unwind: a peeled vertex sees fewer colored neighbors than list entries
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    auto av = available(*it);
    if (av.empty()) throw invariant_error("peeled vertex ran out of colors");
    color[*it] = av.front();
  }
  return VertexColoring::of(std::move(color));
}

}  // namespace chrom
