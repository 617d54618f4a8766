#include "chrom/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chrom {

std::string edge_str(const std::vector<int>& e) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << '}';
  return os.str();
}

namespace {

std::uint64_t edge_mask(const std::vector<int>& e) {
  std::uint64_t m = 0;
  for (int v : e) m |= std::uint64_t{1} << v;
  return m;
}

void normalize(int n, std::vector<std::vector<int>>& edges) {
  if (n < 0) throw input_error("vertex count must be nonnegative");
  if (n > max_vertices)
    throw resource_error("vertex count " + std::to_string(n) + " exceeds " +
                         std::to_string(max_vertices));
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw input_error("edge " + edge_str(e) + " repeats a vertex");
    if (e.size() < 2)
      throw input_error("edge " + edge_str(e) + " has fewer than 2 vertices");
    if (e.front() < 0 || e.back() >= n)
      throw input_error("edge " + edge_str(e) + " leaves vertex range 0.." +
                        std::to_string(n - 1));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

Hypergraph Hypergraph::make(int n, int r, std::vector<std::vector<int>> edges) {
  if (r < 2) throw input_error("uniformity must be at least 2");
  Hypergraph h;
  h.n = n;
  h.r = r;
  normalize(n, edges);
  for (const auto& e : edges)
    if (static_cast<int>(e.size()) != r)
      throw input_error("edge " + edge_str(e) + " does not have " +
                        std::to_string(r) + " vertices");
  h.edges = std::move(edges);
  h.masks.reserve(h.edges.size());
  for (const auto& e : h.edges) h.masks.push_back(edge_mask(e));
  return h;
}

Hypergraph Hypergraph::general(int n, std::vector<std::vector<int>> edges) {
  Hypergraph h;
  h.n = n;
  normalize(n, edges);
  h.edges = std::move(edges);
  h.masks.reserve(h.edges.size());
  size_t common = h.edges.empty() ? 0 : h.edges.front().size();
  for (const auto& e : h.edges) {
    h.masks.push_back(edge_mask(e));
    if (e.size() != common) common = 0;
  }
  h.r = static_cast<int>(common);
  return h;
}

VertexColoring VertexColoring::of(std::vector<int> colors) {
  VertexColoring c;
  c.m = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
  for (int x : colors)
    if (x < 1) throw input_error("colors must be positive");
  c.colors = std::move(colors);
  return c;
}

EdgePartition EdgePartition::of(std::vector<int> class_of, int t) {
  EdgePartition p;
  int used = 0;
  for (int s : class_of) {
    if (s < 1) throw input_error("edge classes must be positive");
    used = std::max(used, s);
  }
  p.t = t == 0 ? used : t;
  if (p.t < used)
    throw input_error("declared class count " + std::to_string(t) +
                      " below max class used " + std::to_string(used));
  p.class_of = std::move(class_of);
  return p;
}

bool is_proper(const Hypergraph& h, const VertexColoring& c) {
  if (static_cast<int>(c.colors.size()) != h.n)
    throw input_error("coloring has " + std::to_string(c.colors.size()) +
                      " entries for " + std::to_string(h.n) + " vertices");
  for (int x : c.colors)
    if (x < 1) throw input_error("colors must be positive");
  for (const auto& e : h.edges) {
    int col = c.colors[e[0]];
    bool mono = true;
    for (int v : e)
      if (c.colors[v] != col) {
        mono = false;
        break;
      }
    if (mono) return false;
  }
  return true;
}

std::vector<std::vector<int>> components(const Hypergraph& h) {
  std::vector<int> parent(h.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : h.edges)
    for (size_t i = 1; i < e.size(); ++i) parent[find(e[0])] = find(e[i]);
  std::vector<std::vector<int>> comp(h.n);
  for (int v = 0; v < h.n; ++v) comp[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& c : comp)
    if (!c.empty()) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

namespace {

IndexedSub keep_vertices(const Hypergraph& h, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (!keep.empty() && (keep.front() < 0 || keep.back() >= h.n))
    throw input_error("vertex selection leaves range");
  std::vector<int> new_of(h.n, -1);
  for (size_t i = 0; i < keep.size(); ++i) new_of[keep[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> edges;
  for (const auto& e : h.edges) {
    std::vector<int> f;
    f.reserve(e.size());
    for (int v : e) {
      if (new_of[v] < 0) break;
      f.push_back(new_of[v]);
    }
    if (f.size() == e.size()) edges.push_back(std::move(f));
  }
  IndexedSub sub;
  sub.h = h.uniform()
              ? Hypergraph::make(static_cast<int>(keep.size()), h.r, std::move(edges))
              : Hypergraph::general(static_cast<int>(keep.size()), std::move(edges));
  sub.vertex_of = std::move(keep);
  return sub;
}

}  // namespace

IndexedSub induced(const Hypergraph& h, const std::vector<int>& a) {
  return keep_vertices(h, a);
}

IndexedSub remove_vertices(const Hypergraph& h, const std::vector<int>& a) {
  std::vector<bool> drop(h.n, false);
  for (int v : a) {
    if (v < 0 || v >= h.n) throw input_error("vertex selection leaves range");
    drop[v] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < h.n; ++v)
    if (!drop[v]) keep.push_back(v);
  return keep_vertices(h, keep);
}

Hypergraph complete_hypergraph(int n, int r, long long edge_cap) {
  if (r < 2) throw input_error("uniformity must be at least 2");
  if (n < r)
    throw input_error("complete hypergraph needs at least r vertices");
  long long count = 1;
  for (int i = 1; i <= r; ++i) {
    count = count * (n - r + i) / i;
    if (count > edge_cap)
      throw resource_error("edge count of complete hypergraph exceeds cap");
  }
  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<size_t>(count));
  std::vector<int> cur(r);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    edges.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return Hypergraph::make(n, r, std::move(edges));
}

}  // namespace chrom
