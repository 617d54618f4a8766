#include "chrom/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>

#include "chrom/chi.hpp"
#include "chrom/intersect.hpp"

namespace chrom {

namespace {

int edge_index_of(const Hypergraph& h, std::vector<int> e) {
  std::sort(e.begin(), e.end());
  auto it = std::lower_bound(h.edges.begin(), h.edges.end(), e);
  if (it == h.edges.end() || *it != e) return -1;
  return static_cast<int>(it - h.edges.begin());
}

long long binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

void check_partition(const Hypergraph& h, const EdgePartition& p) {
  if (static_cast<int>(p.class_of.size()) != h.edge_count())
    throw input_error("partition does not match the host's edge count");
  if (p.t < 1) throw input_error("at least one class required");
}

void validate_shared(const Hypergraph& h, const EdgePartition& p,
                     const MonoWitness& w) {
  if (w.class_index < 1 || w.class_index > p.t)
    throw input_error("witness class out of range");
  if (w.edge_indices.empty()) throw input_error("witness has no edges");
  for (int idx : w.edge_indices) {
    if (idx < 0 || idx >= h.edge_count())
      throw input_error("witness edge index out of range");
    if (p.class_of[idx] != w.class_index)
      throw input_error("witness edge in the wrong class");
  }
  auto sorted = w.edge_indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw input_error("witness repeats an edge");
}

MonoWitness matching_witness(const Hypergraph& h, const EdgePartition& p,
                             std::vector<int> edges) {
  std::sort(edges.begin(), edges.end());
  MonoWitness w;
  w.kind = WitnessKind::Matching;
  w.class_index = p.class_of[edges.front()];
  w.edge_indices = std::move(edges);
  validate_witness(h, p, w);
  return w;
}

bool pick_disjoint_pairs(const std::vector<std::pair<int, int>>& pairs,
                         size_t from, int need, std::uint64_t used,
                         std::vector<std::pair<int, int>>& out) {
  if (need == 0) return true;
  if (pairs.size() - from < static_cast<size_t>(need)) return false;
  for (size_t a = from; a < pairs.size(); ++a) {
    std::uint64_t pm = (1ull << pairs[a].first) | (1ull << pairs[a].second);
    if (used & pm) continue;
    out.push_back(pairs[a]);
    if (pick_disjoint_pairs(pairs, a + 1, need - 1, used | pm, out))
      return true;
    out.pop_back();
  }
  return false;
}

// S_m^r as a fresh hypergraph: center 0, each edge its own tail of r-1
Hypergraph star_tree(int r, int m) {
  std::vector<std::vector<int>> edges;
  int next = 1;
  for (int i = 0; i < m; ++i) {
    std::vector<int> e{0};
    for (int a = 0; a < r - 1; ++a) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph::make(1 + m * (r - 1), r, std::move(edges));
}

MonoWitness matching2_search(const Hypergraph& h, const EdgePartition& p,
                             int k);

MonoWitness matching2_step_impl(const Hypergraph& h, const EdgePartition& p,
                                int k, int ei, int fi) {
  const std::uint64_t em = h.masks[ei], fm = h.masks[fi];
  const int s = std::popcount(em & fm);
  std::vector<int> a;
  for (int v = 0; v < h.n; ++v)
    if ((em | fm) >> v & 1) a.push_back(v);

  IndexedSub in_a = induced(h, a);
  if (colorable_with(in_a.h, 2)) {
    IndexedSub rest = remove_vertices(h, a);
    std::vector<int> cls(rest.h.edge_count());
    std::vector<int> orig(rest.h.edge_count());
    for (int i = 0; i < rest.h.edge_count(); ++i) {
      std::vector<int> back;
      for (int v : rest.h.edges[i]) back.push_back(rest.vertex_of[v]);
      orig[i] = edge_index_of(h, back);
      if (orig[i] < 0) throw invariant_error("sub edge lost its origin");
      cls[i] = p.class_of[orig[i]];
    }
    MonoWitness inner =
        matching2_search(rest.h, EdgePartition::of(std::move(cls), 2), k - 1);
    std::vector<int> edges;
    for (int i : inner.edge_indices) edges.push_back(orig[i]);
    edges.push_back(p.class_of[ei] == inner.class_index ? ei : fi);
    return matching_witness(h, p, std::move(edges));
  }

  if (s == 1) {
    if (in_a.h.edge_count() != binom(2 * h.r - 1, h.r))
      throw invariant_error(
          "union of a singly intersecting pair is not 2-colorable yet "
          "incomplete");
    int gi = edge_index_of(h, matching2_bridge_edge(h.edges[ei], h.edges[fi]));
    if (gi < 0) throw invariant_error("replacement edge missing");
    return p.class_of[gi] == p.class_of[ei]
               ? matching2_step_impl(h, p, k, gi, fi)
               : matching2_step_impl(h, p, k, ei, gi);
  }
  if (s == 0) {
    std::uint64_t am = em | fm;
    for (int gi = 0; gi < h.edge_count(); ++gi) {
      if (h.masks[gi] & ~am) continue;
      if (!(h.masks[gi] & em) || !(h.masks[gi] & fm)) continue;
      return p.class_of[gi] == p.class_of[ei]
                 ? matching2_step_impl(h, p, k, gi, fi)
                 : matching2_step_impl(h, p, k, ei, gi);
    }
    throw invariant_error(
        "union of two disjoint edges is not 2-colorable yet nothing "
        "connects them");
  }
  throw invariant_error("union with overlap at least 2 must be 2-colorable");
}

MonoWitness matching2_search(const Hypergraph& h, const EdgePartition& p,
                             int k) {
  if (h.edge_count() == 0)
    throw invariant_error("host ran out of edges during the induction");
  if (k == 1) return matching_witness(h, p, {0});

  bool has[3] = {false, false, false};
  for (int c : p.class_of) has[c] = true;
  if (!has[1] || !has[2]) {
    int cls = has[1] ? 1 : 2;
    EdgePartition single =
        EdgePartition::of(std::vector<int>(p.class_of.size(), 1), 1);
    MonoWitness w = find_mono_matching(h, single, k);
    w.class_index = cls;
    validate_witness(h, p, w);
    return w;
  }

  int best_e = -1, best_f = -1, best_rank = -1;
  for (int i = 0; i < h.edge_count() && best_rank < 2; ++i)
    for (int j = i + 1; j < h.edge_count() && best_rank < 2; ++j) {
      if (p.class_of[i] == p.class_of[j]) continue;
      int s = std::popcount(h.masks[i] & h.masks[j]);
      int rank = s >= 2 ? 2 : s;
      if (rank > best_rank) {
        best_rank = rank;
        best_e = i;
        best_f = j;
      }
    }
  return matching2_step_impl(h, p, k, best_e, best_f);
}

}  // namespace

void validate_witness(const Hypergraph& h, const EdgePartition& p,
                      const MonoWitness& w) {
  check_partition(h, p);
  if (w.kind == WitnessKind::Tree)
    throw input_error("tree witnesses need the tree to validate against");
  validate_shared(h, p, w);
  if (w.kind == WitnessKind::Matching) {
    std::uint64_t used = 0;
    for (int idx : w.edge_indices) {
      if (used & h.masks[idx]) throw input_error("matching edges overlap");
      used |= h.masks[idx];
    }
    return;
  }
  if (w.center < 0 || w.center >= h.n)
    throw input_error("star center out of range");
  const std::uint64_t cbit = 1ull << w.center;
  for (int idx : w.edge_indices)
    if (!(h.masks[idx] & cbit)) throw input_error("star edge misses the center");
  for (size_t a = 0; a < w.edge_indices.size(); ++a)
    for (size_t b = a + 1; b < w.edge_indices.size(); ++b)
      if ((h.masks[w.edge_indices[a]] & h.masks[w.edge_indices[b]]) != cbit)
        throw input_error("star edges meet outside the center");
}

void validate_witness(const Hypergraph& h, const EdgePartition& p,
                      const MonoWitness& w, const Hypergraph& tree) {
  if (w.kind != WitnessKind::Tree) {
    validate_witness(h, p, w);
    return;
  }
  check_partition(h, p);
  validate_shared(h, p, w);
  if (static_cast<int>(w.embedding.size()) != tree.n)
    throw input_error("embedding must map every tree vertex");
  std::vector<char> hit(h.n, 0);
  for (int v : w.embedding) {
    if (v < 0 || v >= h.n) throw input_error("embedding image out of range");
    if (hit[v]) throw input_error("embedding is not injective");
    hit[v] = 1;
  }
  if (w.edge_indices.size() != tree.edges.size())
    throw input_error("one host edge per tree edge required");
  for (size_t i = 0; i < tree.edges.size(); ++i) {
    std::vector<int> img;
    for (int v : tree.edges[i]) img.push_back(w.embedding[v]);
    std::sort(img.begin(), img.end());
    if (img != h.edges[w.edge_indices[i]])
      throw input_error("embedding does not map tree edge onto listed edge");
  }
}

MonoWitness find_mono_matching(const Hypergraph& h, const EdgePartition& p,
                               int k) {
  if (k < 1) throw input_error("matching size must be positive");
  check_partition(h, p);
  const int t = p.t;
  const long long bound = static_cast<long long>(t - 1) * (k - 1) + 2 * k;
  GreedyWitnesses gw = greedy_coloring_with_witnesses(h, natural_order(h.n));
  if (gw.coloring.m < bound)
    throw input_error(
        "greedy coloring stayed below (t-1)(k-1)+2k colors, so the "
        "chromatic precondition fails");
  const int pc = static_cast<int>(bound);

  std::vector<std::vector<std::pair<int, int>>> by_class(t + 1);
  for (int i = 1; i <= pc; ++i)
    for (int j = i + 1; j <= pc; ++j) {
      auto it = gw.witness.find({i, j});
      if (it == gw.witness.end())
        throw invariant_error("greedy witness missing for a color pair");
      by_class[p.class_of[it->second]].push_back({i, j});
    }
  for (int cls = 1; cls <= t; ++cls) {
    std::vector<std::pair<int, int>> chosen;
    if (!pick_disjoint_pairs(by_class[cls], 0, k, 0, chosen)) continue;
    std::vector<int> edges;
    for (auto pr : chosen) edges.push_back(gw.witness.at(pr));
    return matching_witness(h, p, std::move(edges));
  }
  throw invariant_error(
      "no class of the auxiliary color graph carries a k-matching");
}

MonoWitness find_mono_matching_2col(const Hypergraph& h,
                                    const EdgePartition& p, int k) {
  if (k < 1) throw input_error("matching size must be positive");
  if (h.r < 3) throw input_error("uniformity at least 3 required");
  check_partition(h, p);
  if (p.t != 2) throw input_error("exactly two classes required");
  if (chromatic_number(h).m < 2 * k)
    throw input_error("chromatic number below 2k");
  return matching2_search(h, p, k);
}

MonoWitness find_mono_matching_2col_step(const Hypergraph& h,
                                         const EdgePartition& p, int k,
                                         int red_edge, int blue_edge) {
  if (k < 1) throw input_error("matching size must be positive");
  if (h.r < 3) throw input_error("uniformity at least 3 required");
  check_partition(h, p);
  if (p.t != 2) throw input_error("exactly two classes required");
  if (red_edge < 0 || red_edge >= h.edge_count() || blue_edge < 0 ||
      blue_edge >= h.edge_count())
    throw input_error("edge index out of range");
  if (p.class_of[red_edge] == p.class_of[blue_edge])
    throw input_error("the chosen pair must straddle the classes");
  return matching2_step_impl(h, p, k, red_edge, blue_edge);
}

std::vector<int> matching2_bridge_edge(const std::vector<int>& e,
                                       const std::vector<int>& f) {
  std::vector<int> es = e, fs = f;
  std::sort(es.begin(), es.end());
  std::sort(fs.begin(), fs.end());
  if (es.size() != fs.size())
    throw input_error("edges must have the same size");
  std::vector<int> shared;
  std::set_intersection(es.begin(), es.end(), fs.begin(), fs.end(),
                        std::back_inserter(shared));
  if (shared.size() != 1)
    throw input_error("edges must share exactly one vertex");
  const int w = shared.front();
  std::vector<int> us, vs;
  for (int v : es)
    if (v != w) us.push_back(v);
  for (int v : fs)
    if (v != w) vs.push_back(v);
  std::vector<int> g{w};
  for (size_t i = 0; i < us.size(); i += 2) g.push_back(us[i]);
  for (size_t i = 1; i < vs.size(); i += 2) g.push_back(vs[i]);
  std::sort(g.begin(), g.end());
  return g;
}

MonoWitness find_mono_star(const Hypergraph& h, const EdgePartition& p,
                           int k) {
  if (k < 1) throw input_error("star size must be positive");
  check_partition(h, p);
  if (h.r < 2) throw input_error("uniform host required");
  const int t = p.t;
  const int bound = t * (k - 1) + 2;
  Hypergraph star = star_tree(h.r, bound - 1);
  std::optional<std::vector<int>> emb = embed_tree(h, star);
  if (!emb) {
    if (chromatic_number(h).m >= bound)
      throw invariant_error("star embedding failed above the chromatic bound");
    throw input_error("chromatic number below t(k-1)+2");
  }
  std::vector<std::vector<int>> by_class(t + 1);
  for (const auto& te : star.edges) {
    std::vector<int> img;
    for (int v : te) img.push_back((*emb)[v]);
    int idx = edge_index_of(h, img);
    if (idx < 0) throw invariant_error("embedded edge missing from the host");
    by_class[p.class_of[idx]].push_back(idx);
  }
  for (int cls = 1; cls <= t; ++cls) {
    if (static_cast<int>(by_class[cls].size()) < k) continue;
    MonoWitness w;
    w.kind = WitnessKind::Star;
    w.class_index = cls;
    w.center = (*emb)[0];
    w.edge_indices.assign(by_class[cls].begin(), by_class[cls].begin() + k);
    std::sort(w.edge_indices.begin(), w.edge_indices.end());
    validate_witness(h, p, w);
    return w;
  }
  throw invariant_error("t(k-1)+1 edges in t classes left every class small");
}

std::optional<std::vector<int>> embed_tree(const Hypergraph& host,
                                           const Hypergraph& tree) {
  if (tree.edge_count() == 0) {
    if (tree.n > 0) throw input_error("tree has vertices in no edge");
    return std::vector<int>{};
  }
  if (!tree.uniform()) throw input_error("tree must be uniform");
  if (host.r != tree.r) throw input_error("uniformity mismatch");
  const int r = tree.r;
  const int k = tree.edge_count();

  // acyclic iff every component with c edges spans exactly 1+c(r-1) vertices
  std::vector<int> comp(tree.n, -1);
  {
    std::vector<char> covered(tree.n, 0);
    for (const auto& e : tree.edges)
      for (int v : e) covered[v] = 1;
    for (int v = 0; v < tree.n; ++v)
      if (!covered[v]) throw input_error("tree has vertices in no edge");
    int nc = 0;
    for (int v = 0; v < tree.n; ++v) {
      if (comp[v] >= 0) continue;
      comp[v] = nc;
      std::vector<int> stack{v};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& e : tree.edges) {
          if (std::find(e.begin(), e.end(), u) == e.end()) continue;
          for (int w : e)
            if (comp[w] < 0) {
              comp[w] = nc;
              stack.push_back(w);
            }
        }
      }
      ++nc;
    }
    std::vector<int> cv(nc, 0), ce(nc, 0);
    for (int v = 0; v < tree.n; ++v) ++cv[comp[v]];
    for (const auto& e : tree.edges) ++ce[comp[e.front()]];
    for (int c = 0; c < nc; ++c)
      if (cv[c] != 1 + ce[c] * (r - 1))
        throw input_error("tree input contains a cycle");
  }

  // breadth-first edge order; each non-root edge attaches at one seen vertex
  std::vector<std::pair<int, int>> order;  // (tree edge, attach vertex or -1)
  {
    std::vector<char> seen(tree.n, 0), used(k, 0);
    for (int done = 0; done < k;) {
      int pick = -1, attach = -1;
      for (int i = 0; i < k && pick < 0; ++i) {
        if (used[i]) continue;
        for (int v : tree.edges[i])
          if (seen[v]) {
            pick = i;
            attach = v;
            break;
          }
      }
      if (pick < 0)
        for (int i = 0; i < k; ++i)
          if (!used[i]) {
            pick = i;
            break;
          }
      used[pick] = 1;
      for (int v : tree.edges[pick]) seen[v] = 1;
      order.push_back({pick, attach});
      ++done;
    }
  }

  std::vector<std::vector<int>> at(host.n);
  for (int i = 0; i < host.edge_count(); ++i)
    for (int v : host.edges[i]) at[v].push_back(i);

  std::vector<int> phi(tree.n, -1);
  std::vector<char> used_host(host.n, 0);
  std::uint64_t image = 0;

  auto place = [&](auto&& self, size_t step) -> bool {
    if (step == order.size()) return true;
    auto [te, attach] = order[step];
    std::vector<int> fresh;
    for (int v : tree.edges[te])
      if (v != attach) fresh.push_back(v);
    static const std::vector<int> no_cand;
    const std::vector<int>& cand = attach < 0 ? no_cand : at[phi[attach]];
    const int m =
        attach < 0 ? host.edge_count() : static_cast<int>(cand.size());
    for (int ci = 0; ci < m; ++ci) {
      int hx = attach < 0 ? ci : cand[ci];
      std::uint64_t want = attach < 0 ? 0 : (1ull << phi[attach]);
      if ((host.masks[hx] & image) != want) continue;
      std::vector<int> slots;
      for (int v : host.edges[hx])
        if (attach < 0 || v != phi[attach]) slots.push_back(v);
      do {
        for (size_t q = 0; q < fresh.size(); ++q) {
          phi[fresh[q]] = slots[q];
          image |= 1ull << slots[q];
        }
        if (self(self, step + 1)) return true;
        for (int v : fresh) {
          image &= ~(1ull << phi[v]);
          phi[v] = -1;
        }
      } while (std::next_permutation(slots.begin(), slots.end()));
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return phi;
}

MonoWitness find_mono_tree(const Hypergraph& h, const EdgePartition& p,
                           const Hypergraph& tree) {
  check_partition(h, p);
  const int k = tree.edge_count();
  if (k < 1) throw input_error("tree needs at least one edge");
  if (h.r != tree.r) throw input_error("uniformity mismatch");
  const int t = p.t;

  for (int cls = 1; cls <= t; ++cls) {
    std::vector<std::vector<int>> part;
    for (int i = 0; i < h.edge_count(); ++i)
      if (p.class_of[i] == cls) part.push_back(h.edges[i]);
    Hypergraph sub = Hypergraph::make(h.n, h.r, std::move(part));
    if (chromatic_number(sub).m < k + 1) continue;
    std::optional<std::vector<int>> emb = embed_tree(sub, tree);
    if (!emb)
      throw invariant_error("tree embedding failed above the chromatic bound");
    MonoWitness w;
    w.kind = WitnessKind::Tree;
    w.class_index = cls;
    w.embedding = *emb;
    for (const auto& te : tree.edges) {
      std::vector<int> img;
      for (int v : te) img.push_back((*emb)[v]);
      int idx = edge_index_of(h, img);
      if (idx < 0) throw invariant_error("embedded edge missing from the host");
      w.edge_indices.push_back(idx);
    }
    validate_witness(h, p, w, tree);
    return w;
  }

  long long need = 1;
  for (int i = 0; i < t && need <= max_vertices; ++i) need *= k;
  if (need > max_vertices || chromatic_number(h).m < need + 1)
    throw input_error("chromatic number below |E(T)|^t + 1");
  throw invariant_error(
      "every class is k-colorable yet their product cannot color the host");
}

GeneratedHost gen_matching_extremal(int r, int k, int t) {
  if (r < 2) throw input_error("uniformity must be at least 2");
  if (k < 1 || t < 1) throw input_error("k and t must be positive");
  const int n = (t - 1) * (k - 1) + k * r - 1;
  Hypergraph host =
      n >= r ? complete_hypergraph(n, r) : Hypergraph::make(n, r, {});
  std::vector<int> zone(n, t);
  int pos = 0;
  for (int i = 1; i < t; ++i)
    for (int j = 0; j < k - 1; ++j) zone[pos++] = i;
  std::vector<int> cls;
  cls.reserve(host.edge_count());
  for (const auto& e : host.edges) {
    int c = t;
    for (int v : e) c = std::min(c, zone[v]);
    cls.push_back(c);
  }
  return {std::move(host), EdgePartition::of(std::move(cls), t)};
}

Hypergraph gen_star_witness(int r, int k) {
  if (r < 2) throw input_error("uniformity must be at least 2");
  if (k < 1) throw input_error("k must be positive");
  const int n = k * (r - 1);
  return n >= r ? complete_hypergraph(n, r) : Hypergraph::make(n, r, {});
}

GeneratedHost gen_two_factor_split(int k) {
  if (k < 3 || k % 2 == 0) throw input_error("k must be odd and at least 3");
  const int m = k - 1;
  const int n = 2 * m + 1;
  const int hub = 2 * m;
  std::map<std::pair<int, int>, int> cycle_of;
  auto record = [&](int a, int b, int j) {
    cycle_of[{std::min(a, b), std::max(a, b)}] = j;
  };
  for (int j = 0; j < m; ++j) {
    std::vector<int> walk{hub, j};
    for (int a = 1; a < m; ++a) {
      walk.push_back((j + a) % (2 * m));
      walk.push_back(((j - a) % (2 * m) + 2 * m) % (2 * m));
    }
    walk.push_back((j + m) % (2 * m));
    walk.push_back(hub);
    for (size_t i = 0; i + 1 < walk.size(); ++i)
      record(walk[i], walk[i + 1], j);
  }
  Hypergraph host = complete_hypergraph(n, 2);
  std::vector<int> cls;
  cls.reserve(host.edge_count());
  for (const auto& e : host.edges) {
    auto it = cycle_of.find({e[0], e[1]});
    if (it == cycle_of.end())
      throw invariant_error("hamiltonian cycles missed an edge");
    cls.push_back(it->second < (k - 1) / 2 ? 1 : 2);
  }
  return {std::move(host), EdgePartition::of(std::move(cls), 2)};
}

LowerWitness assemble_lower_witness_matching(int r, int k, int t) {
  GeneratedHost g = gen_matching_extremal(r, k, t);
  const int claimed = (g.host.n + r - 2) / (r - 1) + 1;
  return {std::move(g.host), std::move(g.classes), claimed};
}

LowerWitness assemble_lower_witness_star(int r, int k, int t) {
  if (t == 1) {
    Hypergraph host = gen_star_witness(r, k);
    EdgePartition all =
        EdgePartition::of(std::vector<int>(host.edge_count(), 1), 1);
    return {std::move(host), std::move(all), k + 1};
  }
  if (r == 2 && t == 2 && k >= 3 && k % 2 == 1) {
    GeneratedHost g = gen_two_factor_split(k);
    return {std::move(g.host), std::move(g.classes), 2 * k};
  }
  if (r == 3 && k == 2 && t == 3) {
    Hypergraph host = complete_hypergraph(5, 3);
    ChiResult c = chromatic_number(one_intersection_graph(host));
    if (c.m != 3)
      throw invariant_error("pairs-of-triples graph on five vertices must be "
                            "3-chromatic");
    EdgePartition cls = partition_from_igraph_coloring(host, c.witness);
    return {std::move(host), std::move(cls), 4};
  }
  throw input_error("no lower-bound construction for these parameters");
}

}  // namespace chrom
