#include "chrom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>

namespace chrom {

namespace {

bool pick_disjoint(const std::vector<std::uint64_t>& ms, size_t from, int need,
                   std::uint64_t used, std::vector<size_t>& out) {
  if (need == 0) return true;
  if (ms.size() - from < static_cast<size_t>(need)) return false;
  for (size_t a = from; a < ms.size(); ++a) {
    if (ms[a] & used) continue;
    out.push_back(a);
    if (pick_disjoint(ms, a + 1, need - 1, used | ms[a], out)) return true;
    out.pop_back();
  }
  return false;
}

// generic embedding of t's edges (index order) into the listed host edges;
// injective on vertices, which keeps host edges distinct
bool embed_into(const Hypergraph& host, const std::vector<int>& host_edges,
                const Hypergraph& t, size_t ti, std::vector<int>& phi,
                std::vector<char>& used, std::vector<int>& edge_img) {
  if (ti == t.edges.size()) return true;
  const auto& tv = t.edges[ti];
  for (int he : host_edges) {
    const auto& hv = host.edges[he];
    std::uint64_t free_slots = host.masks[he];
    bool ok = true;
    std::vector<int> unmapped;
    for (int v : tv) {
      if (phi[v] >= 0) {
        if (!(host.masks[he] >> phi[v] & 1)) {
          ok = false;
          break;
        }
        free_slots &= ~(1ull << phi[v]);
      } else {
        unmapped.push_back(v);
      }
    }
    if (!ok) continue;
    std::vector<int> slots;
    for (int v : hv)
      if ((free_slots >> v & 1) && !used[v]) slots.push_back(v);
    if (slots.size() < unmapped.size()) continue;
    if (unmapped.empty()) {
      edge_img.push_back(he);
      if (embed_into(host, host_edges, t, ti + 1, phi, used, edge_img))
        return true;
      edge_img.pop_back();
      continue;
    }
    // ordered selections of |unmapped| slots: permute, use the prefix, skip
    // rearrangements of the suffix
    std::sort(slots.begin(), slots.end());
    std::vector<int> perm = slots;
    do {
      for (size_t q = 0; q < unmapped.size(); ++q) {
        phi[unmapped[q]] = perm[q];
        used[perm[q]] = 1;
      }
      edge_img.push_back(he);
      if (embed_into(host, host_edges, t, ti + 1, phi, used, edge_img))
        return true;
      edge_img.pop_back();
      for (size_t q = 0; q < unmapped.size(); ++q) {
        used[phi[unmapped[q]]] = 0;
        phi[unmapped[q]] = -1;
      }
      // advance to the next arrangement whose prefix differs
      std::reverse(perm.begin() + static_cast<long>(unmapped.size()),
                   perm.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

MonoWitness tree_witness(const Hypergraph& h, int cls,
                         const std::vector<int>& phi,
                         const std::vector<int>& edge_img) {
  MonoWitness w;
  w.kind = WitnessKind::Tree;
  w.class_index = cls;
  w.edge_indices = edge_img;
  w.embedding = phi;
  // vertices of the tree outside every edge may still need images
  std::vector<char> used(h.n, 0);
  for (int v : w.embedding)
    if (v >= 0) used[v] = 1;
  for (int& v : w.embedding)
    if (v < 0) {
      int free = 0;
      while (used[free]) ++free;
      v = free;
      used[free] = 1;
    }
  return w;
}

struct AvoidSearch {
  const Hypergraph& h;
  WitnessKind kind;
  int k;
  int t;
  const Hypergraph* tree;
  std::chrono::steady_clock::time_point deadline;
  bool timed;
  std::vector<int> order;       // edge indices, conflict-seeking
  std::vector<int> cls_of;      // by position in order, 0 = unassigned
  long long nodes = 0;

  bool conflicts(int a, int b) const {
    const int s = std::popcount(h.masks[a] & h.masks[b]);
    switch (kind) {
      case WitnessKind::Matching: return s == 0;
      case WitnessKind::Star: return s == 1;
      case WitnessKind::Tree: return s >= 1;
    }
    return false;
  }

  // does class c, restricted to assigned edges, contain the target when the
  // edge at position `pos` has just joined it?
  bool now_mono(int c, size_t pos) {
    std::vector<int> members;
    for (size_t i = 0; i <= pos; ++i)
      if (cls_of[i] == c) members.push_back(order[i]);
    const int just = order[pos];
    if (kind == WitnessKind::Matching) {
      std::vector<std::uint64_t> ms;
      for (int e : members)
        if (e != just && !(h.masks[e] & h.masks[just]))
          ms.push_back(h.masks[e]);
      std::vector<size_t> chosen;
      return pick_disjoint(ms, 0, k - 1, h.masks[just], chosen);
    }
    if (kind == WitnessKind::Star) {
      for (int v : h.edges[just]) {
        const std::uint64_t vbit = 1ull << v;
        std::vector<std::uint64_t> ms;
        for (int e : members)
          if (e != just && (h.masks[e] & vbit) &&
              (h.masks[e] & h.masks[just]) == vbit)
            ms.push_back(h.masks[e] & ~vbit);
        std::vector<size_t> chosen;
        if (pick_disjoint(ms, 0, k - 1, h.masks[just] & ~vbit, chosen))
          return true;
      }
      return false;
    }
    if (static_cast<int>(members.size()) < tree->edge_count()) return false;
    std::vector<int> phi(tree->n, -1);
    std::vector<char> used(h.n, 0);
    std::vector<int> img;
    return embed_into(h, members, *tree, 0, phi, used, img);
  }

  bool place(size_t pos, int used_classes, std::vector<int>& out) {
    if ((++nodes & 4095) == 0 && timed &&
        std::chrono::steady_clock::now() > deadline)
      throw resource_error("avoiding-partition search hit the time limit");
    if (pos == order.size()) {
      out.assign(h.edge_count(), 0);
      for (size_t i = 0; i < order.size(); ++i) out[order[i]] = cls_of[i];
      return true;
    }
    const int cap = std::min(t, used_classes + 1);
    for (int c = 1; c <= cap; ++c) {
      cls_of[pos] = c;
      if (!now_mono(c, pos) &&
          place(pos + 1, std::max(used_classes, c), out))
        return true;
      cls_of[pos] = 0;
    }
    return false;
  }
};

}  // namespace

OracleResult oracle_has_mono(const Hypergraph& h, const EdgePartition& p,
                             WitnessKind kind, int k, const Hypergraph* tree) {
  if (static_cast<int>(p.class_of.size()) != h.edge_count())
    throw input_error("partition does not match the host's edge count");
  if (p.t < 1) throw input_error("at least one class required");
  if (kind != WitnessKind::Tree && k < 1)
    throw input_error("target size must be positive");
  if (kind == WitnessKind::Tree) {
    if (!tree) throw input_error("tree target requires the tree");
    if (tree->edge_count() < 1)
      throw input_error("tree needs at least one edge");
    if (tree->r != h.r) throw input_error("uniformity mismatch");
  }

  for (int cls = 1; cls <= p.t; ++cls) {
    std::vector<int> members;
    for (int i = 0; i < h.edge_count(); ++i)
      if (p.class_of[i] == cls) members.push_back(i);

    if (kind == WitnessKind::Matching) {
      std::vector<std::uint64_t> ms;
      for (int e : members) ms.push_back(h.masks[e]);
      std::vector<size_t> chosen;
      if (!pick_disjoint(ms, 0, k, 0, chosen)) continue;
      MonoWitness w;
      w.kind = kind;
      w.class_index = cls;
      for (size_t i : chosen) w.edge_indices.push_back(members[i]);
      validate_witness(h, p, w);
      return {true, w};
    }
    if (kind == WitnessKind::Star) {
      for (int v = 0; v < h.n; ++v) {
        const std::uint64_t vbit = 1ull << v;
        std::vector<std::uint64_t> ms;
        std::vector<int> through;
        for (int e : members)
          if (h.masks[e] & vbit) {
            ms.push_back(h.masks[e] & ~vbit);
            through.push_back(e);
          }
        std::vector<size_t> chosen;
        if (!pick_disjoint(ms, 0, k, 0, chosen)) continue;
        MonoWitness w;
        w.kind = kind;
        w.class_index = cls;
        w.center = v;
        for (size_t i : chosen) w.edge_indices.push_back(through[i]);
        validate_witness(h, p, w);
        return {true, w};
      }
      continue;
    }
    std::vector<int> phi(tree->n, -1);
    std::vector<char> used(h.n, 0);
    std::vector<int> img;
    if (!embed_into(h, members, *tree, 0, phi, used, img)) continue;
    MonoWitness w = tree_witness(h, cls, phi, img);
    validate_witness(h, p, w, *tree);
    return {true, w};
  }
  return {false, std::nullopt};
}

AvoidResult oracle_exists_avoiding_partition(const Hypergraph& h,
                                             WitnessKind kind, int k, int t,
                                             const Hypergraph* tree,
                                             double timeout_sec) {
  if (t < 1) throw input_error("at least one class required");
  if (kind != WitnessKind::Tree && k < 1)
    throw input_error("target size must be positive");
  if (kind == WitnessKind::Tree) {
    if (!tree) throw input_error("tree target requires the tree");
    if (tree->edge_count() < 1)
      throw input_error("tree needs at least one edge");
    if (tree->r != h.r) throw input_error("uniformity mismatch");
  }
  if (h.edge_count() == 0)
    return {true, EdgePartition::of(std::vector<int>{}, t)};

  AvoidSearch s{h,
                kind,
                k,
                t,
                tree,
                std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<
                        std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(timeout_sec)),
                timeout_sec > 0,
                {},
                std::vector<int>(h.edge_count(), 0)};

  // conflict-seeking order: repeatedly take the edge in conflict with the
  // most already placed edges, so prunes fire near the root
  {
    std::vector<char> placed(h.edge_count(), 0);
    s.order.push_back(0);
    placed[0] = 1;
    while (static_cast<int>(s.order.size()) < h.edge_count()) {
      int best = -1, best_score = -1;
      for (int e = 0; e < h.edge_count(); ++e) {
        if (placed[e]) continue;
        int score = 0;
        for (int f : s.order) score += s.conflicts(e, f) ? 1 : 0;
        if (score > best_score) {
          best_score = score;
          best = e;
        }
      }
      placed[best] = 1;
      s.order.push_back(best);
    }
  }

  std::vector<int> out;
  if (!s.place(0, 0, out)) return {false, std::nullopt};
  return {true, EdgePartition::of(std::move(out), t)};
}

}  // namespace chrom
