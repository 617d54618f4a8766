#include "chrom/skeleton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace chrom {

Skeleton build_initial_skeleton(const Hypergraph& h, const EdgePartition& p) {
  if (h.edge_count() > 0 && h.r != 3)
    throw input_error("skeletons are defined for 3-uniform systems");
  if (static_cast<int>(p.class_of.size()) != h.edge_count())
    throw input_error("partition size does not match the edge count");
  if (p.t < 2) throw input_error("skeletons need at least two classes");

  Skeleton s;
  s.n = h.n;
  s.t = p.t;
  for (int i = 1; i <= p.t; ++i) {
    std::vector<std::vector<int>> class_edges;
    for (int e = 0; e < h.edge_count(); ++e)
      if (p.class_of[e] == i) class_edges.push_back(h.edges[e]);
    StructureDecomposition dec;
    try {
      dec = structure_decompose(Hypergraph::make(h.n, 3, std::move(class_edges)));
    } catch (const input_error& err) {
      throw input_error("class " + std::to_string(i) + ": " + err.what());
    }
    for (size_t pi = 0; pi < dec.parts.size(); ++pi) {
      const auto& part = dec.parts[pi];
      if (part.kind == PartKind::B) {
        s.sedges.push_back({part.base.first, part.base.second, i,
                            Provenance::BBase, static_cast<int>(pi)});
      } else if (part.kind == PartKind::K) {
        s.sedges.push_back({part.quad[0], part.quad[1], i, Provenance::KPair,
                            static_cast<int>(pi)});
        s.sedges.push_back({part.quad[2], part.quad[3], i, Provenance::KPair,
                            static_cast<int>(pi)});
      }
    }
    s.class_decomp.push_back(std::move(dec));
  }

  // each matching really is a matching: components of one class are
  // vertex-disjoint, so clashes would signal a bug
  for (int i = 1; i <= p.t; ++i) {
    std::vector<bool> hit(h.n, false);
    for (const auto& se : s.sedges) {
      if (se.mi != i) continue;
      if (hit[se.u] || hit[se.v])
        throw invariant_error("matching " + std::to_string(i) +
                              " touches a vertex twice");
      hit[se.u] = hit[se.v] = true;
    }
  }
  return s;
}

std::vector<std::vector<int>> skeleton_components(const Skeleton& s) {
  std::vector<int> parent(s.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& se : s.sedges) parent[find(se.u)] = find(se.v);
  std::vector<std::vector<int>> comp(s.n), out;
  for (int v = 0; v < s.n; ++v) comp[find(v)].push_back(v);
  for (auto& c : comp)
    if (!c.empty()) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

namespace {

// indices of the sedges inside one component (vertex set given sorted)
std::vector<int> component_sedges(const Skeleton& s,
                                  const std::vector<int>& verts) {
  std::vector<int> out;
  for (size_t i = 0; i < s.sedges.size(); ++i)
    if (std::binary_search(verts.begin(), verts.end(), s.sedges[i].u))
      out.push_back(static_cast<int>(i));
  return out;
}

bool is_complete_on(const Skeleton& s, const std::vector<int>& verts,
                    const std::vector<int>& edge_ids) {
  std::set<std::pair<int, int>> pairs;
  for (int i : edge_ids) pairs.insert({s.sedges[i].u, s.sedges[i].v});
  size_t k = verts.size();
  return pairs.size() == k * (k - 1) / 2;
}

}  // namespace

std::vector<int> find_bad_components(const Skeleton& s) {
  std::vector<int> bad;
  auto comps = skeleton_components(s);
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& verts = comps[ci];
    if (static_cast<int>(verts.size()) != s.t + 1) continue;
    auto ids = component_sedges(s, verts);
    if (!is_complete_on(s, verts, ids)) continue;

    // complete on t+1 vertices: must be exactly factorized by the matchings
    if (s.t % 2 == 0)
      throw invariant_error(
          "complete component on t+1 vertices with t even cannot be covered "
          "by t matchings");
    size_t want = verts.size() * (verts.size() - 1) / 2;
    if (ids.size() != want)
      throw invariant_error("parallel pairs inside a complete component");
    for (int i = 1; i <= s.t; ++i) {
      std::set<int> hit;
      for (int id : ids)
        if (s.sedges[id].mi == i) {
          hit.insert(s.sedges[id].u);
          hit.insert(s.sedges[id].v);
        }
      if (hit.size() != verts.size())
        throw invariant_error("matching " + std::to_string(i) +
                              " is not perfect on a complete component");
    }

    bool base_edge = false;
    for (int id : ids)
      if (s.sedges[id].mi == 1 && s.sedges[id].prov == Provenance::BBase)
        base_edge = true;
    if (!base_edge) bad.push_back(static_cast<int>(ci));
  }
  return bad;
}

Skeleton apply_switch(const Skeleton& s, int bad_component_id) {
  auto comps = skeleton_components(s);
  if (bad_component_id < 0 ||
      bad_component_id >= static_cast<int>(comps.size()))
    throw input_error("no such component");
  const auto& verts = comps[bad_component_id];

  // least matching-1 pair edge inside the component
  int chosen = -1;
  for (size_t i = 0; i < s.sedges.size(); ++i) {
    const auto& se = s.sedges[i];
    if (se.mi != 1 || se.prov != Provenance::KPair) continue;
    if (!std::binary_search(verts.begin(), verts.end(), se.u)) continue;
    if (chosen < 0 || std::pair{se.u, se.v} <
                          std::pair{s.sedges[chosen].u, s.sedges[chosen].v})
      chosen = static_cast<int>(i);
  }
  if (chosen < 0)
    throw input_error("component has no quadruple pair in matching 1");

  int partner = -1;
  for (size_t i = 0; i < s.sedges.size(); ++i)
    if (static_cast<int>(i) != chosen && s.sedges[i].mi == 1 &&
        s.sedges[i].prov == Provenance::KPair &&
        s.sedges[i].part == s.sedges[chosen].part)
      partner = static_cast<int>(i);
  if (partner < 0)
    throw invariant_error("quadruple pair lost its partner pair");

  Skeleton out = s;
  int x = s.sedges[chosen].u, y = s.sedges[chosen].v;
  int u = s.sedges[partner].u, v = s.sedges[partner].v;
  out.sedges[chosen].u = std::min(x, u);
  out.sedges[chosen].v = std::max(x, u);
  out.sedges[partner].u = std::min(y, v);
  out.sedges[partner].v = std::max(y, v);
  ++out.switches;
  return out;
}

Skeleton build_skeleton(const Hypergraph& h, const EdgePartition& p) {
  Skeleton s = build_initial_skeleton(h, p);
  auto bad = find_bad_components(s);
  s.initial_bad = static_cast<int>(bad.size());
  while (!bad.empty()) {
    Skeleton next = apply_switch(s, bad.front());
    auto nbad = find_bad_components(next);
    if (nbad.size() >= bad.size())
      throw invariant_error("switching failed to reduce the bad components");
    s = std::move(next);
    bad = std::move(nbad);
  }
  return s;
}

bool skeleton_covers(const Skeleton& s, const Hypergraph& h,
                     const EdgePartition& p) {
  for (int e = 0; e < h.edge_count(); ++e) {
    std::uint64_t mask = h.masks[e];
    bool covered = false;
    for (const auto& se : s.sedges) {
      if (se.mi != p.class_of[e]) continue;
      std::uint64_t pm = (std::uint64_t{1} << se.u) | (std::uint64_t{1} << se.v);
      if ((mask & pm) == pm) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace chrom
