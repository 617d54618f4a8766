// Acceptance gate. Each numbered criterion prints one [PASS]/[FAIL] line;
// the process exits nonzero when any line fails. All randomness is seeded,
// all tolerances are exact counts pinned below.
#include <bit>
#include <cstdio>
#include <deque>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chrom/campaign.hpp"
#include "chrom/chi.hpp"
#include "chrom/enumerate.hpp"
#include "chrom/hypergraph.hpp"
#include "chrom/intersect.hpp"
#include "chrom/lift.hpp"
#include "chrom/oracle.hpp"
#include "chrom/ramsey.hpp"
#include "chrom/skeleton.hpp"

namespace {

using namespace chrom;

struct Gate {
  int next = 1;
  bool all_ok = true;

  void run(const std::string& label, const std::function<std::string()>& fn) {
    std::string why;
    try {
      why = fn();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (why.empty()) {
      std::printf("[PASS] %d. %s\n", next, label.c_str());
    } else {
      std::printf("[FAIL] %d. %s: %s\n", next, label.c_str(), why.c_str());
      all_ok = false;
    }
    std::fflush(stdout);
    ++next;
  }
};

std::string fail(const std::string& why) { return why; }

Hypergraph random_chromatic_host(std::mt19937_64& rng, int n_lo, int n_hi,
                                 int chi_min) {
  for (;;) {
    const int n = n_lo + static_cast<int>(rng() % (n_hi - n_lo + 1));
    Hypergraph full = complete_hypergraph(n, 3);
    const int keep = 60 + static_cast<int>(rng() % 40);
    std::vector<std::vector<int>> edges;
    for (const auto& e : full.edges)
      if (static_cast<int>(rng() % 100) < keep) edges.push_back(e);
    if (edges.size() < 2) continue;
    Hypergraph h = Hypergraph::make(n, 3, std::move(edges));
    if (!colorable_with(h, chi_min - 1)) return h;
  }
}

EdgePartition random_partition(std::mt19937_64& rng, int m, int t) {
  std::vector<int> cls(m);
  for (int& c : cls) c = 1 + static_cast<int>(rng() % t);
  return EdgePartition::of(std::move(cls), t);
}

bool bipartite(const Hypergraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& e : g.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<int> side(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (side[s] != 0) continue;
    side[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (side[w] == 0) {
          side[w] = 3 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string report_problem(const CampaignReport& r) {
  if (r.failures.empty()) return "";
  std::ostringstream os;
  os << r.failures.size() << " failures, first: " << r.failures.front();
  return os.str();
}

std::string chi_formula_on_complete_hosts() {
  int checks = 0;
  for (int r = 2; r <= 4; ++r)
    for (int n = r; n <= 10; ++n) {
      const int want = (n + r - 2) / (r - 1);
      const int got = chromatic_number(complete_hypergraph(n, r)).m;
      if (got != want) {
        std::ostringstream os;
        os << "complete host n=" << n << " r=" << r << ": chi " << got
           << " instead of " << want;
        return os.str();
      }
      ++checks;
    }
  return checks == 24 ? "" : fail("check count drifted");
}

std::string exhaustive_lift_sweep() {
  CampaignReport r = verify_theorem6_exhaustive(6);
  const long long expected = 1 + 15 + 1023 + ((1LL << 20) - 1);
  if (r.instances != expected) {
    std::ostringstream os;
    os << "visited " << r.instances << " systems instead of " << expected;
    return os.str();
  }
  return report_problem(r);
}

std::string two_matching_two_classes_is_four() {
  GeneratedHost g = gen_matching_extremal(3, 2, 2);
  if (chromatic_number(g.host).m != 3)
    return fail("extremal host is not 3-chromatic");
  if (oracle_has_mono(g.host, g.classes, WitnessKind::Matching, 2).found)
    return fail("extremal coloring contains a one-colored 2-matching");

  std::mt19937_64 rng(301);
  std::vector<Hypergraph> hosts{complete_hypergraph(7, 3)};
  while (hosts.size() < 501)
    hosts.push_back(random_chromatic_host(rng, 7, 10, 4));
  for (size_t i = 0; i < hosts.size(); ++i)
    for (int pi = 0; pi < 200; ++pi) {
      EdgePartition p = random_partition(rng, hosts[i].edge_count(), 2);
      MonoWitness w = find_mono_matching_2col(hosts[i], p, 2);
      validate_witness(hosts[i], p, w);
    }
  return "";
}

std::string two_star_two_classes_is_three() {
  int forced = 0;
  std::string bad;
  for (int n = 3; n <= 5 && bad.empty(); ++n)
    enumerate_hypergraphs(3, n, [&](const Hypergraph& h) {
      if (chromatic_number(h).m < 3) return true;
      ++forced;
      if (bipartite(one_intersection_graph(h))) {
        bad = "3-chromatic system with a bipartite pair graph: " +
              edge_str(h.edges[0]);
        return false;
      }
      if (oracle_exists_avoiding_partition(h, WitnessKind::Star, 2, 2)
              .exists) {
        bad = "3-chromatic system with a star-free 2-coloring";
        return false;
      }
      return true;
    });
  if (!bad.empty()) return bad;
  if (forced == 0) return fail("no 3-chromatic system showed up");

  Hypergraph two = Hypergraph::make(6, 3, {{0, 1, 2}, {3, 4, 5}});
  if (chromatic_number(two).m != 2)
    return fail("two disjoint triples are not 2-chromatic");
  AvoidResult a = oracle_exists_avoiding_partition(two, WitnessKind::Star, 2, 2);
  if (!a.exists) return fail("no star-free 2-coloring of two disjoint triples");
  if (oracle_has_mono(two, *a.partition, WitnessKind::Star, 2).found)
    return fail("returned 2-coloring is not star-free");
  return "";
}

std::string two_star_three_classes_is_four() {
  Hypergraph k5 = complete_hypergraph(5, 3);
  AvoidResult a = oracle_exists_avoiding_partition(k5, WitnessKind::Star, 2, 3);
  if (!a.exists) return fail("no star-free 3-coloring of the 3-chromatic K_5");
  if (oracle_has_mono(k5, *a.partition, WitnessKind::Star, 2).found)
    return fail("returned 3-coloring is not star-free");

  std::mt19937_64 rng(501);
  for (int i = 0; i < 500; ++i) {
    Hypergraph h = random_chromatic_host(rng, 7, 10, 4);
    for (int pi = 0; pi < 2; ++pi) {
      EdgePartition p = random_partition(rng, h.edge_count(), 3);
      if (!oracle_has_mono(h, p, WitnessKind::Star, 2).found) {
        std::ostringstream os;
        os << "4-chromatic host " << i << " has a star-free 3-coloring";
        return os.str();
      }
    }
  }
  return "";
}

std::string complete_split_threshold() {
  AvoidResult a6 = oracle_exists_avoiding_partition(
      complete_hypergraph(6, 3), WitnessKind::Matching, 2, 2);
  if (!a6.exists) return fail("no matching-free 2-coloring of K_6");
  AvoidResult a7 = oracle_exists_avoiding_partition(
      complete_hypergraph(7, 3), WitnessKind::Matching, 2, 2);
  if (a7.exists) return fail("found a matching-free 2-coloring of K_7");
  return "";
}

std::string skeleton_repair_suite() {
  std::mt19937_64 rng(701);
  int skeletons = 0, flat = 0;
  for (int i = 0; i < 10000; ++i) {
    const int n = 6 + static_cast<int>(rng() % 7);
    Hypergraph full = complete_hypergraph(n, 3);
    const int m =
        8 + static_cast<int>(rng() % std::min(13, full.edge_count() - 7));
    std::vector<std::vector<int>> edges;
    std::vector<int> pick(full.edge_count());
    for (int e = 0; e < full.edge_count(); ++e) pick[e] = e;
    for (int j = 0; j < m; ++j) {
      std::swap(pick[j], pick[j + rng() % (pick.size() - j)]);
      edges.push_back(full.edges[pick[j]]);
    }
    Hypergraph h = Hypergraph::make(n, 3, std::move(edges));

    ChiResult ci = chromatic_number(one_intersection_graph(h));
    std::ostringstream tag;
    tag << "instance " << i << " (n=" << n << ", m=" << m << "): ";
    if (ci.m < 2) {
      VertexColoring c = color_via_intersection(h);
      if (!is_proper(h, c) || c.m > 2)
        return tag.str() + "flat system not properly 2-colored";
      ++flat;
      continue;
    }
    EdgePartition p = partition_from_igraph_coloring(h, ci.witness);
    Skeleton s = build_skeleton(h, p);
    if (!skeleton_covers(s, h, p))
      return tag.str() + "skeleton misses a triple";
    for (int mi = 1; mi <= s.t; ++mi) {
      std::uint64_t seen = 0;
      for (const auto& e : s.sedges) {
        if (e.mi != mi) continue;
        const std::uint64_t mask =
            (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
        if ((seen & mask) != 0)
          return tag.str() + "matching overlap in class " +
                 std::to_string(mi);
        seen |= mask;
      }
    }
    if (s.switches > s.initial_bad)
      return tag.str() + "more switches than bad components";
    if (!find_bad_components(s).empty())
      return tag.str() + "bad component survived the repair";
    VertexColoring lifted = lift_coloring(h, p, s);
    if (!is_proper(h, lifted) || lifted.m > p.t)
      return tag.str() + "lifted coloring broken";
    ++skeletons;
  }
  if (skeletons < 1000) return fail("too few nontrivial skeleton instances");
  (void)flat;
  return "";
}

std::string finder_oracle_agreement() {
  CorpusSpec base;
  base.n_min = 7;
  base.n_max = 9;
  base.hosts = 100;
  base.partitions = 10;
  base.seed = 801;

  struct Job {
    BoundKind kind;
    int r, k, t;
    CorpusSpec corpus;
  };
  std::vector<Job> jobs{{BoundKind::MatchingGreedy, 3, 2, 1, base},
                        {BoundKind::MatchingTwoColor, 3, 2, 2, base},
                        {BoundKind::Star, 3, 2, 2, base}};
  CorpusSpec dense = base;
  dense.n_min = 9;
  dense.n_max = 10;
  jobs.push_back({BoundKind::Tree, 3, 2, 2, dense});

  for (const Job& j : jobs) {
    CampaignReport r = verify_bound(j.kind, j.r, j.k, j.t, j.corpus);
    std::string p = report_problem(r);
    if (!p.empty()) return p;
    if (r.instances != j.corpus.hosts)
      return fail("a corpus slot went unfilled");
    if (r.checks != 2LL * j.corpus.hosts * j.corpus.partitions)
      return fail("check count drifted");
  }

  Hypergraph path = Hypergraph::make(
      7, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  std::mt19937_64 rng(802);
  for (int i = 0; i < 200; ++i) {
    Hypergraph h = random_chromatic_host(rng, 7, 9, 4);
    if (!embed_tree(h, path).has_value()) {
      std::ostringstream os;
      os << "no embedded 3-edge path in 4-chromatic host " << i;
      return os.str();
    }
  }
  return "";
}

std::string generator_tightness() {
  for (int r = 2; r <= 4; ++r)
    for (int k = 1; k <= 3; ++k)
      for (int t = 1; t <= 3; ++t) {
        const int n = (t - 1) * (k - 1) + k * r - 1;
        if (n > 12) continue;
        GeneratedHost g = gen_matching_extremal(r, k, t);
        std::ostringstream tag;
        tag << "extremal host r=" << r << " k=" << k << " t=" << t << ": ";
        if (oracle_has_mono(g.host, g.classes, WitnessKind::Matching, k).found)
          return tag.str() + "a class holds " + std::to_string(k) +
                 " disjoint edges";
        if (k >= 2)
          for (int c = 1; c <= t; ++c) {
            std::vector<std::vector<int>> edges;
            for (int e = 0; e < g.host.edge_count(); ++e)
              if (g.classes.class_of[e] == c) edges.push_back(g.host.edges[e]);
            Hypergraph sub =
                Hypergraph::make(g.host.n, g.host.r, std::move(edges));
            if (sub.edge_count() == 0 ||
                !oracle_has_mono(sub,
                                 EdgePartition::of(
                                     std::vector<int>(sub.edge_count(), 1), 1),
                                 WitnessKind::Matching, k - 1)
                     .found)
              return tag.str() + "class " + std::to_string(c) +
                     " is below the extremal matching size";
          }
      }

  for (int k : {3, 5, 7}) {
    GeneratedHost g = gen_two_factor_split(k);
    const int n = 2 * (k - 1) + 1;
    std::ostringstream tag;
    tag << "split of the complete graph on " << n << " vertices: ";
    if (!(g.host == complete_hypergraph(n, 2)))
      return tag.str() + "host is not complete";
    for (int c = 1; c <= 2; ++c)
      for (int v = 0; v < n; ++v) {
        int deg = 0;
        for (int e = 0; e < g.host.edge_count(); ++e)
          if (g.classes.class_of[e] == c &&
              (g.host.masks[e] >> v & 1) != 0)
            ++deg;
        if (deg != k - 1)
          return tag.str() + "class " + std::to_string(c) +
                 " is not regular of degree " + std::to_string(k - 1);
      }
  }
  return "";
}

}  // namespace

int main() {
  Gate gate;
  gate.run("chromatic number of complete hosts matches ceil(n/(r-1))",
           chi_formula_on_complete_hosts);
  gate.run("exhaustive lift sweep over 3-uniform systems on up to 6 vertices",
           exhaustive_lift_sweep);
  gate.run("two-edge matchings under two classes force exactly at chi 4",
           two_matching_two_classes_is_four);
  gate.run("two-edge loose stars under two classes force exactly at chi 3",
           two_star_two_classes_is_three);
  gate.run("two-edge loose stars under three classes force exactly at chi 4",
           two_star_three_classes_is_four);
  gate.run("complete-host split threshold sits between 6 and 7 vertices",
           complete_split_threshold);
  gate.run("skeleton build, repair and lift hold on 10^4 random systems",
           skeleton_repair_suite);
  gate.run("finders agree with the brute-force oracle on seeded corpora",
           finder_oracle_agreement);
  gate.run("extremal generators are tight and the splits are regular",
           generator_tightness);
  return gate.all_ok ? 0 : 1;
}
