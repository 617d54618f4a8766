#include "chrom/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "chrom/chi.hpp"
#include "chrom/intersect.hpp"
#include "chrom/lift.hpp"
#include "chrom/oracle.hpp"
#include "chrom/ramsey.hpp"
#include "json.hpp"

namespace chrom {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

void merge_into(CampaignReport& into, const CampaignReport& part) {
  into.instances += part.instances;
  into.checks += part.checks;
  for (const auto& [key, count] : part.tallies) into.tallies[key] += count;
  into.failures.insert(into.failures.end(), part.failures.begin(),
                       part.failures.end());
}

// 2-coloring of a graph given as a 2-uniform hypergraph, if bipartite
bool bipartite_two_color(const Hypergraph& g, std::vector<int>& color) {
  color.assign(g.n, 0);
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& e : g.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (int s = 0; s < g.n; ++s) {
    if (color[s]) continue;
    color[s] = 1;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (int v : adj[u]) {
        if (!color[v]) {
          color[v] = 3 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

void run_sharded(int jobs, long long total,
                 const std::function<void(long long, CampaignReport&)>& work,
                 CampaignReport& report) {
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (long long i = 0; i < total; ++i) work(i, report);
    return;
  }
  std::vector<CampaignReport> parts(jobs);
  std::vector<std::thread> threads;
  for (int s = 0; s < jobs; ++s)
    threads.emplace_back([&, s] {
      for (long long i = s; i < total; i += jobs) work(i, parts[s]);
    });
  for (auto& th : threads) th.join();
  for (const auto& part : parts) merge_into(report, part);
  std::sort(report.failures.begin(), report.failures.end());
}

Hypergraph loose_star(int r, int k) {
  std::vector<std::vector<int>> edges;
  int next = 1;
  for (int i = 0; i < k; ++i) {
    std::vector<int> e{0};
    for (int a = 0; a < r - 1; ++a) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph::make(1 + k * (r - 1), r, std::move(edges));
}

}  // namespace

std::string report_to_json(const CampaignReport& r, bool include_timing) {
  nlohmann::json j;
  j["campaign"] = r.campaign;
  j["seed"] = r.seed;
  j["instances"] = r.instances;
  j["checks"] = r.checks;
  j["tallies"] = r.tallies;
  j["failures"] = r.failures;
  if (include_timing) j["seconds"] = r.seconds;
  return j.dump(2) + "\n";
}

CampaignReport verify_theorem6_exhaustive(int n_max, int jobs) {
  if (n_max < 3) throw input_error("need at least 3 vertices");
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.campaign = "pair-graph-bound-exhaustive";
  report.seed = 0;

  for (int n = 3; n <= n_max; ++n) {
    const Hypergraph full = complete_hypergraph(n, 3, 24);
    const int m = full.edge_count();
    const long long total = (1ll << m) - 1;

    run_sharded(
        jobs, total,
        [&full, n](long long index, CampaignReport& rep) {
          const std::uint32_t mask = static_cast<std::uint32_t>(index) + 1;
          std::vector<std::vector<int>> edges;
          for (int i = 0; i < full.edge_count(); ++i)
            if (mask >> i & 1) edges.push_back(full.edges[i]);
          Hypergraph h = Hypergraph::make(n, 3, std::move(edges));
          ++rep.instances;
          auto fail = [&](const std::string& what) {
            std::ostringstream os;
            os << "n=" << n << " mask=" << mask << ": " << what;
            rep.failures.push_back(os.str());
          };

          Hypergraph ig = one_intersection_graph(h);
          if (ig.edge_count() == 0) {
            VertexColoring c = two_color_no_one_intersections(h);
            ++rep.checks;
            if (!is_proper(h, c) || c.m > 2)
              fail("direct 2-coloring failed without 1-intersections");
            ++rep.tallies["no-one-intersections"];
            return;
          }
          std::vector<int> two;
          if (bipartite_two_color(ig, two)) {
            VertexColoring c = color_via_intersection(h);
            ++rep.checks;
            if (!is_proper(h, c) || c.m > 2)
              fail("lift exceeded 2 colors on a bipartite pair graph");
            ++rep.tallies["bipartite-pair-graph"];
            return;
          }
          const int chi_ig = chromatic_number(ig).m;
          VertexColoring c = color_via_intersection(h);
          ++rep.checks;
          if (!is_proper(h, c) || c.m > chi_ig)
            fail("lift exceeded the pair-graph chromatic number");
          ++rep.checks;
          if (!colorable_with(h, chi_ig))
            fail("exact chromatic number exceeds the pair-graph bound");
          ++rep.tallies["lifted"];
        },
        report);
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

CampaignReport verify_bound(BoundKind kind, int r, int k, int t,
                            const CorpusSpec& corpus, int jobs) {
  if (r < 2 || k < 1 || t < 1) throw input_error("bad bound parameters");
  if (kind == BoundKind::MatchingTwoColor && (t != 2 || r < 3))
    throw input_error("the two-color bound needs t = 2 and r >= 3");
  if (corpus.n_min < r || corpus.n_max < corpus.n_min ||
      corpus.n_max > max_vertices)
    throw input_error("bad corpus vertex range");

  long long need = 0;
  const char* name = "";
  switch (kind) {
    case BoundKind::MatchingGreedy:
      need = static_cast<long long>(t - 1) * (k - 1) + 2 * k;
      name = "matching-greedy";
      break;
    case BoundKind::MatchingTwoColor:
      need = 2 * k;
      name = "matching-two-color";
      break;
    case BoundKind::Star:
      need = static_cast<long long>(t) * (k - 1) + 2;
      name = "star-pigeonhole";
      break;
    case BoundKind::Tree:
      need = 1;
      for (int i = 0; i < t && need <= max_vertices; ++i) need *= k;
      need += 1;
      name = "tree-product";
      break;
  }
  if (need > max_vertices)
    throw input_error("chromatic precondition out of reach");

  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.campaign = name;
  report.seed = corpus.seed;
  const Hypergraph star = loose_star(r, k);

  run_sharded(
      jobs, corpus.hosts,
      [&](long long slot, CampaignReport& rep) {
        std::mt19937_64 rng(splitmix64(corpus.seed ^ (0x5eedull + slot)));
        for (int attempt = 0; attempt < corpus.attempts_per_host; ++attempt) {
          ++rep.tallies["attempts"];
          const int n =
              corpus.n_min +
              static_cast<int>(rng() % (corpus.n_max - corpus.n_min + 1));
          Hypergraph full = complete_hypergraph(n, r, 1 << 20);
          const int keep = 60 + static_cast<int>(rng() % 40);
          std::vector<std::vector<int>> edges;
          for (const auto& e : full.edges)
            if (static_cast<int>(rng() % 100) < keep) edges.push_back(e);
          Hypergraph h = Hypergraph::make(n, r, std::move(edges));
          if (h.edge_count() == 0) continue;
          if (chromatic_number(h).m < need) continue;

          ++rep.instances;
          for (int pi = 0; pi < corpus.partitions; ++pi) {
            std::vector<int> cls(h.edge_count());
            for (int& c : cls) c = 1 + static_cast<int>(rng() % t);
            EdgePartition p = EdgePartition::of(std::move(cls), t);
            auto fail = [&](const std::string& what) {
              std::ostringstream os;
              os << name << " slot=" << slot << " attempt=" << attempt
                 << " partition=" << pi << ": " << what;
              rep.failures.push_back(os.str());
            };
            try {
              MonoWitness w;
              switch (kind) {
                case BoundKind::MatchingGreedy:
                  w = find_mono_matching(h, p, k);
                  break;
                case BoundKind::MatchingTwoColor:
                  w = find_mono_matching_2col(h, p, k);
                  break;
                case BoundKind::Star:
                  w = find_mono_star(h, p, k);
                  break;
                case BoundKind::Tree:
                  w = find_mono_tree(h, p, star);
                  break;
              }
              ++rep.checks;
              OracleResult o = oracle_has_mono(
                  h, p,
                  kind == BoundKind::Tree ? WitnessKind::Tree : w.kind,
                  k, kind == BoundKind::Tree ? &star : nullptr);
              ++rep.checks;
              if (!o.found) fail("oracle disagrees with the finder");
            } catch (const input_error& e) {
              fail(std::string("finder rejected a qualifying host: ") +
                   e.what());
            } catch (const invariant_error& e) {
              fail(std::string("invariant failure: ") + e.what());
            }
          }
          return;
        }
        ++rep.tallies["unfilled-slots"];
      },
      report);

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace chrom
