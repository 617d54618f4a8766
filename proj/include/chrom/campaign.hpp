// Verification campaigns: exhaustive small-host sweeps and randomized
// finder-versus-oracle drills.  Reports are reproducible from (seed, config);
// the failure list must come back empty.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chrom/hypergraph.hpp"

namespace chrom {

struct CampaignReport {
  std::string campaign;
  std::uint64_t seed = 0;
  long long instances = 0;
  long long checks = 0;
  std::map<std::string, long long> tallies;
  std::vector<std::string> failures;
  double seconds = 0;
};

// canonical bytes; timing only on request so equal runs emit equal output
std::string report_to_json(const CampaignReport& r, bool include_timing = false);

// For every 3-uniform system on up to n_max vertices: systems whose pairwise
// 1-intersections vanish get the direct 2-coloring, systems with a bipartite
// intersection graph must lift to 2 colors, and the rest must lift within
// the exact chromatic number of the intersection graph, which also bounds
// the exact chromatic number of the system itself.
CampaignReport verify_theorem6_exhaustive(int n_max, int jobs = 1);

enum class BoundKind { MatchingGreedy, MatchingTwoColor, Star, Tree };

struct CorpusSpec {
  int n_min = 5;
  int n_max = 9;
  int hosts = 50;          // qualifying hosts wanted
  int partitions = 10;     // random partitions per host
  std::uint64_t seed = 1;
  int attempts_per_host = 4000;  // sampling budget before giving up on a slot
};

// Random hosts meeting the finder's chromatic precondition, random
// t-partitions on each; the finder must return a witness and the independent
// oracle must agree the class contains the target.  Tree bounds target the
// loose star with k edges.
CampaignReport verify_bound(BoundKind kind, int r, int k, int t,
                            const CorpusSpec& corpus, int jobs = 1);

}  // namespace chrom
