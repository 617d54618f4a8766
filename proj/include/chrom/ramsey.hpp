// Monochromatic substructure finders (matchings, stars, trees) driven by
// chromatic preconditions, plus the extremal hosts certifying that the
// matching and star bounds are sharp.
#pragma once

#include <optional>
#include <vector>

#include "chrom/hypergraph.hpp"

namespace chrom {

enum class WitnessKind { Matching, Star, Tree };

// A monochromatic substructure inside a partitioned host.  edge_indices point
// into the host's edge list; for matchings and stars they are ascending, for
// trees entry i is the image of tree edge i.
struct MonoWitness {
  WitnessKind kind = WitnessKind::Matching;
  int class_index = 0;
  std::vector<int> edge_indices;
  int center = -1;              // stars: the common vertex
  std::vector<int> embedding;   // trees: tree vertex -> host vertex
};

// Checks a witness against the host from scratch: class purity, index
// validity, and the structural condition for its kind (pairwise disjoint
// edges / pairwise intersections equal to {center} / an injective embedding
// mapping tree edges onto the listed host edges).  Throws input_error on any
// violation.  Tree witnesses need the overload that takes the tree.
void validate_witness(const Hypergraph& h, const EdgePartition& p,
                      const MonoWitness& w);
void validate_witness(const Hypergraph& h, const EdgePartition& p,
                      const MonoWitness& w, const Hypergraph& tree);

// Monochromatic k-matching via the greedy pipeline: greedy-color the host,
// form the complete graph on the first (t-1)(k-1)+2k greedy colors whose pair
// {i,j} inherits the class of the refusal witness edge, find a same-class
// k-matching there, and pull it back.  Rejects with input_error when greedy
// used fewer colors (then the chromatic number is below the bound too).
MonoWitness find_mono_matching(const Hypergraph& h, const EdgePartition& p,
                               int k);

// Monochromatic k-matching for two classes under chi(H) >= 2k, r >= 3, by
// induction: pick a cross-class pair (e, f) preferring large overlap, remove
// its union A when H[A] is 2-colorable and extend the recursive matching,
// otherwise route through a replacement edge.
MonoWitness find_mono_matching_2col(const Hypergraph& h,
                                    const EdgePartition& p, int k);

// One inductive step around a chosen cross-class pair of edge indices.  The
// public finder picks the pair by preference; this entry drives the rarely
// taken branches directly.  No chromatic precondition is checked.
MonoWitness find_mono_matching_2col_step(const Hypergraph& h,
                                         const EdgePartition& p, int k,
                                         int red_edge, int blue_edge);

// The replacement edge for two edges sharing exactly one vertex w: with
// e = {w, u_1, .., u_{r-1}} and f = {w, v_1, .., v_{r-1}} both ascending,
// returns {w} with the odd-position u's and even-position v's (1-based), so
// it meets f in at least two vertices.
std::vector<int> matching2_bridge_edge(const std::vector<int>& e,
                                       const std::vector<int>& f);

// Monochromatic k-star via pigeonhole: embed a star with t(k-1)+1 edges and
// take k of them landing in one class.  When the embedding fails, the
// chromatic number decides between input_error (below t(k-1)+2) and
// invariant_error.
MonoWitness find_mono_star(const Hypergraph& h, const EdgePartition& p, int k);

// Injective embedding of an acyclic uniform hypergraph into the host, by
// backtracking over tree edges in breadth-first order from the least edge of
// each component; candidates must meet the partial image exactly in the
// attach vertex.  Returns the vertex map, or nullopt when no copy exists.
// Throws input_error when the input is not acyclic or not everywhere covered.
std::optional<std::vector<int>> embed_tree(const Hypergraph& host,
                                           const Hypergraph& tree);

// Monochromatic copy of an acyclic T with k edges under chi(H) >= k^t + 1:
// some class has chromatic number at least k+1 (product bound) and T embeds
// into it.
MonoWitness find_mono_tree(const Hypergraph& h, const EdgePartition& p,
                           const Hypergraph& tree);

struct GeneratedHost {
  Hypergraph host;
  EdgePartition classes;
};

// K_N^r with N = (t-1)(k-1)+kr-1, classed by zones: t-1 blocks of k-1
// vertices and a tail of kr-1; an edge belongs to the least zone it meets.
// Every class has maximum matching exactly k-1.
GeneratedHost gen_matching_extremal(int r, int k, int t);

// K_{k(r-1)}^r: chromatic number k, no k-star.
Hypergraph gen_star_witness(int r, int k);

// K_{2k-1} split into two (k-1)-regular graphs along a decomposition into
// k-1 hamiltonian cycles (zigzag cycles through a hub vertex); k odd >= 3.
GeneratedHost gen_two_factor_split(int k);

// A host, an avoiding partition, and the bound it certifies: every proper
// coloring of the host needs claimed-1 colors while no class contains the
// target structure, so forcing it needs chromatic number at least claimed.
struct LowerWitness {
  Hypergraph host;
  EdgePartition classes;
  int claimed = 0;
};

LowerWitness assemble_lower_witness_matching(int r, int k, int t);
// Supported: t = 1 (any r, k); r = 2, t = 2, odd k >= 3; r = 3, k = 2, t = 3.
LowerWitness assemble_lower_witness_star(int r, int k, int t);

}  // namespace chrom
