#pragma once

#include <utility>
#include <vector>

#include "chrom/hypergraph.hpp"

namespace testsupport {

inline chrom::Hypergraph fano_plane() {
  return chrom::Hypergraph::make(7, 3,
                                 {{0, 1, 2},
                                  {0, 3, 4},
                                  {0, 5, 6},
                                  {1, 3, 5},
                                  {1, 4, 6},
                                  {2, 3, 6},
                                  {2, 4, 5}});
}

// k triples through the common pair {0,1}
inline chrom::Hypergraph base_book(int k) {
  std::vector<std::vector<int>> es;
  for (int i = 0; i < k; ++i) es.push_back({0, 1, 2 + i});
  return chrom::Hypergraph::make(2 + k, 3, es);
}

// three triples on four vertices, pairwise sharing two vertices
inline chrom::Hypergraph quad_triples() {
  return chrom::Hypergraph::make(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
}

inline chrom::Hypergraph two_disjoint_triples() {
  return chrom::Hypergraph::make(6, 3, {{0, 1, 2}, {3, 4, 5}});
}

// Partitioned systems exercising the skeleton switch and the odd-t lift.
// Class 1 holds a quadruple component on {0,1,2,3}; classes 2 and 3 hold
// base pairs forming the remaining four sides, so the skeleton component on
// {0,1,2,3} is complete with both matching-1 pairs from the quadruple.
inline std::pair<chrom::Hypergraph, chrom::EdgePartition> bad_quad_instance() {
  auto h = chrom::Hypergraph::make(8, 3,
                                   {{0, 1, 2},
                                    {0, 1, 3},
                                    {0, 2, 3},
                                    {0, 2, 4},
                                    {0, 3, 6},
                                    {1, 2, 7},
                                    {1, 3, 5}});
  auto p = chrom::EdgePartition::of({1, 1, 1, 2, 3, 3, 2});
  return {h, p};
}

// same complete component, but matching 1 carries two base pairs, so the
// component is acceptable as is and the lift must work around the marked
// base (0,1): vertex 8 closes a class-1 triple over it
inline std::pair<chrom::Hypergraph, chrom::EdgePartition>
surviving_quad_instance() {
  auto h = chrom::Hypergraph::make(10, 3,
                                   {{0, 1, 8},
                                    {0, 2, 4},
                                    {0, 3, 6},
                                    {1, 2, 7},
                                    {1, 3, 5},
                                    {2, 3, 9}});
  auto p = chrom::EdgePartition::of({1, 2, 3, 3, 2, 1});
  return {h, p};
}

// two quadruple components in class 1; the complete component {0,1,4,5}
// mixes pairs of both, and switching pulls in the {2,3} pair, merging
// components
inline std::pair<chrom::Hypergraph, chrom::EdgePartition>
merging_switch_instance() {
  auto h = chrom::Hypergraph::make(12, 3,
                                   {{0, 1, 2},
                                    {0, 1, 3},
                                    {0, 2, 3},
                                    {0, 4, 8},
                                    {0, 5, 10},
                                    {1, 4, 11},
                                    {1, 5, 9},
                                    {4, 5, 6},
                                    {4, 5, 7},
                                    {4, 6, 7}});
  auto p = chrom::EdgePartition::of({1, 1, 1, 2, 3, 3, 2, 1, 1, 1});
  return {h, p};
}

}  // namespace testsupport
