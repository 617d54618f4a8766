// Core types: uniform hypergraphs on vertex set {0..n-1}, vertex colorings,
// edge partitions.  Vertices fit in a 64-bit mask, which bounds n by 64.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chrom {

// error taxonomy, mapped to CLI exit codes 1/2/3
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int max_vertices = 64;

struct Hypergraph {
  int n = 0;  // vertices are 0..n-1
  int r = 0;  // uniformity; 2 <= r when uniform, 0 marks mixed edge sizes
  std::vector<std::vector<int>> edges;  // each ascending, list sorted, distinct
  std::vector<std::uint64_t> masks;     // vertex bitmask per edge

  // builds an r-uniform hypergraph; edges are normalized (sorted, deduped)
  static Hypergraph make(int n, int r, std::vector<std::vector<int>> edges);
  // storage for mixed edge sizes; r is set when edges happen to be uniform
  static Hypergraph general(int n, std::vector<std::vector<int>> edges);

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool uniform() const { return r >= 2; }

  bool operator==(const Hypergraph& o) const {
    return n == o.n && r == o.r && edges == o.edges;
  }
};

struct VertexColoring {
  std::vector<int> colors;  // length n, values 1..m
  int m = 0;                // number of colors (max value used)

  static VertexColoring of(std::vector<int> colors);
  bool operator==(const VertexColoring& o) const {
    return colors == o.colors && m == o.m;
  }
};

struct EdgePartition {
  std::vector<int> class_of;  // per edge index, values 1..t
  int t = 0;

  // t == 0 deduces t as the max class used; classes may be empty
  static EdgePartition of(std::vector<int> class_of, int t = 0);
  bool operator==(const EdgePartition& o) const {
    return class_of == o.class_of && t == o.t;
  }
};

bool is_proper(const Hypergraph& h, const VertexColoring& c);

// connected components as sorted vertex sets, ordered by least vertex;
// isolated vertices appear as singletons
std::vector<std::vector<int>> components(const Hypergraph& h);

// sub-hypergraph with re-indexed vertices; vertex_of maps new index -> old
struct IndexedSub {
  Hypergraph h;
  std::vector<int> vertex_of;
};
// keeps the vertices in a and the edges entirely inside a
IndexedSub induced(const Hypergraph& h, const std::vector<int>& a);
// drops the vertices in a and every edge meeting a
IndexedSub remove_vertices(const Hypergraph& h, const std::vector<int>& a);

Hypergraph complete_hypergraph(int n, int r, long long edge_cap = 1 << 20);

std::string edge_str(const std::vector<int>& e);

}  // namespace chrom
