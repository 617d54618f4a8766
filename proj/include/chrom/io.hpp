// Text and JSON formats.  A hypergraph file is `r n` followed by one edge
// per line (ascending vertex indices), then optional blocks: `colors t` with
// one class per edge in edge order, and `coloring m` with one color per
// vertex.  `#` starts a comment.  Serialization is canonical: parsing its
// own output reproduces the bytes.
#pragma once

#include <optional>
#include <string>

#include "chrom/hypergraph.hpp"
#include "chrom/ramsey.hpp"

namespace chrom {

struct FileContents {
  Hypergraph h;
  std::optional<EdgePartition> classes;
  std::optional<VertexColoring> coloring;
};

FileContents parse_text(const std::string& text);
FileContents load_text_file(const std::string& path);
std::string serialize_text(const FileContents& f);

// {"kind": "matching"|"star"|"tree", "class": c, "edges": [...]} plus
// "center" for stars and "embedding" for trees
std::string witness_to_json(const MonoWitness& w);
// parses and re-validates against the host; trees need the tree
MonoWitness witness_from_json(const std::string& text, const Hypergraph& h,
                              const EdgePartition& p,
                              const Hypergraph* tree = nullptr);

}  // namespace chrom
