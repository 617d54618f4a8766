#include "chrom/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace chrom {

namespace {

// significant lines: comments stripped, blanks dropped
std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

int parse_int(const std::string& s, const char* what) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw input_error(std::string("expected an integer for ") + what +
                      ", got '" + s + "'");
  }
  if (used != s.size())
    throw input_error(std::string("trailing characters after ") + what +
                      " in '" + s + "'");
  return v;
}

}  // namespace

FileContents parse_text(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw input_error("empty hypergraph file");
  if (lines[0].size() != 2)
    throw input_error("header must be exactly 'r n'");
  const int r = parse_int(lines[0][0], "r");
  const int n = parse_int(lines[0][1], "n");

  std::vector<std::vector<int>> raw_edges;
  size_t i = 1;
  for (; i < lines.size(); ++i) {
    if (lines[i][0] == "colors" || lines[i][0] == "coloring") break;
    if (static_cast<int>(lines[i].size()) != r)
      throw input_error("edge line must have exactly r vertices");
    std::vector<int> e;
    for (const auto& tok : lines[i]) e.push_back(parse_int(tok, "a vertex"));
    raw_edges.push_back(std::move(e));
  }
  {
    auto sorted = raw_edges;
    for (auto& e : sorted) std::sort(e.begin(), e.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw input_error("duplicate edge in file");
  }

  FileContents out;
  out.h = Hypergraph::make(n, r, raw_edges);

  // classes arrive in file edge order; edges were re-sorted, so route each
  // class through its edge's normalized position
  std::vector<int> slot(raw_edges.size());
  for (size_t e = 0; e < raw_edges.size(); ++e) {
    auto key = raw_edges[e];
    std::sort(key.begin(), key.end());
    slot[e] = static_cast<int>(
        std::lower_bound(out.h.edges.begin(), out.h.edges.end(), key) -
        out.h.edges.begin());
  }

  while (i < lines.size()) {
    if (lines[i][0] == "colors") {
      if (out.classes) throw input_error("repeated colors block");
      if (lines[i].size() != 2)
        throw input_error("colors block header must be 'colors t'");
      const int t = parse_int(lines[i][1], "t");
      ++i;
      std::vector<int> cls(raw_edges.size());
      for (size_t e = 0; e < raw_edges.size(); ++e, ++i) {
        if (i >= lines.size() || lines[i].size() != 1)
          throw input_error("colors block needs one class per edge");
        cls[slot[e]] = parse_int(lines[i][0], "a class");
      }
      out.classes = EdgePartition::of(std::move(cls), t);
    } else if (lines[i][0] == "coloring") {
      if (out.coloring) throw input_error("repeated coloring block");
      if (lines[i].size() != 2)
        throw input_error("coloring block header must be 'coloring m'");
      const int m = parse_int(lines[i][1], "m");
      ++i;
      std::vector<int> col(n);
      for (int v = 0; v < n; ++v, ++i) {
        if (i >= static_cast<size_t>(lines.size()) || lines[i].size() != 1)
          throw input_error("coloring block needs one color per vertex");
        col[v] = parse_int(lines[i][0], "a color");
      }
      out.coloring = VertexColoring::of(std::move(col));
      if (out.coloring->m > m)
        throw input_error("coloring block uses more colors than declared");
      out.coloring->m = m;
    } else {
      throw input_error("unexpected line '" + lines[i][0] + "'");
    }
  }
  return out;
}

FileContents load_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

std::string serialize_text(const FileContents& f) {
  std::ostringstream out;
  out << f.h.r << ' ' << f.h.n << '\n';
  for (const auto& e : f.h.edges) {
    for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  if (f.classes) {
    out << "colors " << f.classes->t << '\n';
    for (int c : f.classes->class_of) out << c << '\n';
  }
  if (f.coloring) {
    out << "coloring " << f.coloring->m << '\n';
    for (int c : f.coloring->colors) out << c << '\n';
  }
  return out.str();
}

std::string witness_to_json(const MonoWitness& w) {
  nlohmann::json j;
  switch (w.kind) {
    case WitnessKind::Matching: j["kind"] = "matching"; break;
    case WitnessKind::Star: j["kind"] = "star"; break;
    case WitnessKind::Tree: j["kind"] = "tree"; break;
  }
  j["class"] = w.class_index;
  j["edges"] = w.edge_indices;
  if (w.kind == WitnessKind::Star) j["center"] = w.center;
  if (w.kind == WitnessKind::Tree) j["embedding"] = w.embedding;
  return j.dump();
}

MonoWitness witness_from_json(const std::string& text, const Hypergraph& h,
                              const EdgePartition& p, const Hypergraph* tree) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad witness json: ") + e.what());
  }
  MonoWitness w;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "matching")
      w.kind = WitnessKind::Matching;
    else if (kind == "star")
      w.kind = WitnessKind::Star;
    else if (kind == "tree")
      w.kind = WitnessKind::Tree;
    else
      throw input_error("unknown witness kind '" + kind + "'");
    w.class_index = j.at("class").get<int>();
    w.edge_indices = j.at("edges").get<std::vector<int>>();
    if (w.kind == WitnessKind::Star) w.center = j.at("center").get<int>();
    if (w.kind == WitnessKind::Tree)
      w.embedding = j.at("embedding").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad witness json: ") + e.what());
  }
  if (w.kind == WitnessKind::Tree) {
    if (!tree) throw input_error("tree witnesses need the tree to validate");
    validate_witness(h, p, w, *tree);
  } else {
    validate_witness(h, p, w);
  }
  return w;
}

}  // namespace chrom
