// Command line front end: coloring, decomposition and lifting on hypergraph
// files, the monochromatic-copy finders and their brute-force oracles, the
// witness generators, small-instance enumeration, and the verification
// campaigns. Exit codes: 0 ok, 1 bad input, 2 broken invariant, 3 resource
// cap hit.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chrom/campaign.hpp"
#include "chrom/chi.hpp"
#include "chrom/enumerate.hpp"
#include "chrom/hypergraph.hpp"
#include "chrom/intersect.hpp"
#include "chrom/io.hpp"
#include "chrom/lift.hpp"
#include "chrom/oracle.hpp"
#include "chrom/ramsey.hpp"
#include "chrom/skeleton.hpp"
#include "json.hpp"

namespace {

using namespace chrom;
using nlohmann::json;

int default_jobs() {
  const char* env = std::getenv("CHROMABENCH_JOBS");
  if (env == nullptr) return 1;
  try {
    int j = std::stoi(env);
    if (j >= 1) return j;
  } catch (...) {
  }
  return 1;
}

struct Options {
  std::string input;
  std::string format = "text";
  std::string tree_file;
  std::string kind;
  std::uint64_t seed = 1;
  int jobs = default_jobs();
  long long cap = 0;
  double timeout_sec = 0.0;
  bool dedup = false;
  bool timing = false;
  int r = 3;
  int k = 2;
  int t = 2;
  int n = 5;
  int nmin = 5;
  int nmax = 9;
  int hosts = 50;
  int partitions = 10;
};

void add_io_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--input,-i", o.input, "hypergraph file");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

FileContents need_input(const Options& o) {
  if (o.input.empty()) throw input_error("no input file, pass --input");
  return load_text_file(o.input);
}

const EdgePartition& need_classes(const FileContents& f) {
  if (!f.classes.has_value())
    throw input_error("input file has no colors block");
  return *f.classes;
}

Hypergraph load_tree(const Options& o) {
  if (o.tree_file.empty()) throw input_error("no tree file, pass --tree");
  return load_text_file(o.tree_file).h;
}

WitnessKind parse_kind(const std::string& s) {
  if (s == "matching") return WitnessKind::Matching;
  if (s == "star") return WitnessKind::Star;
  if (s == "tree") return WitnessKind::Tree;
  throw input_error("unknown target kind '" + s + "'");
}

void emit(const Options& o, const std::string& text, const json& j) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string witness_text(const MonoWitness& w) {
  std::ostringstream os;
  switch (w.kind) {
    case WitnessKind::Matching: os << "kind matching\n"; break;
    case WitnessKind::Star: os << "kind star\n"; break;
    case WitnessKind::Tree: os << "kind tree\n"; break;
  }
  os << "class " << w.class_index << "\n";
  os << "edges";
  for (int e : w.edge_indices) os << ' ' << e;
  os << "\n";
  if (w.kind == WitnessKind::Star) os << "center " << w.center << "\n";
  if (w.kind == WitnessKind::Tree) {
    os << "embedding";
    for (int v : w.embedding) os << ' ' << v;
    os << "\n";
  }
  return os.str();
}

json file_json(const FileContents& f) {
  json j;
  j["r"] = f.h.r;
  j["n"] = f.h.n;
  j["edges"] = f.h.edges;
  if (f.classes.has_value()) j["classes"] = f.classes->class_of;
  if (f.coloring.has_value()) j["coloring"] = f.coloring->colors;
  return j;
}

int cmd_chi(const Options& o) {
  FileContents f = need_input(o);
  ChiResult c = chromatic_number(f.h);
  std::ostringstream os;
  os << "chi " << c.m << "\n";
  os << "coloring " << c.m << "\n";
  for (int v : c.witness.colors) os << v << "\n";
  emit(o, os.str(), json{{"chi", c.m}, {"coloring", c.witness.colors}});
  return 0;
}

int cmd_igraph(const Options& o) {
  FileContents f = need_input(o);
  Hypergraph ig = one_intersection_graph(f.h);
  FileContents out;
  out.h = ig;
  emit(o, serialize_text(out), file_json(out));
  return 0;
}

json part_json(const StructurePart& p, const std::vector<int>& orig) {
  json j;
  switch (p.kind) {
    case PartKind::B: j["kind"] = "book"; break;
    case PartKind::K: j["kind"] = "quad"; break;
    case PartKind::Trivial: j["kind"] = "trivial"; break;
  }
  j["vertices"] = p.vertices;
  std::vector<int> es;
  for (int e : p.edges) es.push_back(orig[e]);
  j["edges"] = es;
  if (p.kind == PartKind::B) j["base"] = {p.base.first, p.base.second};
  if (p.kind == PartKind::K)
    j["quad"] = {p.quad[0], p.quad[1], p.quad[2], p.quad[3]};
  return j;
}

void part_text(std::ostream& os, const StructurePart& p,
               const std::vector<int>& orig) {
  switch (p.kind) {
    case PartKind::B:
      os << "book base " << p.base.first << ' ' << p.base.second;
      break;
    case PartKind::K:
      os << "quad " << p.quad[0] << ' ' << p.quad[1] << ' ' << p.quad[2] << ' '
         << p.quad[3];
      break;
    case PartKind::Trivial: os << "trivial"; break;
  }
  os << " vertices";
  for (int v : p.vertices) os << ' ' << v;
  os << " edges";
  for (int e : p.edges) os << ' ' << orig[e];
  os << "\n";
}

int cmd_decompose(const Options& o) {
  FileContents f = need_input(o);
  std::ostringstream os;
  json j;
  if (f.classes.has_value()) {
    j["classes"] = json::array();
    for (int c = 1; c <= f.classes->t; ++c) {
      std::vector<std::vector<int>> edges;
      std::vector<int> orig;
      for (int e = 0; e < f.h.edge_count(); ++e)
        if (f.classes->class_of[e] == c) {
          edges.push_back(f.h.edges[e]);
          orig.push_back(e);
        }
      Hypergraph sub = Hypergraph::make(f.h.n, f.h.r, std::move(edges));
      StructureDecomposition d = structure_decompose(sub);
      os << "class " << c << " parts " << d.parts.size() << "\n";
      json jc;
      jc["class"] = c;
      jc["parts"] = json::array();
      for (const auto& p : d.parts) {
        part_text(os, p, orig);
        jc["parts"].push_back(part_json(p, orig));
      }
      j["classes"].push_back(jc);
    }
  } else {
    std::vector<int> orig;
    for (int e = 0; e < f.h.edge_count(); ++e) orig.push_back(e);
    StructureDecomposition d = structure_decompose(f.h);
    os << "parts " << d.parts.size() << "\n";
    j["parts"] = json::array();
    for (const auto& p : d.parts) {
      part_text(os, p, orig);
      j["parts"].push_back(part_json(p, orig));
    }
  }
  emit(o, os.str(), j);
  return 0;
}

int cmd_skeleton(const Options& o) {
  FileContents f = need_input(o);
  const EdgePartition& p = need_classes(f);
  Skeleton s = build_skeleton(f.h, p);
  bool covers = skeleton_covers(s, f.h, p);
  std::ostringstream os;
  os << "skeleton " << s.n << ' ' << s.t << "\n";
  json je = json::array();
  for (const auto& e : s.sedges) {
    const char* prov = e.prov == Provenance::BBase ? "base" : "pair";
    os << "edge " << e.u << ' ' << e.v << " m" << e.mi << ' ' << prov
       << " part " << e.part << "\n";
    je.push_back({{"u", e.u},
                  {"v", e.v},
                  {"class", e.mi},
                  {"prov", prov},
                  {"part", e.part}});
  }
  os << "bad " << s.initial_bad << "\n";
  os << "switches " << s.switches << "\n";
  os << "covers " << (covers ? 1 : 0) << "\n";
  emit(o, os.str(),
       json{{"n", s.n},
            {"t", s.t},
            {"edges", je},
            {"initial_bad", s.initial_bad},
            {"switches", s.switches},
            {"covers", covers}});
  return 0;
}

int cmd_lift(const Options& o) {
  FileContents f = need_input(o);
  VertexColoring c = color_via_intersection(f.h);
  if (!is_proper(f.h, c)) throw invariant_error("lifted coloring not proper");
  std::ostringstream os;
  os << "coloring " << c.m << "\n";
  for (int v : c.colors) os << v << "\n";
  emit(o, os.str(), json{{"colors", c.m}, {"coloring", c.colors}});
  return 0;
}

int cmd_find(const Options& o, const std::string& which) {
  FileContents f = need_input(o);
  const EdgePartition& p = need_classes(f);
  MonoWitness w;
  if (which == "matching")
    w = find_mono_matching(f.h, p, o.k);
  else if (which == "matching2")
    w = find_mono_matching_2col(f.h, p, o.k);
  else if (which == "star")
    w = find_mono_star(f.h, p, o.k);
  else
    w = find_mono_tree(f.h, p, load_tree(o));
  emit(o, witness_text(w), json::parse(witness_to_json(w)));
  return 0;
}

int emit_file(const Options& o, const FileContents& f) {
  emit(o, serialize_text(f), file_json(f));
  return 0;
}

int cmd_witness(const Options& o, const std::string& which) {
  FileContents f;
  if (which == "matching-extremal") {
    GeneratedHost g = gen_matching_extremal(o.r, o.k, o.t);
    f.h = g.host;
    f.classes = g.classes;
  } else if (which == "star") {
    f.h = gen_star_witness(o.r, o.k);
  } else if (which == "two-factor") {
    GeneratedHost g = gen_two_factor_split(o.k);
    f.h = g.host;
    f.classes = g.classes;
  } else {
    if (o.kind.empty())
      throw input_error("no target kind, pass --kind matching|star");
    LowerWitness lw;
    if (o.kind == "matching")
      lw = assemble_lower_witness_matching(o.r, o.k, o.t);
    else if (o.kind == "star")
      lw = assemble_lower_witness_star(o.r, o.k, o.t);
    else
      throw input_error("unknown lower witness kind '" + o.kind + "'");
    f.h = lw.host;
    f.classes = lw.classes;
    json j = file_json(f);
    j["claimed"] = lw.claimed;
    emit(o, "# claimed " + std::to_string(lw.claimed) + "\n" +
                serialize_text(f),
         j);
    return 0;
  }
  return emit_file(o, f);
}

int cmd_oracle_mono(const Options& o) {
  FileContents f = need_input(o);
  const EdgePartition& p = need_classes(f);
  if (o.kind.empty())
    throw input_error("no target kind, pass --kind matching|star|tree");
  WitnessKind kind = parse_kind(o.kind);
  std::optional<Hypergraph> tree;
  if (kind == WitnessKind::Tree) tree = load_tree(o);
  OracleResult r =
      oracle_has_mono(f.h, p, kind, o.k, tree ? &*tree : nullptr);
  json j;
  j["found"] = r.found;
  std::ostringstream os;
  os << "found " << (r.found ? 1 : 0) << "\n";
  if (r.found) {
    os << witness_text(*r.witness);
    j["witness"] = json::parse(witness_to_json(*r.witness));
  }
  emit(o, os.str(), j);
  return 0;
}

int cmd_oracle_avoid(const Options& o) {
  FileContents f = need_input(o);
  if (o.kind.empty())
    throw input_error("no target kind, pass --kind matching|star|tree");
  WitnessKind kind = parse_kind(o.kind);
  std::optional<Hypergraph> tree;
  if (kind == WitnessKind::Tree) tree = load_tree(o);
  AvoidResult r = oracle_exists_avoiding_partition(
      f.h, kind, o.k, o.t, tree ? &*tree : nullptr, o.timeout_sec);
  json j;
  j["exists"] = r.exists;
  std::ostringstream os;
  os << "exists " << (r.exists ? 1 : 0) << "\n";
  if (r.exists) {
    FileContents out;
    out.h = f.h;
    out.classes = r.partition;
    os << serialize_text(out);
    j["classes"] = r.partition->class_of;
  }
  emit(o, os.str(), j);
  return 0;
}

int report_exit(const Options& o, const CampaignReport& r) {
  std::cout << report_to_json(r, o.timing);
  return r.failures.empty() ? 0 : 2;
}

int cmd_verify_thm6(const Options& o) {
  int n_max = o.cap > 0 ? static_cast<int>(o.cap) : 5;
  return report_exit(o, verify_theorem6_exhaustive(n_max, o.jobs));
}

int cmd_verify_bounds(const Options& o) {
  BoundKind kind;
  if (o.kind == "greedy")
    kind = BoundKind::MatchingGreedy;
  else if (o.kind == "matching2")
    kind = BoundKind::MatchingTwoColor;
  else if (o.kind == "star")
    kind = BoundKind::Star;
  else if (o.kind == "tree")
    kind = BoundKind::Tree;
  else
    throw input_error("unknown bound kind '" + o.kind +
                      "', expected greedy|matching2|star|tree");
  CorpusSpec corpus;
  corpus.n_min = o.nmin;
  corpus.n_max = o.nmax;
  corpus.hosts = o.hosts;
  corpus.partitions = o.partitions;
  corpus.seed = o.seed;
  return report_exit(o, verify_bound(kind, o.r, o.k, o.t, corpus, o.jobs));
}

int cmd_enum(const Options& o) {
  long long count = 0;
  const long long cap = o.cap;
  long long visited = enumerate_hypergraphs(
      o.r, o.n,
      [&count, cap](const Hypergraph&) {
        ++count;
        return cap == 0 || count < cap;
      },
      {}, o.dedup);
  emit(o, "count " + std::to_string(visited) + "\n",
       json{{"r", o.r}, {"n", o.n}, {"dedup", o.dedup}, {"count", visited}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for chromatic bounds on uniform hypergraphs"};
  app.require_subcommand(1);
  Options o;

  auto* chi = app.add_subcommand("chi", "exact chromatic number");
  add_io_flags(chi, o);
  auto* igraph = app.add_subcommand("igraph", "1-intersection graph");
  add_io_flags(igraph, o);
  auto* decompose =
      app.add_subcommand("decompose", "book/quadruple component structure");
  add_io_flags(decompose, o);
  auto* skeleton =
      app.add_subcommand("skeleton", "covering matchings with repair");
  add_io_flags(skeleton, o);
  auto* lift =
      app.add_subcommand("lift", "color through the 1-intersection graph");
  add_io_flags(lift, o);

  auto* find = app.add_subcommand("find", "monochromatic copy finders");
  find->require_subcommand(1);
  for (const char* which : {"matching", "matching2", "star", "tree"}) {
    auto* sub = find->add_subcommand(which);
    add_io_flags(sub, o);
    sub->add_option("-k", o.k, "copies / edge count");
    if (std::string(which) == "tree")
      sub->add_option("--tree", o.tree_file, "target tree file");
  }

  auto* witness = app.add_subcommand("witness", "witness generators");
  witness->require_subcommand(1);
  for (const char* which :
       {"matching-extremal", "star", "two-factor", "lower"}) {
    auto* sub = witness->add_subcommand(which);
    add_io_flags(sub, o);
    sub->add_option("-r", o.r, "uniformity");
    sub->add_option("-k", o.k, "target size");
    sub->add_option("-t", o.t, "edge classes");
    if (std::string(which) == "lower")
      sub->add_option("--kind", o.kind, "matching|star");
  }

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->require_subcommand(1);
  auto* mono = oracle->add_subcommand("mono", "monochromatic copy present?");
  add_io_flags(mono, o);
  mono->add_option("--kind", o.kind, "matching|star|tree");
  mono->add_option("-k", o.k, "copies / edge count");
  mono->add_option("--tree", o.tree_file, "target tree file");
  auto* avoid = oracle->add_subcommand("avoid", "avoiding partition search");
  add_io_flags(avoid, o);
  avoid->add_option("--kind", o.kind, "matching|star|tree");
  avoid->add_option("-k", o.k, "copies / edge count");
  avoid->add_option("-t", o.t, "edge classes");
  avoid->add_option("--tree", o.tree_file, "target tree file");
  avoid->add_option("--timeout-sec", o.timeout_sec, "give up after this long");

  auto* verify = app.add_subcommand("verify", "verification campaigns");
  verify->require_subcommand(1);
  auto* thm6 = verify->add_subcommand("thm6", "exhaustive lift check");
  add_io_flags(thm6, o);
  thm6->add_option("--cap", o.cap, "largest vertex count (default 5)");
  thm6->add_option("--jobs", o.jobs, "worker threads");
  thm6->add_flag("--timing", o.timing, "include wall time in the report");
  auto* bounds = verify->add_subcommand("bounds", "finder vs oracle corpus");
  add_io_flags(bounds, o);
  bounds->add_option("--kind", o.kind, "greedy|matching2|star|tree");
  bounds->add_option("-r", o.r, "uniformity");
  bounds->add_option("-k", o.k, "target size");
  bounds->add_option("-t", o.t, "edge classes");
  bounds->add_option("--seed", o.seed, "corpus seed");
  bounds->add_option("--jobs", o.jobs, "worker threads");
  bounds->add_option("--cap", o.hosts, "hosts per corpus");
  bounds->add_option("--nmin", o.nmin, "smallest host size");
  bounds->add_option("--nmax", o.nmax, "largest host size");
  bounds->add_option("--partitions", o.partitions, "partitions per host");
  bounds->add_flag("--timing", o.timing, "include wall time in the report");

  auto* en = app.add_subcommand("enum", "enumerate edge sets");
  add_io_flags(en, o);
  en->add_option("-r", o.r, "uniformity");
  en->add_option("-n", o.n, "vertex count");
  en->add_flag("--dedup", o.dedup, "collapse by fingerprint");
  en->add_option("--cap", o.cap, "stop after this many systems");

  CLI11_PARSE(app, argc, argv);

  try {
    if (chi->parsed()) return cmd_chi(o);
    if (igraph->parsed()) return cmd_igraph(o);
    if (decompose->parsed()) return cmd_decompose(o);
    if (skeleton->parsed()) return cmd_skeleton(o);
    if (lift->parsed()) return cmd_lift(o);
    if (find->parsed())
      return cmd_find(o, find->get_subcommands().at(0)->get_name());
    if (witness->parsed())
      return cmd_witness(o, witness->get_subcommands().at(0)->get_name());
    if (oracle->parsed()) {
      if (mono->parsed()) return cmd_oracle_mono(o);
      return cmd_oracle_avoid(o);
    }
    if (verify->parsed()) {
      if (thm6->parsed()) return cmd_verify_thm6(o);
      return cmd_verify_bounds(o);
    }
    if (en->parsed()) return cmd_enum(o);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const invariant_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
