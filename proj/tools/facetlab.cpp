#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "facetlab/circuits.hpp"
#include "facetlab/collapse.hpp"
#include "facetlab/duality.hpp"
#include "facetlab/generators.hpp"
#include "facetlab/graph.hpp"
#include "facetlab/hypertree.hpp"
#include "facetlab/json_io.hpp"
#include "facetlab/linalg.hpp"
#include "facetlab/verify.hpp"

namespace {

using facetlab::Chain;
using facetlab::Complex;
using facetlab::Json;
using facetlab::Simplex;

std::string slurp(const std::string& path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream f(path);
  if (!f)
    throw facetlab::InvalidParameter("cannot read file \"" + path + "\"");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "facetlab: cannot write \"" << out_path << "\"\n";
    return 1;
  }
  f << text << "\n";
  return 0;
}

Simplex parse_vertex_list(const std::string& csv) {
  std::vector<int> verts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      verts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw facetlab::InvalidParameter("cannot parse vertex list \"" + csv +
                                       "\"");
    }
  }
  return Simplex(verts);
}

facetlab::FaceDoc load_faces(const std::string& path) {
  return facetlab::faces_from_json(facetlab::parse_json_text(slurp(path)));
}

struct GenRequest {
  std::string kind;
  int n = 0;
  int d = 0;
  int k = 0;
  std::uint64_t p = 2;
};

Json run_gen(const GenRequest& r) {
  using namespace facetlab;
  if (r.kind == "complete")
    return complex_to_json(Complex::complete(r.n, r.d), r.p);
  if (r.kind == "simplex-boundary")
    return complex_to_json(Complex::complete(r.n, r.n - 2), r.p);
  if (r.kind == "cross-polytope")
    return chain_to_json(cross_polytope_cycle(r.d, r.p), 2 * (r.d + 1));
  if (r.kind == "torus")
    return chain_to_json(torus_cycle(r.k, r.p), r.k * r.k);
  if (r.kind == "star-tree") {
    Hypertree t = star_hypertree(r.n, r.d, r.p);
    return complex_to_json(Complex::closure(t.simplices, r.n), r.p);
  }
  if (r.kind == "perturbed-tree") {
    Hypertree t = perturbed_hypertree(r.n, r.d, r.p);
    return complex_to_json(Complex::closure(t.simplices, r.n), r.p);
  }
  if (r.kind == "star-cut") {
    std::vector<int> core(static_cast<std::size_t>(r.d));
    for (int i = 0; i < r.d; ++i) core[static_cast<std::size_t>(i)] = i + 1;
    return chain_to_json(star_hypercut(Simplex(core), r.n, r.p), r.n);
  }
  if (r.kind == "hypersimplex")
    return complex_to_json(Complex::complete(r.n, r.k - 1), r.p);
  if (r.kind == "pentagon-cells")
    return cell_poset_to_json(pentagon_cells(r.p));
  throw facetlab::InvalidParameter(
      "unknown generator \"" + r.kind +
      "\"; expected one of complete, simplex-boundary, cross-polytope, "
      "torus, star-tree, perturbed-tree, star-cut, hypersimplex, "
      "pentagon-cells");
}

struct GraphRequest {
  std::string file;
  bool connectivity_only = false;
  std::vector<std::string> remove;
  std::vector<std::string> remove_labels;
};

Json run_graph(const GraphRequest& r) {
  using namespace facetlab;
  FaceDoc doc = load_faces(r.file);
  FacetGraph fg = build_facet_graph(doc.faces);

  std::vector<char> gone(fg.graph.order(), 0);
  for (const std::string& csv : r.remove) {
    int i = fg.index_of(parse_vertex_list(csv));
    if (i < 0)
      throw InvalidParameter("face \"" + csv + "\" is not a graph vertex");
    gone[static_cast<std::size_t>(i)] = 1;
  }
  std::set<Simplex> dropped;
  for (const std::string& csv : r.remove_labels)
    dropped.insert(parse_vertex_list(csv));

  std::vector<int> keep(fg.graph.order(), -1);
  int next = 0;
  for (std::size_t i = 0; i < fg.graph.order(); ++i)
    if (!gone[i]) keep[i] = next++;
  Graph h;
  h.adj.resize(static_cast<std::size_t>(next));
  for (const auto& [edge, label] : fg.edge_labels) {
    if (dropped.count(label)) continue;
    int a = keep[static_cast<std::size_t>(edge.first)];
    int b = keep[static_cast<std::size_t>(edge.second)];
    if (a < 0 || b < 0) continue;
    h.add_edge(a, b);
  }
  h.sort_adjacency();

  Json j;
  j["kappa"] = graphalg::vertex_connectivity(h);
  j["components"] = graphalg::components(h);
  j["order"] = h.order();
  j["size"] = h.size();
  return j;
}

int run_verify(const facetlab::CheckSpec& spec, bool as_json,
               const std::string& out_path) {
  facetlab::CheckReport rep = facetlab::run_check(spec);
  int rc = emit(facetlab::render_report(rep, as_json), out_path);
  if (rc != 0) return rc;
  return rep.pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "facetlab: chains, cycles, hypertrees, and facet graphs over GF(p)"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("-o,--output", out_path,
                 "write output to this file instead of stdout")
      ->expected(1);

  GenRequest gen;
  CLI::App* genCmd =
      app.add_subcommand("gen", "generate a complex, chain, or cell poset");
  genCmd->add_option("kind", gen.kind,
                     "complete | simplex-boundary | cross-polytope | torus | "
                     "star-tree | perturbed-tree | star-cut | hypersimplex | "
                     "pentagon-cells")
      ->required();
  genCmd->add_option("--n", gen.n, "number of vertices")->default_val(5);
  genCmd->add_option("--d", gen.d, "facet dimension")->default_val(2);
  genCmd->add_option("--k", gen.k, "grid width (torus) or subset size "
                                   "(hypersimplex)")
      ->default_val(4);
  genCmd->add_option("--p", gen.p, "prime modulus")->default_val(2);

  std::string bettiFile;
  int bettiDim = 0;
  std::uint64_t bettiP = 0;
  CLI::App* bettiCmd = app.add_subcommand(
      "betti", "reduced Betti number of the closure of a face document");
  bettiCmd->add_option("file", bettiFile, "complex or chain JSON document")
      ->required();
  bettiCmd->add_option("--dim", bettiDim, "homology dimension")->required();
  CLI::Option* bettiPOpt =
      bettiCmd->add_option("--p", bettiP, "prime modulus override");

  std::string rankFile;
  int rankDim = 0;
  std::uint64_t rankP = 0;
  CLI::App* rankCmd = app.add_subcommand(
      "rank", "rank of the boundary matrix on the faces of one dimension");
  rankCmd->add_option("file", rankFile, "complex or chain JSON document")
      ->required();
  rankCmd->add_option("--dim", rankDim, "face dimension")->required();
  CLI::Option* rankPOpt =
      rankCmd->add_option("--p", rankP, "prime modulus override");

  GraphRequest graphReq;
  CLI::App* graphCmd = app.add_subcommand(
      "graph", "facet graph statistics, optionally after removals");
  graphCmd->add_option("file", graphReq.file, "complex or chain JSON document")
      ->required();
  graphCmd->add_flag("--connectivity", graphReq.connectivity_only,
                     "print only the vertex connectivity");
  graphCmd->add_option("--remove", graphReq.remove,
                       "faces to delete, each as comma-separated vertices");
  graphCmd->add_option("--remove-labels", graphReq.remove_labels,
                       "ridge labels whose edges are deleted");

  std::string collapseFile;
  int collapseD = 0;
  CLI::App* collapseCmd = app.add_subcommand(
      "collapse", "collapse certificate for a small face set");
  collapseCmd
      ->add_option("file", collapseFile, "complex or chain JSON document")
      ->required();
  collapseCmd->add_option("--d", collapseD, "ambient dimension bound")
      ->required();

  std::string dualFile;
  CLI::App* dualCmd =
      app.add_subcommand("dual", "combinatorial dual of a chain document");
  dualCmd->add_option("file", dualFile, "chain JSON document")->required();

  std::string circuitsFile;
  std::uint64_t circuitsP = 0;
  CLI::App* circuitsCmd = app.add_subcommand(
      "circuits", "circuits of the boundary matroid on the given faces");
  circuitsCmd
      ->add_option("file", circuitsFile, "complex or chain JSON document")
      ->required();
  CLI::Option* circuitsPOpt =
      circuitsCmd->add_option("--p", circuitsP, "prime modulus override");

  int treeN = 5;
  int treeD = 2;
  std::uint64_t treeP = 2;
  std::uint64_t treeSeed = 0;
  std::string treeKind = "greedy";
  CLI::App* treeCmd =
      app.add_subcommand("hypertree", "generate a hypertree complex");
  treeCmd->add_option("--n", treeN, "number of vertices")->required();
  treeCmd->add_option("--d", treeD, "facet dimension")->required();
  treeCmd->add_option("--p", treeP, "prime modulus")->default_val(2);
  treeCmd->add_option("--kind", treeKind, "star | greedy | perturbed | random")
      ->default_val("greedy");
  treeCmd->add_option("--seed", treeSeed, "seed for the random kind")
      ->default_val(0);

  facetlab::CheckSpec spec;
  int verifyN = 0;
  int verifyD = 0;
  std::uint64_t verifyP = 0;
  bool verifyJson = false;
  bool verifyList = false;
  CLI::App* verifyCmd = app.add_subcommand(
      "verify", "run a registered connectivity check at desk scale");
  verifyCmd->add_option("theorem", spec.theorem_id,
                        "check id; see --list for the registry");
  CLI::Option* verifyNOpt =
      verifyCmd->add_option("--n", verifyN, "restrict to one vertex count");
  CLI::Option* verifyDOpt =
      verifyCmd->add_option("--d", verifyD, "restrict to one dimension");
  CLI::Option* verifyPOpt =
      verifyCmd->add_option("--p", verifyP, "restrict to one modulus");
  verifyCmd->add_option("--seeds", spec.seeds,
                        "random instances per grid point");
  verifyCmd->add_flag("--exhaustive", spec.exhaustive,
                      "deepen the exhaustive sweeps");
  verifyCmd->add_flag("--json", verifyJson, "machine-readable report");
  verifyCmd->add_flag("--list", verifyList, "list registered checks");

  for (CLI::App* sub : {genCmd, bettiCmd, rankCmd, graphCmd, collapseCmd,
                        dualCmd, circuitsCmd, treeCmd, verifyCmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*genCmd) return emit(run_gen(gen).dump(), out_path);

    if (*bettiCmd) {
      facetlab::FaceDoc doc = load_faces(bettiFile);
      std::uint64_t p = bettiPOpt->count() > 0 ? bettiP : doc.p;
      Complex k = Complex::closure(doc.faces, doc.n);
      return emit(std::to_string(facetlab::betti_reduced(k, bettiDim, p)),
                  out_path);
    }

    if (*rankCmd) {
      facetlab::FaceDoc doc = load_faces(rankFile);
      std::uint64_t p = rankPOpt->count() > 0 ? rankP : doc.p;
      Complex k = Complex::closure(doc.faces, doc.n);
      int r = facetlab::rank(
          facetlab::boundary_matrix_restricted(k.faces(rankDim), p));
      return emit(std::to_string(r), out_path);
    }

    if (*graphCmd) {
      Json j = run_graph(graphReq);
      if (graphReq.connectivity_only)
        return emit(j["kappa"].dump(), out_path);
      return emit(j.dump(), out_path);
    }

    if (*collapseCmd) {
      facetlab::FaceDoc doc = load_faces(collapseFile);
      return emit(
          facetlab::collapse_to_json(
              facetlab::collapse_small_set(collapseD, doc.faces))
              .dump(),
          out_path);
    }

    if (*dualCmd) {
      facetlab::ChainDoc doc = facetlab::chain_from_json(
          facetlab::parse_json_text(slurp(dualFile)));
      return emit(
          facetlab::chain_to_json(facetlab::dual(doc.chain, doc.n), doc.n)
              .dump(),
          out_path);
    }

    if (*circuitsCmd) {
      facetlab::FaceDoc doc = load_faces(circuitsFile);
      std::uint64_t p = circuitsPOpt->count() > 0 ? circuitsP : doc.p;
      Json j;
      Json list = Json::array();
      for (const Chain& z : facetlab::enumerate_circuits(doc.faces, p))
        list.push_back(facetlab::chain_to_json(z, doc.n));
      j["circuits"] = std::move(list);
      return emit(j.dump(), out_path);
    }

    if (*treeCmd) {
      facetlab::Hypertree t;
      if (treeKind == "star")
        t = facetlab::star_hypertree(treeN, treeD, treeP);
      else if (treeKind == "greedy")
        t = facetlab::hypertree_greedy(treeN, treeD, treeP);
      else if (treeKind == "perturbed")
        t = facetlab::perturbed_hypertree(treeN, treeD, treeP);
      else if (treeKind == "random")
        t = facetlab::hypertree_random(treeN, treeD, treeP, treeSeed);
      else
        throw facetlab::InvalidParameter(
            "unknown hypertree kind \"" + treeKind +
            "\"; expected star, greedy, perturbed, or random");
      return emit(facetlab::complex_to_json(
                      Complex::closure(t.simplices, treeN), treeP)
                      .dump(),
                  out_path);
    }

    if (*verifyCmd) {
      if (verifyList) {
        std::string lines;
        for (const std::string& id : facetlab::registered_checks()) {
          if (!lines.empty()) lines += "\n";
          lines += id;
        }
        return emit(lines, out_path);
      }
      if (spec.theorem_id.empty())
        throw facetlab::InvalidParameter(
            "verify needs a check id; run verify --list for the registry");
      if (verifyNOpt->count() > 0) spec.n = verifyN;
      if (verifyDOpt->count() > 0) spec.d = verifyD;
      if (verifyPOpt->count() > 0) spec.p = verifyP;
      return run_verify(spec, verifyJson, out_path);
    }
  } catch (const facetlab::Error& e) {
    std::cerr << "facetlab: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "facetlab: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
