#include <catch2/catch_amalgamated.hpp>

#include "facetlab/generators.hpp"
#include "facetlab/graph.hpp"
#include "facetlab/linalg.hpp"
#include "helpers.hpp"

using namespace facetlab;

namespace {

// Oracle: minimum vertex cut by exhaustive subset search.
int brute_kappa(const Graph& g) {
  int n = static_cast<int>(g.order());
  if (n <= 1) return 0;
  if (graphalg::is_complete(g)) return n - 1;
  for (int size = 0; size <= n - 2; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::function<bool(int, int)> rec = [&](int start, int left) -> bool {
      if (left == 0) {
        std::vector<char> removed(static_cast<std::size_t>(n), 0);
        for (int v : pick) removed[static_cast<std::size_t>(v)] = 1;
        return graphalg::components(g, removed) >= 2;
      }
      for (int v = start; v <= n - left; ++v) {
        pick[static_cast<std::size_t>(size - left)] = v;
        if (rec(v + 1, left - 1)) return true;
      }
      return false;
    };
    if (rec(0, size)) return size;
  }
  return n - 1;
}

Graph cycle_graph(int n) {
  Graph g;
  g.adj.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  g.sort_adjacency();
  return g;
}

}  // namespace

TEST_CASE("vertex connectivity of reference graphs", "[graph]") {
  REQUIRE(graphalg::vertex_connectivity(Graph{}) == 0);

  Graph one;
  one.adj.resize(1);
  REQUIRE(graphalg::vertex_connectivity(one) == 0);

  Graph k4;
  k4.adj.resize(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  k4.sort_adjacency();
  REQUIRE(graphalg::vertex_connectivity(k4) == 3);

  REQUIRE(graphalg::vertex_connectivity(cycle_graph(4)) == 2);
  REQUIRE(graphalg::vertex_connectivity(cycle_graph(7)) == 2);

  Graph path;
  path.adj.resize(4);
  for (int i = 0; i + 1 < 4; ++i) path.add_edge(i, i + 1);
  path.sort_adjacency();
  REQUIRE(graphalg::vertex_connectivity(path) == 1);

  Graph two_parts;
  two_parts.adj.resize(6);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      two_parts.add_edge(i, j);
      two_parts.add_edge(i + 3, j + 3);
    }
  two_parts.sort_adjacency();
  REQUIRE(graphalg::vertex_connectivity(two_parts) == 0);

  Graph k33;
  k33.adj.resize(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
  k33.sort_adjacency();
  REQUIRE(graphalg::vertex_connectivity(k33) == 3);
}

TEST_CASE("max-flow connectivity agrees with exhaustive cuts",
          "[graph][property]") {
  std::mt19937_64 rng(1912);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    Graph g;
    g.adj.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 100 < 55) g.add_edge(i, j);
    g.sort_adjacency();
    REQUIRE(graphalg::vertex_connectivity(g) == brute_kappa(g));
  }
}

TEST_CASE("facet graph of the tetrahedron boundary", "[graph]") {
  FacetGraph fg = build_facet_graph(all_faces_of_dim(4, 2));
  REQUIRE(fg.graph.order() == 4);
  REQUIRE(fg.graph.size() == 6);  // K4: every two triangles share an edge
  REQUIRE(vertex_connectivity(fg) == 3);
  auto label = fg.edge_labels.at({fg.index_of(Simplex({1, 2, 3})),
                                  fg.index_of(Simplex({1, 2, 4}))});
  REQUIRE(label == Simplex({1, 2}));
}

TEST_CASE("facet graph of a quadrilateral", "[graph]") {
  std::vector<Simplex> edges = {Simplex({1, 2}), Simplex({2, 3}),
                                Simplex({3, 4}), Simplex({1, 4})};
  FacetGraph fg = build_facet_graph(edges);
  REQUIRE(fg.graph.size() == 4);
  REQUIRE(vertex_connectivity(fg) == 2);
  REQUIRE(components_after_removal(fg, {Simplex({1, 2}), Simplex({3, 4})}) ==
          2);
  REQUIRE(components_after_removal(fg, {}) == 1);
  REQUIRE(components_after_removal(fg, edges) == 0);
}

TEST_CASE("mixed removal deletes labeled edges", "[graph]") {
  FacetGraph fg = build_facet_graph(all_faces_of_dim(4, 2));
  // One vertex plus one edge label keeps a simple 2-cycle connected.
  REQUIRE(connected_after_mixed_removal(fg, {Simplex({1, 2, 3})},
                                        {Simplex({1, 4})}));
  // Removing every label incident to a vertex isolates it.
  REQUIRE_FALSE(connected_after_mixed_removal(
      fg, {}, {Simplex({1, 2}), Simplex({1, 3}), Simplex({2, 3})}));
  // Deleting everything counts as connected by convention.
  REQUIRE(connected_after_mixed_removal(fg, all_faces_of_dim(4, 2), {}));
}

TEST_CASE("hypersimplex graph matches the facet graph construction",
          "[graph]") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 3}}) {
    FacetGraph a = hypersimplex_graph(n, k);
    FacetGraph b = build_facet_graph(all_faces_of_dim(n, k - 1));
    REQUIRE(a.vertices == b.vertices);
    REQUIRE(a.graph.adj == b.graph.adj);
  }
  // Octahedron: the line graph of K4.
  FacetGraph oct = hypersimplex_graph(4, 2);
  REQUIRE(oct.graph.order() == 6);
  for (const auto& nb : oct.graph.adj) REQUIRE(nb.size() == 4);
  REQUIRE(vertex_connectivity(oct) == 4);
  REQUIRE(vertex_connectivity(hypersimplex_graph(5, 2)) == 6);
  REQUIRE(vertex_connectivity(hypersimplex_graph(5, 1)) == 4);  // K5
}

TEST_CASE("cross-polytope cycles generate cube facet graphs", "[generators]") {
  for (int d = 1; d <= 3; ++d) {
    Chain z = cross_polytope_cycle(d, 3);
    REQUIRE(z.support_size() == (1u << (d + 1)));
    REQUIRE(is_simple_cycle(z));
    REQUIRE(z.terms().begin()->second == 1);
    FacetGraph fg = build_facet_graph(z.support());
    for (const auto& nb : fg.graph.adj)
      REQUIRE(nb.size() == static_cast<std::size_t>(d) + 1);
    REQUIRE(graphalg::is_bipartite(fg.graph));
    REQUIRE(vertex_connectivity(fg) == d + 1);
  }
}

TEST_CASE("octahedron bipartition class removal shatters the facet graph",
          "[generators]") {
  Chain z = cross_polytope_cycle(2, 3);
  FacetGraph fg = build_facet_graph(z.support());
  std::vector<int> color = graphalg::bipartition(fg.graph);
  std::vector<Simplex> clazz;
  for (std::size_t i = 0; i < fg.vertices.size(); ++i)
    if (color[i] == 0) clazz.push_back(fg.vertices[i]);
  REQUIRE(clazz.size() == 4);
  REQUIRE(components_after_removal(fg, clazz) == 4);
}

TEST_CASE("torus triangulation carries a fundamental cycle", "[generators]") {
  Chain z = torus_cycle(4, 5);
  REQUIRE(z.support_size() == 32);
  REQUIRE(is_simple_cycle(z));
  FacetGraph fg = build_facet_graph(z.support());
  REQUIRE(graphalg::is_connected(fg.graph));
  REQUIRE(graphalg::is_bipartite(fg.graph));
  for (const auto& nb : fg.graph.adj) REQUIRE(nb.size() == 3);
  REQUIRE(vertex_connectivity(fg) == 3);

  Complex k = Complex::closure(z.support(), 16);
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    REQUIRE(betti_reduced(k, 0, p) == 0);
    REQUIRE(betti_reduced(k, 1, p) == 2);
    REQUIRE(betti_reduced(k, 2, p) == 1);
  }

  REQUIRE_THROWS_AS(torus_cycle(5, 3), InvalidParameter);
  REQUIRE_THROWS_AS(torus_cycle(2, 3), InvalidParameter);
}

TEST_CASE("simplex boundary cycles across dimensions", "[generators]") {
  for (int d = 1; d <= 4; ++d) {
    std::vector<int> verts;
    for (int i = 1; i <= d + 1; ++i) verts.push_back(i + 1);
    Chain z = simplex_boundary_cycle(Simplex(verts), 3);
    REQUIRE(z.dim() == d - 1);
    REQUIRE(z.support_size() == static_cast<std::size_t>(d) + 1);
    REQUIRE(is_simple_cycle(z));
  }
  REQUIRE_THROWS_AS(simplex_boundary_cycle(Simplex({3}), 3), InvalidParameter);
}

TEST_CASE("random simple cycles are seed deterministic", "[generators]") {
  Chain a = random_simple_cycle(7, 2, 3, 12345);
  Chain b = random_simple_cycle(7, 2, 3, 12345);
  REQUIRE(a == b);
  Chain c = random_simple_cycle(7, 2, 3, 12346);
  REQUIRE(is_simple_cycle(c));
}
