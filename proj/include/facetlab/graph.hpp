#pragma once

#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "facetlab/simplex.hpp"

namespace facetlab {

// Simple undirected graph on vertices 0 .. order-1 with sorted adjacency
// lists.
struct Graph {
  std::vector<std::vector<int>> adj;

  std::size_t order() const { return adj.size(); }

  std::size_t size() const {
    std::size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return twice / 2;
  }

  bool adjacent(int u, int v) const {
    const auto& nb = adj[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  void add_edge(int u, int v) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }

  void sort_adjacency() {
    for (auto& nb : adj) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
  }
};

namespace graphalg {

// Number of connected components among the vertices not flagged removed.
// The empty graph has zero components.
inline int components(const Graph& g, const std::vector<char>& removed) {
  std::vector<char> seen(g.order(), 0);
  int comps = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (removed[s] || seen[s]) continue;
    ++comps;
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.adj[static_cast<std::size_t>(u)]) {
        if (removed[static_cast<std::size_t>(v)] ||
            seen[static_cast<std::size_t>(v)])
          continue;
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
    }
  }
  return comps;
}

inline int components(const Graph& g) {
  return components(g, std::vector<char>(g.order(), 0));
}

inline bool is_connected(const Graph& g) { return components(g) <= 1; }

inline bool is_complete(const Graph& g) {
  std::size_t m = g.order();
  return g.size() == m * (m - 1) / 2;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adj[static_cast<std::size_t>(u)]) {
        if (color[static_cast<std::size_t>(v)] == -1) {
          color[static_cast<std::size_t>(v)] =
              1 - color[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (color[static_cast<std::size_t>(v)] ==
                   color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Two-coloring of a bipartite graph; vertices of color 0 and 1 per
// component, color 0 on each component's least vertex.
inline std::vector<int> bipartition(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adj[static_cast<std::size_t>(u)]) {
        if (color[static_cast<std::size_t>(v)] == -1) {
          color[static_cast<std::size_t>(v)] =
              1 - color[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (color[static_cast<std::size_t>(v)] ==
                   color[static_cast<std::size_t>(u)]) {
          throw InvalidParameter("graph is not bipartite");
        }
      }
    }
  }
  return color;
}

namespace detail {

// Unit-capacity max flow on a small digraph, BFS augmentation.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(static_cast<std::size_t>(n), -1) {}

  void add_edge(int u, int v, int cap) {
    edges_.push_back({v, head_[static_cast<std::size_t>(u)], cap});
    head_[static_cast<std::size_t>(u)] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({u, head_[static_cast<std::size_t>(v)], 0});
    head_[static_cast<std::size_t>(v)] = static_cast<int>(edges_.size()) - 1;
  }

  int run(int s, int t, int stop_at) {
    int flow = 0;
    while (flow < stop_at) {
      std::vector<int> via(head_.size(), -1);
      std::vector<char> seen(head_.size(), 0);
      std::queue<int> q;
      q.push(s);
      seen[static_cast<std::size_t>(s)] = 1;
      while (!q.empty() && !seen[static_cast<std::size_t>(t)]) {
        int u = q.front();
        q.pop();
        for (int e = head_[static_cast<std::size_t>(u)]; e != -1;
             e = edges_[static_cast<std::size_t>(e)].next) {
          const Edge& ed = edges_[static_cast<std::size_t>(e)];
          if (ed.cap <= 0 || seen[static_cast<std::size_t>(ed.to)]) continue;
          seen[static_cast<std::size_t>(ed.to)] = 1;
          via[static_cast<std::size_t>(ed.to)] = e;
          q.push(ed.to);
        }
      }
      if (!seen[static_cast<std::size_t>(t)]) break;
      for (int u = t; u != s;) {
        int e = via[static_cast<std::size_t>(u)];
        edges_[static_cast<std::size_t>(e)].cap -= 1;
        edges_[static_cast<std::size_t>(e ^ 1)].cap += 1;
        u = edges_[static_cast<std::size_t>(e ^ 1)].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Edge {
    int to;
    int next;
    int cap;
  };
  std::vector<int> head_;
  std::vector<Edge> edges_;
};

}  // namespace detail

// Minimum number of vertices separating non-adjacent s and t, by max flow
// on the vertex-split digraph: v -> v_in, v_out with a unit arc between
// them, and infinite arcs along edges.
inline int local_vertex_connectivity(const Graph& g, int s, int t) {
  int n = static_cast<int>(g.order());
  int inf = n + 1;
  detail::MaxFlow mf(2 * n);
  auto vin = [](int v) { return 2 * v; };
  auto vout = [](int v) { return 2 * v + 1; };
  for (int v = 0; v < n; ++v)
    mf.add_edge(vin(v), vout(v), (v == s || v == t) ? inf : 1);
  for (int u = 0; u < n; ++u)
    for (int v : g.adj[static_cast<std::size_t>(u)])
      mf.add_edge(vout(u), vin(v), inf);
  return mf.run(vout(s), vin(t), inf);
}

// Vertex connectivity with the clique convention: kappa(K_m) = m-1, and
// kappa = 0 for the empty and one-vertex graphs.  Otherwise the minimum of
// local connectivities over non-adjacent pairs.
inline int vertex_connectivity(const Graph& g) {
  int n = static_cast<int>(g.order());
  if (n <= 1) return 0;
  if (is_complete(g)) return n - 1;
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.adjacent(s, t))
        best = std::min(best, local_vertex_connectivity(g, s, t));
  return best;
}

}  // namespace graphalg

// Facet graph of a family of equal-dimensional simplices: vertices are the
// d-simplices, edges join pairs sharing a (d-1)-face, labeled by the shared
// face.  For d = 0 every pair shares the empty simplex, giving a clique.
struct FacetGraph {
  int d = 0;
  std::vector<Simplex> vertices;                       // lex sorted
  std::map<std::pair<int, int>, Simplex> edge_labels;  // keyed by i < j
  Graph graph;

  int index_of(const Simplex& s) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
    if (it == vertices.end() || *it != s) return -1;
    return static_cast<int>(it - vertices.begin());
  }
};

inline FacetGraph build_facet_graph(const std::vector<Simplex>& faces) {
  FacetGraph fg;
  fg.vertices = faces;
  std::sort(fg.vertices.begin(), fg.vertices.end());
  fg.vertices.erase(std::unique(fg.vertices.begin(), fg.vertices.end()),
                    fg.vertices.end());
  if (fg.vertices.empty()) return fg;
  fg.d = fg.vertices.front().dim();
  for (const Simplex& s : fg.vertices)
    if (s.dim() != fg.d)
      throw InvalidParameter("facet graph needs equal-dimensional faces");
  fg.graph.adj.resize(fg.vertices.size());
  for (std::size_t i = 0; i < fg.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < fg.vertices.size(); ++j) {
      Simplex shared = intersect(fg.vertices[i], fg.vertices[j]);
      if (shared.dim() == fg.d - 1) {
        fg.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
        fg.edge_labels[{static_cast<int>(i), static_cast<int>(j)}] = shared;
      }
    }
  }
  fg.graph.sort_adjacency();
  return fg;
}

inline int vertex_connectivity(const FacetGraph& fg) {
  return graphalg::vertex_connectivity(fg.graph);
}

// Components of the facet graph after deleting the given vertices.
inline int components_after_removal(const FacetGraph& fg,
                                    const std::vector<Simplex>& removed) {
  std::vector<char> gone(fg.graph.order(), 0);
  for (const Simplex& s : removed) {
    int i = fg.index_of(s);
    if (i >= 0) gone[static_cast<std::size_t>(i)] = 1;
  }
  return graphalg::components(fg.graph, gone);
}

// Deletes the given vertices plus every edge labeled by one of the given
// (d-1)-faces, then checks connectivity.  An empty remainder counts as
// connected.
inline bool connected_after_mixed_removal(
    const FacetGraph& fg, const std::vector<Simplex>& removed_vertices,
    const std::vector<Simplex>& removed_labels) {
  std::vector<char> gone(fg.graph.order(), 0);
  for (const Simplex& s : removed_vertices) {
    int i = fg.index_of(s);
    if (i >= 0) gone[static_cast<std::size_t>(i)] = 1;
  }
  std::set<Simplex> labels(removed_labels.begin(), removed_labels.end());
  Graph h;
  h.adj.resize(fg.graph.order());
  for (const auto& [e, label] : fg.edge_labels) {
    if (labels.count(label)) continue;
    if (gone[static_cast<std::size_t>(e.first)] ||
        gone[static_cast<std::size_t>(e.second)])
      continue;
    h.add_edge(e.first, e.second);
  }
  h.sort_adjacency();
  return graphalg::components(h, gone) <= 1;
}

// Johnson-style hypersimplex graph: vertices are the k-subsets of [n],
// edges join pairs at symmetric difference two.  Coincides with the facet
// graph of all (k-1)-faces of the full skeleton.
inline FacetGraph hypersimplex_graph(int n, int k) {
  if (k < 1 || k > n)
    throw InvalidParameter("hypersimplex graph needs 1 <= k <= n");
  FacetGraph fg;
  fg.d = k - 1;
  fg.vertices = all_simplices(n, k);
  fg.graph.adj.resize(fg.vertices.size());
  for (std::size_t i = 0; i < fg.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < fg.vertices.size(); ++j) {
      Simplex shared = intersect(fg.vertices[i], fg.vertices[j]);
      if (static_cast<int>(shared.size()) == k - 1) {
        fg.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
        fg.edge_labels[{static_cast<int>(i), static_cast<int>(j)}] = shared;
      }
    }
  }
  fg.graph.sort_adjacency();
  return fg;
}

}  // namespace facetlab
