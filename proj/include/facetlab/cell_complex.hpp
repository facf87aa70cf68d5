#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "facetlab/complex.hpp"
#include "facetlab/graph.hpp"
#include "facetlab/linalg.hpp"

namespace facetlab {

// GF(p)-chain over cell ids; values are nonzero and reduced mod p.
using CellChain = std::map<std::string, Scalar>;

// A graded poset of cells with a boundary operator, the combinatorial
// abstraction shared by simplicial complexes and convex polytope face
// lattices.  The minimal element of dimension -1 is implicit unless the
// input supplies one; a 0-cell's boundary defaults to the empty cell with
// coefficient 1.  Structure is immutable after build(); lattice, boundary
// composition, and simplicity are not enforced here but reported by
// validate_axioms.
class CellPoset {
 public:
  struct Cell {
    std::string id;
    int dim = 0;
  };

  using CoverList = std::vector<std::pair<std::string, std::string>>;
  using BoundaryInput =
      std::map<std::string, std::vector<std::pair<std::string, long long>>>;

  CellPoset() = default;

  static CellPoset build(std::uint64_t p, const std::vector<Cell>& cells,
                         const CoverList& covers,
                         const BoundaryInput& boundaries) {
    CellPoset P;
    P.p_ = p;
    Fp fp(p);

    P.cells_ = cells;
    std::sort(P.cells_.begin(), P.cells_.end(),
              [](const Cell& a, const Cell& b) {
                return a.dim != b.dim ? a.dim < b.dim : a.id < b.id;
              });
    int empties = 0;
    for (std::size_t i = 0; i < P.cells_.size(); ++i) {
      const Cell& c = P.cells_[i];
      if (c.id.empty()) throw InvalidParameter("cell id must be nonempty");
      if (c.dim < -1)
        throw InvalidParameter("cell " + c.id + " has dimension below -1");
      if (c.dim == -1) ++empties;
      if (!P.index_.emplace(c.id, static_cast<int>(i)).second)
        throw InvalidParameter("duplicate cell id " + c.id);
    }
    if (empties > 1)
      throw InvalidParameter("more than one cell of dimension -1");
    if (empties == 1) P.explicit_empty_ = 0;  // sorts first

    P.subcells_.resize(P.cells_.size());
    for (const auto& [low, high] : covers) {
      int l = P.index_of(low);
      int h = P.index_of(high);
      if (P.cells_[static_cast<std::size_t>(h)].dim !=
          P.cells_[static_cast<std::size_t>(l)].dim + 1)
        throw InvalidParameter("cover " + low + " < " + high +
                               " does not raise dimension by exactly 1");
      P.subcells_[static_cast<std::size_t>(h)].push_back(l);
    }
    // The formal minimal element sits below every 0-cell.
    if (P.explicit_empty_)
      for (std::size_t i = 0; i < P.cells_.size(); ++i)
        if (P.cells_[i].dim == 0) P.subcells_[i].push_back(*P.explicit_empty_);
    for (auto& subs : P.subcells_) {
      std::sort(subs.begin(), subs.end());
      subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    }

    P.below_.resize(P.cells_.size());
    for (std::size_t i = 0; i < P.cells_.size(); ++i)
      for (int s : P.subcells_[i]) {
        P.below_[i].insert(s);
        P.below_[i].insert(P.below_[static_cast<std::size_t>(s)].begin(),
                           P.below_[static_cast<std::size_t>(s)].end());
      }

    P.boundary_.resize(P.cells_.size());
    P.empty_coeff_.assign(P.cells_.size(), 1);
    for (const auto& [id, terms] : boundaries) {
      int c = P.index_of(id);
      int d = P.cells_[static_cast<std::size_t>(c)].dim;
      if (d < 0)
        throw InvalidParameter("the empty cell has no boundary");
      std::set<int> seen;
      for (const auto& [tid, coeff] : terms) {
        int t = P.index_of(tid);
        if (P.cells_[static_cast<std::size_t>(t)].dim != d - 1)
          throw InvalidParameter("boundary of " + id + " touches " + tid +
                                 " of the wrong dimension");
        if (!seen.insert(t).second)
          throw InvalidParameter("boundary of " + id + " repeats " + tid);
        Scalar v = fp.from_int(coeff);
        if (d == 0)
          P.empty_coeff_[static_cast<std::size_t>(c)] = v;
        else if (v != 0)
          P.boundary_[static_cast<std::size_t>(c)][t] = v;
      }
    }
    return P;
  }

  std::uint64_t p() const { return p_; }
  int size() const { return static_cast<int>(cells_.size()); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(int i) const {
    return cells_[static_cast<std::size_t>(i)];
  }
  std::optional<int> explicit_empty() const { return explicit_empty_; }

  int index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InvalidParameter("unknown cell id " + id);
    return it->second;
  }

  const std::vector<int>& subcells(int i) const {
    return subcells_[static_cast<std::size_t>(i)];
  }

  // Boundary terms over subcell indices; meaningful for dimension >= 1.
  const std::map<int, Scalar>& boundary_terms(int i) const {
    return boundary_[static_cast<std::size_t>(i)];
  }

  // Coefficient of the empty cell in the boundary of a 0-cell.
  Scalar empty_coefficient(int i) const {
    return empty_coeff_[static_cast<std::size_t>(i)];
  }

  // low <= high in the order; the minimal element is below everything.
  bool dominates(int high, int low) const {
    if (high == low) return true;
    if (explicit_empty_ && low == *explicit_empty_) return true;
    return below_[static_cast<std::size_t>(high)].count(low) != 0;
  }

  // The closed cell of i: every cell it dominates, itself included,
  // ascending by index.
  std::vector<int> closed_cell(int i) const {
    std::vector<int> out(below_[static_cast<std::size_t>(i)].begin(),
                         below_[static_cast<std::size_t>(i)].end());
    out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> cells_of_dim(int d) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i].dim == d) out.push_back(static_cast<int>(i));
    return out;
  }

  int dim() const {
    int d = -1;
    for (const Cell& c : cells_) d = std::max(d, c.dim);
    return d;
  }

 private:
  std::uint64_t p_ = 2;
  std::vector<Cell> cells_;  // sorted by (dim, id)
  std::map<std::string, int> index_;
  std::optional<int> explicit_empty_;
  std::vector<std::vector<int>> subcells_;
  std::vector<std::set<int>> below_;
  std::vector<std::map<int, Scalar>> boundary_;
  std::vector<Scalar> empty_coeff_;
};

struct AxiomCheck {
  bool pass = true;
  std::string witness;
};

struct AxiomReport {
  AxiomCheck a1, a2, a3;
  bool all_pass() const { return a1.pass && a2.pass && a3.pass; }
};

namespace detail {

inline std::string id_list(const CellPoset& P, const std::vector<int>& idx) {
  std::string s;
  for (int i : idx) {
    if (!s.empty()) s += ", ";
    s += P.cell(i).id;
  }
  return s;
}

// Dimension of the kernel of the boundary map restricted to the given
// equal-dimensional cells.  Rows span every possible target, so chains that
// leak outside a closed cell still fail to be cycles.
inline int cell_kernel_dim(const CellPoset& P, const std::vector<int>& cols) {
  if (cols.empty()) return 0;
  Fp fp(P.p());
  int d = P.cell(cols.front()).dim;
  if (d == 0) {
    GaussianEliminator elim(1, fp);
    int deps = 0;
    for (int v : cols) {
      SparseCol col;
      if (P.empty_coefficient(v) != 0)
        col.emplace_back(0, P.empty_coefficient(v));
      if (elim.push(std::move(col))) ++deps;
    }
    return deps;
  }
  std::map<int, int> row_of;
  for (int t : P.cells_of_dim(d - 1))
    row_of.emplace(t, static_cast<int>(row_of.size()));
  GaussianEliminator elim(row_of.size(), fp);
  int deps = 0;
  for (int c : cols) {
    SparseCol col;
    for (const auto& [t, v] : P.boundary_terms(c))
      col.emplace_back(row_of.at(t), v);
    std::sort(col.begin(), col.end());
    if (elim.push(col)) ++deps;
  }
  return deps;
}

}  // namespace detail

// Checks the three cell axioms and reports the first witness of each
// failure: the closed cell of every cell must be a lattice, boundaries must
// live on facets and compose to zero, and the boundary of every cell must
// be its only cycle up to scale.
inline AxiomReport validate_axioms(const CellPoset& P) {
  AxiomReport rep;
  Fp fp(P.p());

  for (int c = 0; c < P.size() && rep.a1.pass; ++c) {
    std::vector<int> cc = P.closed_cell(c);
    for (std::size_t a = 0; a < cc.size() && rep.a1.pass; ++a) {
      for (std::size_t b = a + 1; b < cc.size() && rep.a1.pass; ++b) {
        std::vector<int> uppers, lowers;
        for (int z : cc) {
          if (P.dominates(z, cc[a]) && P.dominates(z, cc[b]))
            uppers.push_back(z);
          if (P.dominates(cc[a], z) && P.dominates(cc[b], z))
            lowers.push_back(z);
        }
        std::vector<int> minimal, maximal;
        for (int z : uppers) {
          bool least = true;
          for (int w : uppers)
            if (w != z && P.dominates(z, w)) least = false;
          if (least) minimal.push_back(z);
        }
        for (int z : lowers) {
          bool greatest = true;
          for (int w : lowers)
            if (w != z && P.dominates(w, z)) greatest = false;
          if (greatest) maximal.push_back(z);
        }
        if (minimal.size() != 1) {
          rep.a1.pass = false;
          rep.a1.witness = "cells " + P.cell(cc[a]).id + " and " +
                           P.cell(cc[b]).id + " in closed cell " +
                           P.cell(c).id + " have minimal upper bounds " +
                           detail::id_list(P, minimal);
        } else if (maximal.size() > 1) {  // empty means the implicit minimum
          rep.a1.pass = false;
          rep.a1.witness = "cells " + P.cell(cc[a]).id + " and " +
                           P.cell(cc[b]).id + " in closed cell " +
                           P.cell(c).id + " have maximal lower bounds " +
                           detail::id_list(P, maximal);
        }
      }
    }
  }

  for (int c = 0; c < P.size() && rep.a2.pass; ++c) {
    int d = P.cell(c).dim;
    if (d == 0 && P.empty_coefficient(c) == 0) {
      rep.a2.pass = false;
      rep.a2.witness = "boundary of vertex cell " + P.cell(c).id + " is zero";
      break;
    }
    if (d < 1) continue;
    const std::vector<int>& facets = P.subcells(c);
    for (const auto& [t, v] : P.boundary_terms(c)) {
      if (!std::binary_search(facets.begin(), facets.end(), t)) {
        rep.a2.pass = false;
        rep.a2.witness = "boundary of " + P.cell(c).id + " touches " +
                         P.cell(t).id + " which is not a facet";
        break;
      }
    }
    if (!rep.a2.pass) break;
    std::map<int, Scalar> acc;
    Scalar acc_empty = 0;
    for (const auto& [t, v] : P.boundary_terms(c)) {
      if (P.cell(t).dim == 0) {
        acc_empty = fp.add(acc_empty, fp.mul(v, P.empty_coefficient(t)));
        continue;
      }
      for (const auto& [u, w] : P.boundary_terms(t)) {
        Scalar& slot = acc[u];
        slot = fp.add(slot, fp.mul(v, w));
        if (slot == 0) acc.erase(u);
      }
    }
    if (!acc.empty() || acc_empty != 0) {
      rep.a2.pass = false;
      std::string at = acc.empty() ? std::string("the empty cell")
                                   : P.cell(acc.begin()->first).id;
      rep.a2.witness = "boundary of boundary of " + P.cell(c).id +
                       " is nonzero at " + at;
    }
  }

  for (int c = 0; c < P.size() && rep.a3.pass; ++c) {
    int d = P.cell(c).dim;
    if (d < 1) continue;
    if (P.boundary_terms(c).empty()) {
      rep.a3.pass = false;
      rep.a3.witness = "boundary of " + P.cell(c).id + " is zero";
      break;
    }
    std::vector<int> facet_dim_cells;
    for (int z : P.closed_cell(c))
      if (P.cell(z).dim == d - 1) facet_dim_cells.push_back(z);
    int kdim = detail::cell_kernel_dim(P, facet_dim_cells);
    if (kdim != 1) {
      rep.a3.pass = false;
      rep.a3.witness = "closed cell " + P.cell(c).id + " carries a cycle " +
                       "space of dimension " + std::to_string(kdim) +
                       " in dimension " + std::to_string(d - 1);
    }
  }

  return rep;
}

// A set of cells is compatible when one closed cell contains them all.
inline bool is_compatible(const CellPoset& P,
                          const std::vector<std::string>& ids) {
  if (ids.empty()) return true;
  std::vector<int> idx;
  for (const std::string& id : ids) idx.push_back(P.index_of(id));
  for (int c = 0; c < P.size(); ++c) {
    bool all = true;
    for (int i : idx)
      if (!P.dominates(c, i)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

// Facet adjacency graph of a family of equal-dimensional cells: vertices
// are the cells, edges join two cells sharing a codimension-1 subcell, and
// edge labels list every shared subcell.  For 0-cells the shared subcell is
// the minimal element, making the graph complete.
struct CellFacetGraph {
  int d = -1;
  std::vector<int> vertices;  // poset indices, ascending
  Graph graph;
  std::map<std::pair<int, int>, std::vector<int>> edge_labels;
};

inline CellFacetGraph cell_facet_graph(const CellPoset& P,
                                       const std::vector<std::string>& ids) {
  CellFacetGraph out;
  for (const std::string& id : ids) out.vertices.push_back(P.index_of(id));
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                     out.vertices.end());
  if (out.vertices.empty()) return out;
  out.d = P.cell(out.vertices.front()).dim;
  for (int v : out.vertices)
    if (P.cell(v).dim != out.d)
      throw InvalidParameter("facet graph cells mix dimensions");
  out.graph.adj.resize(out.vertices.size());
  std::vector<int> lower = P.cells_of_dim(out.d - 1);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j) {
      std::vector<int> shared;
      for (int z : lower)
        if (P.dominates(out.vertices[i], z) && P.dominates(out.vertices[j], z))
          shared.push_back(z);
      if (shared.empty() && out.d != 0) continue;
      out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
      out.edge_labels[{static_cast<int>(i), static_cast<int>(j)}] =
          std::move(shared);
    }
  }
  out.graph.sort_adjacency();
  return out;
}

// Boundary of an equal-dimensional cell chain.  The boundary of a 0-chain
// lives on the minimal element, keyed by the explicit empty cell's id when
// there is one and by "" otherwise.
inline CellChain cell_boundary(const CellPoset& P, const CellChain& z) {
  if (z.empty()) return {};
  Fp fp(P.p());
  int d = P.cell(P.index_of(z.begin()->first)).dim;
  if (d < 0) throw InvalidParameter("the empty cell has no boundary");
  CellChain out;
  auto add = [&](const std::string& key, Scalar v) {
    Scalar& slot = out[key];
    slot = fp.add(slot, v);
    if (slot == 0) out.erase(key);
  };
  std::string empty_key =
      P.explicit_empty() ? P.cell(*P.explicit_empty()).id : std::string();
  for (const auto& [id, c] : z) {
    if (c == 0 || c >= P.p())
      throw InvalidParameter("coefficient of " + id + " not reduced mod p");
    int i = P.index_of(id);
    if (P.cell(i).dim != d)
      throw InvalidParameter("chain mixes cell dimensions");
    if (d == 0) {
      add(empty_key, fp.mul(c, P.empty_coefficient(i)));
      continue;
    }
    for (const auto& [t, w] : P.boundary_terms(i))
      add(P.cell(t).id, fp.mul(c, w));
  }
  return out;
}

// Cycle diagnostics for a cell chain: whether it is a cycle, whether its
// support carries a one-dimensional cycle space, whether the support is
// compatible, and whether it meets the minimal size d+2 expected of
// nontrivial compatible cycles.
struct CellCycleReport {
  bool is_cycle = false;
  bool is_simple = false;
  bool compatible = false;
  bool min_size_ok = false;
};

inline CellCycleReport cell_cycle_check(const CellPoset& P,
                                        const CellChain& z) {
  CellCycleReport rep;
  if (z.empty()) {
    rep.is_cycle = true;
    rep.compatible = true;
    return rep;
  }
  rep.is_cycle = cell_boundary(P, z).empty();
  std::vector<int> support;
  std::vector<std::string> ids;
  for (const auto& [id, c] : z) {
    support.push_back(P.index_of(id));
    ids.push_back(id);
  }
  std::sort(support.begin(), support.end());
  int d = P.cell(support.front()).dim;
  rep.is_simple = rep.is_cycle && detail::cell_kernel_dim(P, support) == 1;
  rep.compatible = is_compatible(P, ids);
  rep.min_size_ok = static_cast<int>(z.size()) >= d + 2;
  return rep;
}

// Every face of a simplicial complex as a cell, with the simplicial
// boundary signs; 0-cells keep the implicit empty cell.
inline CellPoset simplicial_import(const Complex& k, std::uint64_t p) {
  std::vector<CellPoset::Cell> cells;
  CellPoset::CoverList covers;
  CellPoset::BoundaryInput boundaries;
  for (int d = 0; d <= k.dim(); ++d) {
    for (const Simplex& f : k.faces(d)) {
      cells.push_back({f.str(), d});
      if (d == 0) continue;
      auto& terms = boundaries[f.str()];
      for (std::size_t i = 0; i < f.size(); ++i) {
        covers.emplace_back(f.facet(i).str(), f.str());
        terms.emplace_back(f.facet(i).str(), i % 2 == 0 ? 1 : -1);
      }
    }
  }
  return CellPoset::build(p, cells, covers, boundaries);
}

namespace detail {

inline std::string vertex_id(int v) { return std::to_string(v); }

inline std::string edge_id(int a, int b) {
  if (a > b) std::swap(a, b);
  return std::to_string(a) + "." + std::to_string(b);
}

inline std::string vertex_set_id(std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  std::string s;
  for (int v : verts) {
    if (!s.empty()) s += ".";
    s += std::to_string(v);
  }
  return s;
}

// Signed edge terms of a polygonal cell along a closed vertex walk: an edge
// traversed from its smaller to its larger endpoint counts +1.
inline std::vector<std::pair<std::string, long long>> walk_boundary(
    const std::vector<int>& walk) {
  std::vector<std::pair<std::string, long long>> out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    int a = walk[i];
    int b = walk[(i + 1) % walk.size()];
    out.emplace_back(edge_id(a, b), a < b ? 1 : -1);
  }
  return out;
}

// Registers a polygonal 2-cell: its id, covers down to its edges, and its
// walk boundary.  Edges and vertices are added on first use.
inline void add_polygon_cell(const std::vector<int>& walk,
                             std::vector<CellPoset::Cell>& cells,
                             CellPoset::CoverList& covers,
                             CellPoset::BoundaryInput& boundaries,
                             std::set<std::string>& present) {
  std::string id = vertex_set_id(walk);
  cells.push_back({id, 2});
  boundaries[id] = walk_boundary(walk);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    int a = walk[i];
    int b = walk[(i + 1) % walk.size()];
    std::string e = edge_id(a, b);
    covers.emplace_back(e, id);
    if (present.insert(e).second) {
      cells.push_back({e, 1});
      boundaries[e] = {{vertex_id(std::max(a, b)), 1},
                       {vertex_id(std::min(a, b)), -1}};
      covers.emplace_back(vertex_id(a), e);
      covers.emplace_back(vertex_id(b), e);
    }
    if (present.insert(vertex_id(a)).second)
      cells.push_back({vertex_id(a), 0});
  }
}

// Adds a solid top cell over a spherical shell of facet cells: the facets'
// boundary columns must have a one-dimensional kernel, and the kernel
// vector, scaled so its least cell carries coefficient 1, becomes the top
// cell's boundary.
inline CellPoset solid_from_shell(std::uint64_t p,
                                  std::vector<CellPoset::Cell> cells,
                                  CellPoset::CoverList covers,
                                  CellPoset::BoundaryInput boundaries,
                                  const std::string& top_id, int top_dim,
                                  const std::vector<std::string>& facet_ids) {
  CellPoset shell = CellPoset::build(p, cells, covers, boundaries);
  std::vector<int> cols;
  for (const std::string& id : facet_ids) cols.push_back(shell.index_of(id));
  std::sort(cols.begin(), cols.end());

  Fp fp(p);
  std::map<int, int> row_of;
  for (int c : cols)
    for (const auto& [t, v] : shell.boundary_terms(c))
      row_of.emplace(t, static_cast<int>(row_of.size()));
  GaussianEliminator elim(row_of.size(), fp);
  std::vector<std::pair<int, Scalar>> cycle;  // column position, coefficient
  for (std::size_t j = 0; j < cols.size(); ++j) {
    SparseCol col;
    for (const auto& [t, v] : shell.boundary_terms(cols[j]))
      col.emplace_back(row_of.at(t), v);
    std::sort(col.begin(), col.end());
    auto dep = elim.push(col);
    if (!dep) continue;
    if (!cycle.empty())
      throw InternalInconsistency("shell of " + top_id +
                                  " bounds more than one cycle");
    cycle.assign(dep->begin(), dep->end());
  }
  if (cycle.empty() || cycle.front().first != 0)
    throw InternalInconsistency("shell of " + top_id +
                                " has no cycle through its least facet");
  Scalar unit = fp.inv(cycle.front().second);

  cells.push_back({top_id, top_dim});
  auto& terms = boundaries[top_id];
  for (const auto& [pos, c] : cycle) {
    const std::string& fid =
        shell.cell(cols[static_cast<std::size_t>(pos)]).id;
    covers.emplace_back(fid, top_id);
    terms.emplace_back(fid, static_cast<long long>(fp.mul(c, unit)));
  }
  return CellPoset::build(p, cells, covers, boundaries);
}

}  // namespace detail

// Face poset of a convex k-gon: one 2-cell, k edges, k vertices.
inline CellPoset polygon_cells(int k, std::uint64_t p) {
  if (k < 3) throw InvalidParameter("polygon needs at least 3 vertices");
  std::vector<CellPoset::Cell> cells;
  CellPoset::CoverList covers;
  CellPoset::BoundaryInput boundaries;
  std::set<std::string> present;
  std::vector<int> walk(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) walk[static_cast<std::size_t>(i)] = i + 1;
  detail::add_polygon_cell(walk, cells, covers, boundaries, present);
  return CellPoset::build(p, cells, covers, boundaries);
}

// Face poset of the solid cube on vertices 1..8 (binary coordinates in
// little-endian order), squares oriented by a kernel solve.
inline CellPoset cube_cells(std::uint64_t p) {
  std::vector<CellPoset::Cell> cells;
  CellPoset::CoverList covers;
  CellPoset::BoundaryInput boundaries;
  std::set<std::string> present;
  const std::vector<std::vector<int>> walks = {
      {1, 2, 4, 3}, {5, 6, 8, 7}, {1, 2, 6, 5},
      {3, 4, 8, 7}, {1, 3, 7, 5}, {2, 4, 8, 6}};
  std::vector<std::string> facet_ids;
  for (const auto& w : walks) {
    detail::add_polygon_cell(w, cells, covers, boundaries, present);
    facet_ids.push_back(detail::vertex_set_id(w));
  }
  return detail::solid_from_shell(p, std::move(cells), std::move(covers),
                                  std::move(boundaries),
                                  "1.2.3.4.5.6.7.8", 3, facet_ids);
}

// Face poset of the solid triangular prism on vertices 1..6.
inline CellPoset prism_cells(std::uint64_t p) {
  std::vector<CellPoset::Cell> cells;
  CellPoset::CoverList covers;
  CellPoset::BoundaryInput boundaries;
  std::set<std::string> present;
  const std::vector<std::vector<int>> walks = {
      {1, 2, 3}, {4, 5, 6}, {1, 2, 5, 4}, {2, 3, 6, 5}, {1, 3, 6, 4}};
  std::vector<std::string> facet_ids;
  for (const auto& w : walks) {
    detail::add_polygon_cell(w, cells, covers, boundaries, present);
    facet_ids.push_back(detail::vertex_set_id(w));
  }
  return detail::solid_from_shell(p, std::move(cells), std::move(covers),
                                  std::move(boundaries), "1.2.3.4.5.6", 3,
                                  facet_ids);
}

// A pentagon and the three triangles on its chords from vertex 1.  All
// four 2-cells are maximal, so no closed cell contains them together; their
// alternating sum is a simple 2-cycle whose facet graph is only
// 2-connected.
inline CellPoset pentagon_cells(std::uint64_t p) {
  std::vector<CellPoset::Cell> cells;
  CellPoset::CoverList covers;
  CellPoset::BoundaryInput boundaries;
  std::set<std::string> present;
  const std::vector<std::vector<int>> walks = {
      {1, 2, 3, 4, 5}, {1, 2, 3}, {1, 3, 4}, {1, 4, 5}};
  for (const auto& w : walks)
    detail::add_polygon_cell(w, cells, covers, boundaries, present);
  return CellPoset::build(p, cells, covers, boundaries);
}

// Removes the open faces and everything above them; subfaces survive, so
// the result is again downward closed.
inline Complex open_face_removal(const Complex& b,
                                 const std::vector<Simplex>& open_faces) {
  for (const Simplex& f : open_faces)
    if (!b.contains(f))
      throw InvalidParameter("open face " + f.str() +
                             " is not a face of the complex");
  std::vector<Simplex> kept;
  for (const Simplex& g : b.all_faces()) {
    bool removed = false;
    for (const Simplex& f : open_faces)
      if (g.contains(f)) {
        removed = true;
        break;
      }
    if (!removed) kept.push_back(g);
  }
  return Complex::from_faces(kept, b.n());
}

struct MixedConnectivityReport {
  long long sets_checked = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

namespace detail {

inline std::string face_list(const std::vector<Simplex>& faces) {
  if (faces.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) s += ", ";
    s += faces[i].str();
  }
  return s + "}";
}

template <typename Fn>
void for_each_face_subset(const std::vector<Simplex>& faces, int max_size,
                          std::vector<Simplex>& cur, std::size_t start,
                          Fn&& fn) {
  fn(cur);
  if (static_cast<int>(cur.size()) == max_size) return;
  for (std::size_t i = start; i < faces.size(); ++i) {
    cur.push_back(faces[i]);
    for_each_face_subset(faces, max_size, cur, i + 1, fn);
    cur.pop_back();
  }
}

inline long long subset_budget(std::size_t m, int max_size) {
  long long total = 0;
  long long binom = 1;
  for (int k = 0; k <= max_size; ++k) {
    total += binom;
    if (total > 3'000'000) return total;
    binom = binom * (static_cast<long long>(m) - k) / (k + 1);
  }
  return total;
}

inline void check_removal(const Complex& b, int r, std::uint64_t p,
                          const std::vector<Simplex>& f,
                          MixedConnectivityReport& rep) {
  Complex rest = open_face_removal(b, f);
  for (int i = 0; i <= r; ++i) {
    int betti = betti_reduced(rest, i, p);
    if (betti != 0) {
      rep.violations.push_back("removing " + face_list(f) +
                               " leaves reduced homology of dimension " +
                               std::to_string(betti) + " at index " +
                               std::to_string(i));
      return;
    }
  }
  if (rest.face_count(r) == 0)
    rep.violations.push_back("removing " + face_list(f) + " empties the " +
                             std::to_string(r) + "-skeleton");
}

}  // namespace detail

// Exhaustively removes every set of at most d-r open faces from b and
// checks that reduced homology vanishes in dimensions 0..r and that the
// r-skeleton stays nonempty.
inline MixedConnectivityReport mixed_connectivity_check(const Complex& b,
                                                        int d, int r,
                                                        std::uint64_t p) {
  if (b.dim() != d)
    throw InvalidParameter("complex dimension does not match d");
  if (r < 0 || r > d - 1) throw InvalidParameter("need 0 <= r <= d-1");
  std::vector<Simplex> faces = b.all_faces();
  if (detail::subset_budget(faces.size(), d - r) > 3'000'000)
    throw InstanceTooLarge("too many removal sets to enumerate");
  MixedConnectivityReport rep;
  std::vector<Simplex> cur;
  detail::for_each_face_subset(faces, d - r, cur, 0,
                               [&](const std::vector<Simplex>& f) {
                                 ++rep.sets_checked;
                                 detail::check_removal(b, r, p, f, rep);
                               });
  return rep;
}

// Sampled variant of the exhaustive removal check.
inline MixedConnectivityReport mixed_connectivity_sample(
    const Complex& b, int d, int r, std::uint64_t p, int samples,
    std::uint64_t seed) {
  if (b.dim() != d)
    throw InvalidParameter("complex dimension does not match d");
  if (r < 0 || r > d - 1) throw InvalidParameter("need 0 <= r <= d-1");
  std::vector<Simplex> faces = b.all_faces();
  std::mt19937_64 rng(seed);
  MixedConnectivityReport rep;
  for (int s = 0; s < samples; ++s) {
    std::size_t size = rng() % (static_cast<std::size_t>(d - r) + 1);
    size = std::min(size, faces.size());
    std::vector<Simplex> pool = faces;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Simplex> f(pool.begin(),
                           pool.begin() + static_cast<long>(size));
    ++rep.sets_checked;
    detail::check_removal(b, r, p, f, rep);
  }
  return rep;
}

// For the boundary of the (d+1)-simplex, which is its own dual, removing
// the upper closure of F and taking homology in dimension r must agree
// with the homology of the closure of the complementary faces in dimension
// d-r-1.  Checked instance by instance over every F of size at most d-r.
inline MixedConnectivityReport alexander_equivalence_check(int d, int r,
                                                           std::uint64_t p) {
  if (d < 1) throw InvalidParameter("need d >= 1");
  if (r < 0 || r > d - 1) throw InvalidParameter("need 0 <= r <= d-1");
  int n = d + 2;
  Complex b = Complex::complete(n, d);
  std::vector<Simplex> faces = b.all_faces();
  if (detail::subset_budget(faces.size(), d - r) > 3'000'000)
    throw InstanceTooLarge("too many removal sets to enumerate");
  MixedConnectivityReport rep;
  std::vector<Simplex> cur;
  detail::for_each_face_subset(
      faces, d - r, cur, 0, [&](const std::vector<Simplex>& f) {
        ++rep.sets_checked;
        int lhs = betti_reduced(open_face_removal(b, f), r, p);
        std::vector<Simplex> duals;
        for (const Simplex& s : f) duals.push_back(complement(s, n));
        int rhs = betti_reduced(Complex::closure(duals, n), d - r - 1, p);
        if (lhs != rhs)
          rep.violations.push_back(
              "removing " + detail::face_list(f) + " gives homology " +
              std::to_string(lhs) + " but the complementary closure gives " +
              std::to_string(rhs));
      });
  return rep;
}

}  // namespace facetlab
