#pragma once

#include <random>

#include "facetlab/hypertree.hpp"

namespace facetlab {

// Full d-skeleton of the simplex on n vertices.
inline Complex complete_complex(int n, int d) { return Complex::complete(n, d); }

// The boundary of a single simplex as a chain: a simple (dim-1)-cycle.
inline Chain simplex_boundary_cycle(const Simplex& sigma, std::uint64_t p) {
  if (sigma.dim() < 1)
    throw InvalidParameter("boundary cycle needs a simplex of dimension >= 1");
  Chain top(sigma.dim(), p);
  top.set_coeff(sigma, 1);
  return boundary(top);
}

namespace detail {

// Unique cycle carried by a face set whose cycle space is one-dimensional,
// normalized so the lexicographically least face has coefficient 1.
inline Chain unique_cycle_on(const std::vector<Simplex>& faces,
                             std::uint64_t p, const char* what) {
  SparseMatrix m = boundary_matrix_restricted(faces, p);
  SubspaceBasis basis = kernel_basis(m);
  if (basis.dim != 1 || basis.vectors[0].support_size() != m.cols())
    throw InternalInconsistency(std::string(what) +
                                " does not carry a unique full-support cycle");
  Chain z = basis.vectors[0];
  Fp fp(p);
  z.scale(fp.inv(z.terms().begin()->second));
  return z;
}

}  // namespace detail

// Boundary of the (d+1)-dimensional cross-polytope on vertices
// {1, ..., 2d+2}, antipodal pairs (2i-1, 2i): the facets pick one vertex
// from each pair.  Returns the fundamental d-cycle (2^(d+1) facets).
inline Chain cross_polytope_cycle(int d, std::uint64_t p) {
  if (d < 1) throw InvalidParameter("cross-polytope cycle needs d >= 1");
  std::vector<Simplex> facets;
  for (unsigned mask = 0; mask < (1u << (d + 1)); ++mask) {
    std::vector<int> verts;
    for (int i = 0; i < d + 1; ++i)
      verts.push_back(mask & (1u << i) ? 2 * i + 2 : 2 * i + 1);
    facets.push_back(Simplex(std::move(verts)));
  }
  return detail::unique_cycle_on(facets, p, "cross-polytope boundary");
}

// Triangulated k x k torus, k even and at least 4: grid vertex (i, j) is
// numbered i*k + j + 1 for 0 <= i, j < k, and each unit square is split
// along its (i, j)-(i+1, j+1) diagonal.  Returns the fundamental 2-cycle on
// the 2k^2 triangles.
inline Chain torus_cycle(int k, std::uint64_t p) {
  if (k < 4 || k % 2 != 0)
    throw InvalidParameter("torus cycle needs even k >= 4");
  auto vertex = [&](int i, int j) {
    return ((i % k + k) % k) * k + ((j % k + k) % k) + 1;
  };
  std::vector<Simplex> tris;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      std::vector<int> lower{vertex(i, j), vertex(i + 1, j),
                             vertex(i + 1, j + 1)};
      std::vector<int> upper{vertex(i, j), vertex(i, j + 1),
                             vertex(i + 1, j + 1)};
      std::sort(lower.begin(), lower.end());
      std::sort(upper.begin(), upper.end());
      tris.push_back(Simplex(std::move(lower)));
      tris.push_back(Simplex(std::move(upper)));
    }
  }
  return detail::unique_cycle_on(tris, p, "torus triangulation");
}

// Seed-deterministic simple d-cycle over {1, ..., n}: the fundamental
// cycle of a uniformly shuffled greedy hypertree and a random non-tree
// simplex.
inline Chain random_simple_cycle(int n, int d, std::uint64_t p,
                                 std::uint64_t seed) {
  if (d < 1 || n < d + 2)
    throw InvalidParameter("random simple cycle needs 1 <= d <= n-2");
  std::mt19937_64 rng(seed);
  Hypertree t = hypertree_random(n, d, p, rng());
  std::vector<Simplex> rest;
  for (const Simplex& s : all_faces_of_dim(n, d))
    if (!std::binary_search(t.simplices.begin(), t.simplices.end(), s))
      rest.push_back(s);
  std::uniform_int_distribution<std::size_t> pick(0, rest.size() - 1);
  return fundamental_cycle(t, rest[pick(rng)]);
}

}  // namespace facetlab
