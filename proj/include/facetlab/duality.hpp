#pragma once

#include "facetlab/linalg.hpp"

namespace facetlab {

// Every (-1)-chain is a cycle under the reduced convention.
inline bool is_cycle(const Chain& z) {
  return z.dim() < 0 || boundary(z).zero();
}

// A simple cycle carries, up to scale, the only cycle on its support: the
// kernel of the boundary restricted to the support is one-dimensional and
// its generator has full support.  The zero chain is not simple.
inline bool is_simple_cycle(const Chain& z) {
  if (z.zero() || !is_cycle(z)) return false;
  SparseMatrix m = boundary_matrix_restricted(z.support(), z.p());
  SubspaceBasis basis = kernel_basis(m);
  return basis.dim == 1 &&
         basis.vectors[0].support_size() == z.support_size();
}

inline bool is_cocycle(const Chain& c, int n) {
  return coboundary(c, n).zero();
}

// A hypercut is a minimal-support nonzero cocycle over the ground set.
inline bool is_hypercut(const Chain& c, int n) {
  if (c.zero() || !is_cocycle(c, n)) return false;
  SparseMatrix m = coboundary_matrix_restricted(c.support(), n, c.p());
  SubspaceBasis basis = kernel_basis(m);
  return basis.dim == 1 &&
         basis.vectors[0].support_size() == c.support_size();
}

// Sign of a simplex under the signed complement map: the product of
// (-1)^(v-1) over its vertices.
inline int complement_sign(const Simplex& s) {
  long long e = 0;
  for (int v : s.vertices()) e += v - 1;
  return e % 2 == 0 ? 1 : -1;
}

// Signed Alexander dual over {1, ..., n}: each k-subset maps to its
// complement with the complement_sign of the original simplex.  A chain of
// dimension k-1 maps to one of dimension n-k-1.
inline Chain dual(const Chain& z, int n) {
  if (z.dim() + 1 > n)
    throw InvalidParameter("dual needs chain dimension at most n-1");
  Fp fp(z.p());
  Chain out(n - z.dim() - 2, z.p());
  for (const auto& [s, c] : z.terms()) {
    if (s.max_vertex() > n)
      throw InvalidParameter("term " + s.str() + " exceeds ground set " +
                             std::to_string(n));
    out.add_term(complement(s, n),
                 fp.mul(fp.from_int(complement_sign(s)), c), fp);
  }
  return out;
}

// Applying dual twice multiplies by this global sign.
inline int double_dual_sign(int n) {
  long long e = static_cast<long long>(n) * (n + 1) / 2 - n;
  return e % 2 == 0 ? 1 : -1;
}

// The star hypercut of a (d-1)-simplex tau: all d-simplices obtained by
// adding one vertex, signed by their incidence with tau.  Its support is a
// clique of size n - |tau| in the facet graph.
inline Chain star_hypercut(const Simplex& tau, int n, std::uint64_t p) {
  if (tau.max_vertex() > n)
    throw InvalidParameter("tau exceeds ground set");
  if (static_cast<int>(tau.size()) >= n)
    throw InvalidParameter("tau must be a proper subset of the ground set");
  Fp fp(p);
  Chain out(tau.dim() + 1, p);
  for (int u = 1; u <= n; ++u) {
    if (tau.has_vertex(u)) continue;
    Simplex s = tau.with_vertex(u);
    out.add_term(s, fp.from_int(incidence_sign(s, tau)), fp);
  }
  return out;
}

}  // namespace facetlab
