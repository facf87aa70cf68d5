#pragma once

#include <numeric>
#include <random>

#include "facetlab/duality.hpp"
#include "facetlab/linalg.hpp"

namespace facetlab {

// A d-hypertree over {1, ..., n}: a maximal family of d-simplices whose
// boundary columns are independent over GF(p).  Every hypertree has exactly
// C(n-1, d) simplices.
struct Hypertree {
  int n = 0;
  int d = 1;
  std::uint64_t p = 2;
  std::vector<Simplex> simplices;  // lex sorted
};

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline bool is_acyclic(const std::vector<Simplex>& faces, std::uint64_t p) {
  return cycle_space_dim(faces, p) == 0;
}

inline bool is_hypertree(const Hypertree& t) {
  if (static_cast<long long>(t.simplices.size()) != binomial(t.n - 1, t.d))
    return false;
  for (const Simplex& s : t.simplices)
    if (s.dim() != t.d || s.max_vertex() > t.n) return false;
  return is_acyclic(t.simplices, t.p);
}

namespace detail {

inline void check_tree_params(int n, int d) {
  if (d < 1 || d > n - 1)
    throw InvalidParameter("hypertree needs 1 <= d <= n-1");
}

// Greedy basis of the boundary-column matroid in the given candidate order.
inline Hypertree greedy_tree(int n, int d, std::uint64_t p,
                             const std::vector<Simplex>& order) {
  Fp fp(p);
  SparseMatrix full = boundary_matrix_restricted(all_faces_of_dim(n, d), p);
  std::map<Simplex, std::size_t> col_of;
  for (std::size_t j = 0; j < full.col_labels.size(); ++j)
    col_of[full.col_labels[j]] = j;
  GaussianEliminator elim(full.rows(), fp);
  Hypertree t{n, d, p, {}};
  for (const Simplex& s : order) {
    if (elim.push(full.columns[col_of.at(s)]))
      elim.pop();  // dependent: skip
    else
      t.simplices.push_back(s);
  }
  std::sort(t.simplices.begin(), t.simplices.end());
  if (!is_hypertree(t))
    throw InternalInconsistency("greedy scan did not produce a hypertree");
  return t;
}

}  // namespace detail

// First hypertree in lexicographic candidate order.
inline Hypertree hypertree_greedy(int n, int d, std::uint64_t p) {
  detail::check_tree_params(n, d);
  return detail::greedy_tree(n, d, p, all_faces_of_dim(n, d));
}

// Greedy hypertree over a seed-shuffled candidate order.
inline Hypertree hypertree_random(int n, int d, std::uint64_t p,
                                  std::uint64_t seed) {
  detail::check_tree_params(n, d);
  std::vector<Simplex> order = all_faces_of_dim(n, d);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return detail::greedy_tree(n, d, p, order);
}

// All d-simplices containing the last vertex n.  Acyclic because dropping n
// from any member gives a face contained in no other member.
inline Hypertree star_hypertree(int n, int d, std::uint64_t p) {
  detail::check_tree_params(n, d);
  Hypertree t{n, d, p, {}};
  for (const Simplex& s : all_simplices(n - 1, d))
    t.simplices.push_back(s.with_vertex(n));
  std::sort(t.simplices.begin(), t.simplices.end());
  if (!is_hypertree(t))
    throw InternalInconsistency("star family is not a hypertree");
  return t;
}

// Star hypertree with (1,...,d,n) swapped for (1,...,d+1).  The result is a
// hypertree in which the new simplex has facet-graph degree exactly d.
inline Hypertree perturbed_hypertree(int n, int d, std::uint64_t p) {
  detail::check_tree_params(n, d);
  if (n < d + 2)
    throw InvalidParameter("perturbed hypertree needs n >= d+2");
  Hypertree t = star_hypertree(n, d, p);
  std::vector<int> out_verts(static_cast<std::size_t>(d));
  std::iota(out_verts.begin(), out_verts.end(), 1);
  Simplex removed = Simplex(out_verts).with_vertex(n);
  std::vector<int> in_verts(static_cast<std::size_t>(d) + 1);
  std::iota(in_verts.begin(), in_verts.end(), 1);
  Simplex added{in_verts};
  std::erase(t.simplices, removed);
  t.simplices.push_back(added);
  std::sort(t.simplices.begin(), t.simplices.end());
  if (!is_hypertree(t))
    throw InternalInconsistency("perturbed family is not a hypertree");
  return t;
}

// The unique chain on the hypertree with the same boundary as sigma.
inline Chain cap(const Hypertree& t, const Simplex& sigma) {
  if (sigma.dim() != t.d)
    throw PreconditionViolated("cap needs a d-simplex");
  if (sigma.max_vertex() > t.n)
    throw PreconditionViolated("sigma exceeds ground set");
  if (std::binary_search(t.simplices.begin(), t.simplices.end(), sigma))
    throw PreconditionViolated("sigma already belongs to the hypertree");
  Chain one(t.d, t.p);
  one.set_coeff(sigma, 1);
  SparseMatrix m = boundary_matrix_restricted(t.simplices, t.p);
  auto x = solve(m, boundary(one));
  if (!x)
    throw InternalInconsistency("hypertree does not span the boundary of " +
                                sigma.str());
  return *x;
}

// sigma - cap(sigma): a simple cycle through sigma, the circuit closed by
// adding sigma to the hypertree.
inline Chain fundamental_cycle(const Hypertree& t, const Simplex& sigma) {
  Chain z(t.d, t.p);
  z.set_coeff(sigma, 1);
  z.subtract(cap(t, sigma));
  if (!boundary(z).zero())
    throw InternalInconsistency("fundamental cycle has nonzero boundary");
  return z;
}

}  // namespace facetlab
