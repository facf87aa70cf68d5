#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "facetlab/chain.hpp"
#include "facetlab/complex.hpp"
#include "facetlab/linalg.hpp"

namespace facetlab {

// One elementary collapse: removal of an exposed face together with its
// unique coface of the next dimension.  kind records the dimension of the
// free face, so a (d-1)-collapse has kind d-1 and removes a d-face.
struct CollapseStep {
  Simplex free;
  Simplex coface;
  int kind = 0;
};

// Ordered collapse sequence together with the complex it ends at.  Replaying
// the steps from the start complex reproduces residual, and every free face
// is exposed at its turn.
struct CollapseCertificate {
  std::vector<CollapseStep> steps;
  Complex residual;
};

// i-faces of k contained in exactly one (i+1)-face.  Downward closure makes
// such a coface automatically maximal: any face of dimension i+2 or more
// above f would contribute at least two (i+1)-cofaces.
inline std::vector<Simplex> exposed_faces(const Complex& k, int i) {
  std::vector<Simplex> out;
  if (i < 0 || i >= k.dim()) return out;
  for (const Simplex& f : k.faces(i))
    if (k.cofaces(f).size() == 1) out.push_back(f);
  return out;
}

namespace detail {

// Mutable face set a collapse runs against.  Every removal re-checks
// exposedness, so an invalid step can never enter a certificate.
class CollapseArena {
 public:
  explicit CollapseArena(const Complex& k) : n_(k.n()) {
    for (const Simplex& f : k.all_faces()) faces_.insert(f);
  }

  bool contains(const Simplex& f) const { return faces_.count(f) != 0; }

  // The unique coface of f one dimension up, or nullopt when f has zero or
  // several of them.
  std::optional<Simplex> sole_coface(const Simplex& f) const {
    std::optional<Simplex> only;
    for (int u = 1; u <= n_; ++u) {
      if (f.has_vertex(u)) continue;
      Simplex g = f.with_vertex(u);
      if (!contains(g)) continue;
      if (only) return std::nullopt;
      only = g;
    }
    return only;
  }

  void collapse(const Simplex& free, const Simplex& coface,
                std::vector<CollapseStep>& steps) {
    if (!contains(free) || !contains(coface))
      throw InternalInconsistency("collapse pair " + free.str() + ", " +
                                  coface.str() + " is not present");
    auto only = sole_coface(free);
    if (!only || *only != coface)
      throw InternalInconsistency("face " + free.str() +
                                  " is not exposed with coface " +
                                  coface.str());
    faces_.erase(free);
    faces_.erase(coface);
    steps.push_back(CollapseStep{free, coface, free.dim()});
  }

  Complex to_complex() const {
    return Complex::from_faces(std::vector<Simplex>(faces_.begin(),
                                                    faces_.end()),
                               n_);
  }

 private:
  int n_;
  std::set<Simplex> faces_;
};

inline std::vector<Simplex> dedupe_sorted(const std::vector<Simplex>& in) {
  std::vector<Simplex> out = in;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Shared size and dimension budget of the small-set machinery: at most d
// simplices, each of dimension at most d.
inline void check_small_set(int d, const std::vector<Simplex>& simplices) {
  if (static_cast<int>(simplices.size()) > d)
    throw PreconditionViolated("set has " + std::to_string(simplices.size()) +
                               " simplices, more than d = " +
                               std::to_string(d));
  for (const Simplex& s : simplices)
    if (s.dim() > d)
      throw PreconditionViolated("simplex " + s.str() + " has dimension " +
                                 std::to_string(s.dim()) + " above d = " +
                                 std::to_string(d));
}

}  // namespace detail

// Eliminates every d- and (d-1)-face of the complex spanned by at most d
// simplices of dimension at most d, using only elementary (d-1)- and
// (d-2)-collapses.  The d-simplices are peeled one at a time, lexicographic
// least first.  Peeling a simplex sigma keeps its intersections with the
// rest of the set untouched and sweeps the remaining boundary faces: one
// (d-1)-collapse removes sigma with its least untouched facet, then the
// facet graph of the boundary of sigma, restricted to untouched faces, is
// traversed in lexicographic order, each move collapsing the common
// codimension-2 face into the facet not yet removed.  Once no d-simplices
// remain, each surviving (d-1)-simplex owns an exposed facet, because every
// other set member can block at most one of its d facets, and is removed
// with the least such facet.  Refuses d < 2: a lone 1-face collapses away
// but its surviving endpoint cannot.
inline CollapseCertificate collapse_small_set(
    int d, const std::vector<Simplex>& set_faces) {
  if (d < 2)
    throw PreconditionViolated(
        "full elimination needs d >= 2; surviving vertices cannot collapse");
  std::vector<Simplex> remaining = detail::dedupe_sorted(set_faces);
  detail::check_small_set(d, remaining);

  int n = 0;
  for (const Simplex& s : remaining) n = std::max(n, s.max_vertex());
  detail::CollapseArena arena(Complex::closure(remaining, n));
  std::vector<CollapseStep> steps;

  while (true) {
    auto it = std::find_if(remaining.begin(), remaining.end(),
                           [&](const Simplex& s) { return s.dim() == d; });
    if (it == remaining.end()) break;
    Simplex sigma = *it;
    remaining.erase(it);

    // Faces shared with the rest of the set must survive this peel.
    std::vector<Simplex> shared;
    for (const Simplex& xi : remaining) shared.push_back(intersect(sigma, xi));
    auto is_shared = [&](const Simplex& f) {
      return std::any_of(shared.begin(), shared.end(),
                         [&](const Simplex& t) { return t.contains(f); });
    };

    std::vector<Simplex> facets;
    for (std::size_t i = 0; i < sigma.size(); ++i)
      facets.push_back(sigma.facet(i));
    std::sort(facets.begin(), facets.end());
    std::vector<Simplex> sweepable;
    for (const Simplex& f : facets)
      if (!is_shared(f)) sweepable.push_back(f);
    if (sweepable.empty())
      throw InternalInconsistency("every facet of " + sigma.str() +
                                  " is shared; set budget was violated");

    arena.collapse(sweepable.front(), sigma, steps);

    // Blue/white sweep: removed facets are blue, surviving sweepable facets
    // white.  Two facets always meet in a codimension-2 face; the move is
    // legal when that face is untouchable by the rest of the set.
    std::set<Simplex> blue{sweepable.front()};
    std::set<Simplex> white(sweepable.begin() + 1, sweepable.end());
    while (!white.empty()) {
      bool advanced = false;
      for (auto wit = white.begin(); wit != white.end() && !advanced; ++wit) {
        for (const Simplex& b : blue) {
          Simplex common = intersect(*wit, b);
          if (is_shared(common)) continue;
          arena.collapse(common, *wit, steps);
          blue.insert(*wit);
          white.erase(wit);
          advanced = true;
          break;
        }
      }
      if (!advanced)
        throw InternalInconsistency(
            "boundary sweep of " + sigma.str() +
            " stalled; shared faces disconnect its facet graph");
    }
  }

  // No d-simplices are left, so the surviving (d-1)-faces are exactly the
  // (d-1)-simplices of the set.
  for (const Simplex& tau : remaining) {
    if (tau.dim() != d - 1) continue;
    std::vector<Simplex> facets;
    for (std::size_t i = 0; i < tau.size(); ++i)
      facets.push_back(tau.facet(i));
    std::sort(facets.begin(), facets.end());
    std::optional<Simplex> zeta;
    for (const Simplex& f : facets) {
      auto only = arena.sole_coface(f);
      if (only && *only == tau) {
        zeta = f;
        break;
      }
    }
    if (!zeta)
      throw InternalInconsistency("simplex " + tau.str() +
                                  " has no exposed facet left");
    arena.collapse(*zeta, tau, steps);
  }

  return CollapseCertificate{std::move(steps), arena.to_complex()};
}

// Writes a (d-1)-cycle supported on the complex of a small simplex set as
// the boundary of a d-chain supported on the set itself.  The collapse
// certificate is replayed: a (d-1)-collapse of tau into sigma moves
// sign(sigma, tau) * c_tau * sigma into the answer and subtracts its
// boundary from the running cycle, and a (d-2)-collapse certifies that the
// running cycle no longer touches the removed (d-1)-face.  The d = 1 case
// has no certificate and is solved directly against the edge boundary
// matrix.
inline Chain express_cycle_as_boundary(const Chain& z,
                                       const std::vector<Simplex>& set_faces,
                                       int d) {
  if (d < 1)
    throw PreconditionViolated("cycle dimension d - 1 needs d >= 1");
  std::vector<Simplex> simplices = detail::dedupe_sorted(set_faces);
  detail::check_small_set(d, simplices);
  if (z.dim() != d - 1)
    throw PreconditionViolated("chain dimension " + std::to_string(z.dim()) +
                               " does not match d - 1 = " +
                               std::to_string(d - 1));

  int n = 0;
  for (const Simplex& s : simplices) n = std::max(n, s.max_vertex());
  Complex k = Complex::closure(simplices, n);
  for (const auto& [s, c] : z.terms())
    if (!k.contains(s))
      throw PreconditionViolated("cycle touches " + s.str() +
                                 " outside the set's complex");
  if (!boundary(z).zero())
    throw PreconditionViolated("chain is not a cycle");

  Fp fp(z.p());
  if (d == 1) {
    std::vector<Simplex> edges = k.faces(1);
    if (edges.empty()) {
      if (!z.zero())
        throw InternalInconsistency("nonzero 0-cycle with no edges available");
      return Chain(1, z.p());
    }
    auto u = solve(boundary_matrix_restricted(edges, z.p()), z);
    if (!u)
      throw InternalInconsistency("0-cycle outside the edge boundary span");
    return *u;
  }

  CollapseCertificate cert = collapse_small_set(d, simplices);
  Chain running = z;
  Chain u(d, z.p());
  for (const CollapseStep& st : cert.steps) {
    if (st.kind == d - 1) {
      Scalar c = running.coeff(st.free);
      if (c == 0) continue;
      Scalar m = fp.mul(fp.from_int(incidence_sign(st.coface, st.free)), c);
      u.add_term(st.coface, m, fp);
      Chain piece(d, z.p());
      piece.set_coeff(st.coface, m);
      running.subtract(boundary(piece));
    } else if (running.coeff(st.coface) != 0) {
      throw InternalInconsistency(
          "cycle carries " + st.coface.str() +
          " although its facet " + st.free.str() + " was exposed");
    }
  }
  if (!running.zero())
    throw InternalInconsistency("residual complex still carries the cycle");
  return u;
}

}  // namespace facetlab
