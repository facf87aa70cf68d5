#include <random>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "facetlab/collapse.hpp"
#include "facetlab/linalg.hpp"
#include "helpers.hpp"

using facetlab::betti_reduced;
using facetlab::boundary;
using facetlab::boundary_matrix_restricted;
using facetlab::Chain;
using facetlab::collapse_small_set;
using facetlab::CollapseCertificate;
using facetlab::CollapseStep;
using facetlab::Complex;
using facetlab::exposed_faces;
using facetlab::express_cycle_as_boundary;
using facetlab::Fp;
using facetlab::InternalInconsistency;
using facetlab::PreconditionViolated;
using facetlab::Simplex;
using facetlab::solve;

namespace {

// Re-executes a certificate with independent bookkeeping, checking at every
// step that the pair really is an elementary collapse, and returns the face
// set the run ends with.
std::set<Simplex> replay(const Complex& start,
                         const std::vector<CollapseStep>& steps) {
  std::set<Simplex> faces;
  for (const Simplex& f : start.all_faces()) faces.insert(f);
  for (const CollapseStep& st : steps) {
    REQUIRE(st.kind == st.free.dim());
    REQUIRE(st.coface.dim() == st.free.dim() + 1);
    REQUIRE(st.coface.contains(st.free));
    REQUIRE(faces.count(st.free) == 1);
    REQUIRE(faces.count(st.coface) == 1);
    int cofaces = 0;
    for (const Simplex& g : faces)
      if (g.dim() == st.free.dim() + 1 && g.contains(st.free)) ++cofaces;
    REQUIRE(cofaces == 1);
    faces.erase(st.free);
    faces.erase(st.coface);
  }
  return faces;
}

void check_certificate(const std::vector<Simplex>& set, int d,
                       const CollapseCertificate& cert) {
  int n = 0;
  for (const Simplex& s : set) n = std::max(n, s.max_vertex());
  std::set<Simplex> end = replay(Complex::closure(set, n), cert.steps);
  std::vector<Simplex> res = cert.residual.all_faces();
  REQUIRE(std::set<Simplex>(res.begin(), res.end()) == end);
  for (const CollapseStep& st : cert.steps)
    REQUIRE((st.kind == d - 1 || st.kind == d - 2));
  REQUIRE(cert.residual.face_count(d) == 0);
  REQUIRE(cert.residual.face_count(d - 1) == 0);
  REQUIRE(cert.residual.dim() <= d - 2);
}

}  // namespace

TEST_CASE("exposed faces of small complexes") {
  Complex triangle = Complex::closure({Simplex({1, 2, 3})}, 3);
  REQUIRE(exposed_faces(triangle, 1) ==
          std::vector<Simplex>{Simplex({1, 2}), Simplex({1, 3}),
                               Simplex({2, 3})});
  REQUIRE(exposed_faces(triangle, 0).empty());  // every vertex has 2 cofaces

  Complex sphere = Complex::closure(
      {Simplex({1, 2, 3}), Simplex({1, 2, 4}), Simplex({1, 3, 4}),
       Simplex({2, 3, 4})},
      4);
  REQUIRE(exposed_faces(sphere, 1).empty());

  Complex book = Complex::closure({Simplex({1, 2, 3}), Simplex({1, 2, 4})}, 4);
  REQUIRE(exposed_faces(book, 1) ==
          std::vector<Simplex>{Simplex({1, 3}), Simplex({1, 4}),
                               Simplex({2, 3}), Simplex({2, 4})});

  Complex edge = Complex::closure({Simplex({1, 2})}, 2);
  REQUIRE(exposed_faces(edge, 0) ==
          std::vector<Simplex>{Simplex({1}), Simplex({2})});

  REQUIRE(exposed_faces(triangle, 2).empty());  // at or above dim(k)
  REQUIRE(exposed_faces(triangle, -1).empty());
}

TEST_CASE("collapsing one triangle is fully determined") {
  CollapseCertificate cert = collapse_small_set(2, {Simplex({1, 2, 3})});
  REQUIRE(cert.steps.size() == 3);
  REQUIRE(cert.steps[0].free == Simplex({1, 2}));
  REQUIRE(cert.steps[0].coface == Simplex({1, 2, 3}));
  REQUIRE(cert.steps[0].kind == 1);
  REQUIRE(cert.steps[1].free == Simplex({1}));
  REQUIRE(cert.steps[1].coface == Simplex({1, 3}));
  REQUIRE(cert.steps[1].kind == 0);
  REQUIRE(cert.steps[2].free == Simplex({2}));
  REQUIRE(cert.steps[2].coface == Simplex({2, 3}));
  REQUIRE(cert.steps[2].kind == 0);
  REQUIRE(cert.residual.all_faces() == std::vector<Simplex>{Simplex({3})});
  check_certificate({Simplex({1, 2, 3})}, 2, cert);
}

TEST_CASE("three-simplex set collapses to a graph") {
  std::vector<Simplex> set{Simplex({1, 2, 3, 4}), Simplex({3, 4, 5, 6}),
                           Simplex({1, 2, 5})};
  CollapseCertificate cert = collapse_small_set(3, set);
  REQUIRE(cert.residual.dim() <= 1);
  check_certificate(set, 3, cert);
}

TEST_CASE("collapse rejects out-of-budget sets") {
  REQUIRE_THROWS_AS(
      collapse_small_set(
          2, {Simplex({1, 2, 3}), Simplex({1, 4, 5}), Simplex({2, 4, 6})}),
      PreconditionViolated);
  REQUIRE_THROWS_AS(collapse_small_set(2, {Simplex({1, 2, 3, 4})}),
                    PreconditionViolated);
  REQUIRE_THROWS_AS(collapse_small_set(1, {Simplex({1, 2})}),
                    PreconditionViolated);
  REQUIRE_THROWS_AS(collapse_small_set(0, {}), PreconditionViolated);
}

TEST_CASE("random small sets collapse below dimension d-1") {
  std::mt19937_64 rng(4402211);
  for (int d : {2, 3, 4}) {
    for (int rep = 0; rep < 60; ++rep) {
      int n = std::max(d + 1, 4 + rep % 6);
      int m = 1 + rep % d;
      std::vector<Simplex> set;
      set.push_back(testutil::random_simplex(n, d, rng));
      for (int i = 1; i < m; ++i)
        set.push_back(
            testutil::random_simplex(n, (rep + i) % (d + 1), rng));
      CollapseCertificate cert = collapse_small_set(d, set);
      check_certificate(set, d, cert);

      // The elimination implies that no reduced homology survives in
      // dimension d-1; cross-check against the rank-based computation.
      Complex k = Complex::closure(set, n);
      for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
        REQUIRE(betti_reduced(k, d - 1, p) == 0);
    }
  }
}

TEST_CASE("boundary expression identities") {
  Chain t(2, 7);
  t.set_coeff(Simplex({1, 2, 3}), 1);
  Chain u = express_cycle_as_boundary(boundary(t), {Simplex({1, 2, 3})}, 2);
  REQUIRE(u == t);

  Chain q(3, 5);
  q.set_coeff(Simplex({1, 2, 3, 4}), 2);
  Chain v =
      express_cycle_as_boundary(boundary(q), {Simplex({1, 2, 3, 4})}, 3);
  REQUIRE(v == q);

  // d = 1 runs without a certificate: a reduced 0-cycle on one edge.
  Chain z(0, 5);
  z.set_coeff(Simplex({1}), 4);
  z.set_coeff(Simplex({2}), 1);
  Chain w = express_cycle_as_boundary(z, {Simplex({1, 2})}, 1);
  Chain edge(1, 5);
  edge.set_coeff(Simplex({1, 2}), 1);
  REQUIRE(w == edge);

  REQUIRE(express_cycle_as_boundary(Chain(0, 5), {Simplex({1, 2})}, 1) ==
          Chain(1, 5));
  REQUIRE(express_cycle_as_boundary(Chain(0, 5), {}, 1) == Chain(1, 5));
}

TEST_CASE("random cycles become boundaries on their own set") {
  std::mt19937_64 rng(98531);
  const std::uint64_t primes[] = {2, 3, 5, 7};
  for (int d : {1, 2, 3, 4}) {
    for (int rep = 0; rep < 40; ++rep) {
      int n = std::max(d + 1, 4 + rep % 5);
      std::uint64_t p = primes[rep % 4];
      int m = 1 + rep % d;
      std::vector<Simplex> set;
      set.push_back(testutil::random_simplex(n, d, rng));
      for (int i = 1; i < m; ++i)
        set.push_back(
            testutil::random_simplex(n, (rep + i) % (d + 1), rng));

      Fp fp(p);
      Chain z(d - 1, p);
      for (const Simplex& s : set) {
        if (s.dim() != d) continue;
        Chain piece(d, p);
        piece.set_coeff(s, 1 + rng() % (p - 1 == 0 ? 1 : p - 1));
        z.add(boundary(piece));
      }

      Chain u = express_cycle_as_boundary(z, set, d);
      REQUIRE(boundary(u) == z);
      for (const auto& [s, c] : u.terms()) {
        REQUIRE(s.dim() == d);
        REQUIRE(std::find(set.begin(), set.end(), s) != set.end());
      }

      // Independent solvability check on the restricted boundary matrix.
      Complex k = Complex::closure(set, n);
      if (!k.faces(d).empty()) {
        auto alt = solve(boundary_matrix_restricted(k.faces(d), p), z);
        REQUIRE(alt.has_value());
        REQUIRE(boundary(*alt) == z);
      }
    }
  }
}

TEST_CASE("expression rejects bad inputs") {
  Chain notcycle(1, 5);
  notcycle.set_coeff(Simplex({1, 2}), 1);
  REQUIRE_THROWS_AS(
      express_cycle_as_boundary(notcycle, {Simplex({1, 2, 3})}, 2),
      PreconditionViolated);

  Chain off(1, 5);
  off = boundary([] {
    Chain t(2, 5);
    t.set_coeff(Simplex({4, 5, 6}), 1);
    return t;
  }());
  REQUIRE_THROWS_AS(express_cycle_as_boundary(off, {Simplex({1, 2, 3})}, 2),
                    PreconditionViolated);

  Chain z(1, 5);
  REQUIRE_THROWS_AS(
      express_cycle_as_boundary(
          z, {Simplex({1, 2, 3}), Simplex({1, 4, 5}), Simplex({2, 4, 6})}, 2),
      PreconditionViolated);
  REQUIRE_THROWS_AS(express_cycle_as_boundary(z, {Simplex({1, 2, 3})}, 3),
                    PreconditionViolated);
  REQUIRE_THROWS_AS(express_cycle_as_boundary(z, {}, 0), PreconditionViolated);
}
