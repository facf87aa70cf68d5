#include <catch2/catch_amalgamated.hpp>

#include "facetlab/chain.hpp"
#include "facetlab/complex.hpp"
#include "facetlab/fp.hpp"
#include "facetlab/simplex.hpp"
#include "helpers.hpp"

using namespace facetlab;

TEST_CASE("prime field arithmetic", "[fp]") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 31ull}) {
    Fp fp(p);
    for (Scalar a = 0; a < p; ++a) {
      REQUIRE(fp.add(a, fp.neg(a)) == 0);
      REQUIRE(fp.sub(a, a) == 0);
      if (a != 0) REQUIRE(fp.mul(a, fp.inv(a)) == 1);
      for (Scalar b = 0; b < p; ++b) {
        REQUIRE(fp.add(a, b) == (a + b) % p);
        REQUIRE(fp.mul(a, b) == (a * b) % p);
        REQUIRE(fp.sub(a, b) == (a + p - b) % p);
      }
    }
    REQUIRE(fp.from_int(-1) == p - 1);
    REQUIRE(fp.from_int(static_cast<long long>(p) + 1) == 1 % p);
  }
}

TEST_CASE("composite moduli are rejected", "[fp]") {
  for (std::uint64_t m : {0ull, 1ull, 4ull, 6ull, 9ull, 91ull})
    REQUIRE_THROWS_AS(Fp(m), NonPrimeModulus);
}

TEST_CASE("simplex validation and faces", "[simplex]") {
  Simplex s(std::vector<int>{1, 3, 5});
  REQUIRE(s.dim() == 2);
  REQUIRE(s.facet(0) == Simplex({3, 5}));
  REQUIRE(s.facet(1) == Simplex({1, 5}));
  REQUIRE(s.facet(2) == Simplex({1, 3}));
  REQUIRE(s.contains(Simplex({1, 5})));
  REQUIRE_FALSE(s.contains(Simplex({1, 2})));
  REQUIRE(Simplex().dim() == -1);
  REQUIRE(s.contains(Simplex()));
  REQUIRE_THROWS_AS(Simplex({2, 1}), InvalidParameter);
  REQUIRE_THROWS_AS(Simplex({1, 1}), InvalidParameter);
  REQUIRE_THROWS_AS(Simplex({0, 1}), InvalidParameter);
  REQUIRE(complement(Simplex({1, 2}), 4) == Simplex({3, 4}));
  REQUIRE(complement(Simplex(), 3) == Simplex({1, 2, 3}));
  REQUIRE(intersect(Simplex({1, 2, 4}), Simplex({2, 3, 4})) ==
          Simplex({2, 4}));
}

TEST_CASE("incidence signs alternate over dropped positions", "[simplex]") {
  Simplex t(std::vector<int>{1, 2, 3});
  REQUIRE(incidence_sign(t, Simplex({2, 3})) == 1);
  REQUIRE(incidence_sign(t, Simplex({1, 3})) == -1);
  REQUIRE(incidence_sign(t, Simplex({1, 2})) == 1);
  REQUIRE(incidence_sign(t, Simplex({1, 4})) == 0);
  REQUIRE(incidence_sign(t, Simplex({1})) == 0);
  // A vertex is incident to the empty simplex with sign +1.
  REQUIRE(incidence_sign(Simplex({7}), Simplex()) == 1);
  REQUIRE(incidence_sign(Simplex({1, 2}), Simplex({1})) == -1);
  REQUIRE(incidence_sign(Simplex({1, 2}), Simplex({2})) == 1);
}

TEST_CASE("boundary of a triangle and of a vertex", "[chain]") {
  Chain c(2, 5);
  c.set_coeff(Simplex({1, 2, 3}), 1);
  Chain b = boundary(c);
  REQUIRE(b.coeff(Simplex({2, 3})) == 1);
  REQUIRE(b.coeff(Simplex({1, 3})) == 4);
  REQUIRE(b.coeff(Simplex({1, 2})) == 1);
  REQUIRE(b.support_size() == 3);

  Chain v(0, 5);
  v.set_coeff(Simplex({3}), 2);
  Chain bv = boundary(v);
  REQUIRE(bv.dim() == -1);
  REQUIRE(bv.coeff(Simplex()) == 2);
}

TEST_CASE("boundary of boundary vanishes", "[chain][property]") {
  std::mt19937_64 rng(20260815);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    int d = 1 + static_cast<int>(rng() % 3);
    if (d + 1 > n) continue;
    std::uint64_t p = (trial % 3 == 0) ? 2 : (trial % 3 == 1) ? 3 : 5;
    Chain c = testutil::random_chain(n, d, p, 6, rng);
    REQUIRE(boundary(boundary(c)).zero());
  }
}

TEST_CASE("coboundary matches a hand-built incidence transpose", "[chain]") {
  // Oracle: the vertex-edge incidence matrix of the complete graph on
  // {1,2,3}, written out by hand.  Rows (1),(2),(3); columns
  // (1,2),(1,3),(2,3); entries are the facet signs of each edge.
  const int oracle[3][3] = {
      {-1, -1, 0},
      {+1, 0, -1},
      {0, +1, +1},
  };
  const Simplex verts[3] = {Simplex({1}), Simplex({2}), Simplex({3})};
  const Simplex edges[3] = {Simplex({1, 2}), Simplex({1, 3}), Simplex({2, 3})};
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    Fp fp(p);
    for (int i = 0; i < 3; ++i) {
      Chain c(0, p);
      c.set_coeff(verts[i], 1);
      Chain cb = coboundary(c, 3);
      for (int j = 0; j < 3; ++j)
        REQUIRE(cb.coeff(edges[j]) == fp.from_int(oracle[i][j]));
    }
  }
}

TEST_CASE("coboundary of a vertex has entering sign", "[chain]") {
  // delta(1) over n = 3 carries the edges leaving vertex 1 with the sign of
  // the dropped-endpoint position: -(1,2) - (1,3).
  Chain c(0, 3);
  c.set_coeff(Simplex({1}), 1);
  Chain cb = coboundary(c, 3);
  REQUIRE(cb.coeff(Simplex({1, 2})) == 2);
  REQUIRE(cb.coeff(Simplex({1, 3})) == 2);
  REQUIRE(cb.support_size() == 2);
}

TEST_CASE("coboundary is adjoint to boundary", "[chain][property]") {
  // <delta a, b> = <a, boundary b> for random a of dimension d and b of
  // dimension d+1, with the bilinear pairing summing products of matching
  // coefficients.
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    int d = static_cast<int>(rng() % 3) - 1;  // -1, 0 or 1
    if (d + 2 > n) continue;
    std::uint64_t p = (trial % 2) ? 3 : 5;
    Fp fp(p);
    Chain a = d == -1 ? Chain(-1, p) : testutil::random_chain(n, d, p, 5, rng);
    if (d == -1) a.set_coeff(Simplex(), 1 + rng() % (p - 1));
    Chain b = testutil::random_chain(n, d + 1, p, 5, rng);
    Scalar lhs = 0, rhs = 0;
    Chain da = coboundary(a, n);
    Chain db = boundary(b);
    for (const auto& [s, c] : da.terms()) lhs = fp.add(lhs, fp.mul(c, b.coeff(s)));
    for (const auto& [s, c] : db.terms()) rhs = fp.add(rhs, fp.mul(c, a.coeff(s)));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("coboundary of coboundary vanishes", "[chain][property]") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 5 + static_cast<int>(rng() % 3);
    int d = static_cast<int>(rng() % 2);
    Chain c = testutil::random_chain(n, d, 5, 5, rng);
    REQUIRE(coboundary(coboundary(c, n), n).zero());
  }
}

TEST_CASE("chains prune zero coefficients", "[chain]") {
  Chain a(1, 3);
  a.set_coeff(Simplex({1, 2}), 1);
  Chain b(1, 3);
  b.set_coeff(Simplex({1, 2}), 2);
  Chain s = a + b;
  REQUIRE(s.zero());
  REQUIRE(s.support_size() == 0);
  a.set_coeff(Simplex({1, 2}), 0);
  REQUIRE(a.zero());
  REQUIRE_THROWS_AS(a.set_coeff(Simplex({1, 2}), 3), InvalidParameter);
  REQUIRE_THROWS_AS(a.set_coeff(Simplex({1, 2, 3}), 1), InvalidParameter);
}

TEST_CASE("closure generates the complete skeleton", "[complex]") {
  Complex k = Complex::complete(4, 2);
  REQUIRE(k.n() == 4);
  REQUIRE(k.dim() == 2);
  REQUIRE(k.face_count(0) == 4);
  REQUIRE(k.face_count(1) == 6);
  REQUIRE(k.face_count(2) == 4);
  REQUIRE(k.contains(Simplex({1, 3})));
  REQUIRE(k.contains(Simplex()));
  REQUIRE_FALSE(k.contains(Simplex({1, 2, 3, 4})));
  REQUIRE(k.facets() == all_faces_of_dim(4, 2));

  Complex mixed = Complex::closure({Simplex({1, 2, 3}), Simplex({4, 5})}, 5);
  REQUIRE(mixed.face_count(0) == 5);
  REQUIRE(mixed.face_count(1) == 4);
  REQUIRE(mixed.facets() ==
          std::vector<Simplex>{Simplex({4, 5}), Simplex({1, 2, 3})});
}

TEST_CASE("from_faces rejects families that are not closed", "[complex]") {
  REQUIRE_THROWS_AS(
      Complex::from_faces({Simplex({1, 2}), Simplex({1})}, 3),
      InvalidParameter);
  Complex k = Complex::from_faces(
      {Simplex({1}), Simplex({2}), Simplex({1, 2})}, 2);
  REQUIRE(k.dim() == 1);
}
