#pragma once

#include <random>
#include <vector>

#include "facetlab/chain.hpp"
#include "facetlab/simplex.hpp"

namespace testutil {

using facetlab::Chain;
using facetlab::Fp;
using facetlab::Simplex;

// Uniformly random simplex of dimension d over {1, ..., n}.
inline Simplex random_simplex(int n, int d, std::mt19937_64& rng) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> verts(pool.begin(), pool.begin() + d + 1);
  std::sort(verts.begin(), verts.end());
  return Simplex(verts);
}

// Random d-chain over {1, ..., n} with the given number of draws; repeated
// simplices accumulate, so the support can be smaller.
inline Chain random_chain(int n, int d, std::uint64_t p, int draws,
                          std::mt19937_64& rng) {
  Chain c(d, p);
  Fp fp(p);
  std::uniform_int_distribution<std::uint64_t> coeff(1, p - 1);
  for (int i = 0; i < draws; ++i)
    c.add_term(random_simplex(n, d, rng), coeff(rng), fp);
  return c;
}

}  // namespace testutil
