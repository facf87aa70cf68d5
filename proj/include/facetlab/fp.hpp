#pragma once

#include <cstdint>
#include <string>

#include "facetlab/errors.hpp"

namespace facetlab {

// Field scalars are residues in [0, p).
using Scalar = std::uint64_t;

inline bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::uint64_t q = 3; q * q <= m; q += 2)
    if (m % q == 0) return false;
  return true;
}

// Arithmetic context for the prime field GF(p).  One context is shared by
// every scalar of a computation; chains and matrices carry p alongside
// their data and construct a context on demand.
class Fp {
 public:
  explicit Fp(std::uint64_t p) : p_(p) {
    if (!is_prime(p))
      throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  }

  std::uint64_t p() const { return p_; }

  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }

  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }

  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<__uint128_t>(a) * b % p_);
  }

  Scalar pow(Scalar a, std::uint64_t e) const {
    Scalar r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  // Multiplicative inverse by Fermat: a^(p-2).
  Scalar inv(Scalar a) const {
    if (a == 0) throw InvalidParameter("inverse of zero");
    return pow(a, p_ - 2);
  }

  // Embed a signed integer as a residue.
  Scalar from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Scalar>(r);
  }

 private:
  std::uint64_t p_;
};

}  // namespace facetlab
