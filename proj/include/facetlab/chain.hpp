#pragma once

#include <map>
#include <string>
#include <vector>

#include "facetlab/fp.hpp"
#include "facetlab/simplex.hpp"

namespace facetlab {

// A finite GF(p)-linear combination of simplices of one fixed dimension.
// Terms are kept in lexicographic order and zero coefficients are never
// stored, so equal chains compare equal structurally.
class Chain {
 public:
  Chain() = default;
  Chain(int dim, std::uint64_t p) : dim_(dim), p_(p) {
    if (dim < -1) throw InvalidParameter("chain dimension below -1");
    Fp check(p);  // validates the modulus
  }

  int dim() const { return dim_; }
  std::uint64_t p() const { return p_; }
  const std::map<Simplex, Scalar>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  std::vector<Simplex> support() const {
    std::vector<Simplex> out;
    out.reserve(terms_.size());
    for (const auto& [s, c] : terms_) out.push_back(s);
    return out;
  }

  Scalar coeff(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
  }

  void set_coeff(const Simplex& s, Scalar c) {
    check_term(s, c);
    if (c == 0)
      terms_.erase(s);
    else
      terms_[s] = c;
  }

  // *this += c * s.
  void add_term(const Simplex& s, Scalar c, const Fp& fp) {
    check_term(s, c);
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(s, c);
    if (!fresh) {
      it->second = fp.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Chain& add(const Chain& other) {
    require_compatible(other);
    Fp fp(p_);
    for (const auto& [s, c] : other.terms_) add_term(s, c, fp);
    return *this;
  }

  Chain& subtract(const Chain& other) {
    require_compatible(other);
    Fp fp(p_);
    for (const auto& [s, c] : other.terms_) add_term(s, fp.neg(c), fp);
    return *this;
  }

  Chain& scale(Scalar c) {
    Fp fp(p_);
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, v] : terms_) v = fp.mul(v, c);
    return *this;
  }

  friend Chain operator+(Chain a, const Chain& b) { return a.add(b); }
  friend Chain operator-(Chain a, const Chain& b) { return a.subtract(b); }
  friend bool operator==(const Chain& a, const Chain& b) {
    return a.dim_ == b.dim_ && a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    std::string s;
    for (const auto& [sx, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += std::to_string(c) + "*" + sx.str();
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check_term(const Simplex& s, Scalar c) const {
    if (s.dim() != dim_)
      throw InvalidParameter("term " + s.str() + " has dimension " +
                             std::to_string(s.dim()) + ", chain has " +
                             std::to_string(dim_));
    if (c >= p_) throw InvalidParameter("coefficient not reduced mod p");
  }

  void require_compatible(const Chain& other) const {
    if (dim_ != other.dim_ || p_ != other.p_)
      throw InvalidParameter("chain dimension or modulus mismatch");
  }

  int dim_ = -1;
  std::uint64_t p_ = 2;
  std::map<Simplex, Scalar> terms_;
};

// Boundary under the reduced convention: the boundary of a vertex is the
// empty simplex with coefficient +1, and generally
//   boundary(sigma) = sum_i (-1)^i (sigma minus its i-th vertex).
inline Chain boundary(const Chain& c) {
  if (c.dim() < 0)
    throw PreconditionViolated("boundary needs chain dimension >= 0");
  Fp fp(c.p());
  Chain out(c.dim() - 1, c.p());
  for (const auto& [s, a] : c.terms()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Scalar sign = (i % 2 == 0) ? 1 : fp.neg(1);
      out.add_term(s.facet(i), fp.mul(sign, a), fp);
    }
  }
  return out;
}

// Adjoint of the boundary over the ground set {1, ..., n}: the coefficient
// of a coface xi is sum over terms tau of incidence_sign(xi, tau) * c(tau).
// Defined for dimensions -1 through n-1; the coboundary of a top chain or
// of the zero chain is zero.
inline Chain coboundary(const Chain& c, int n) {
  if (c.dim() + 1 > n)
    throw PreconditionViolated("coboundary target dimension exceeds ground set");
  Fp fp(c.p());
  Chain out(c.dim() + 1, c.p());
  for (const auto& [s, a] : c.terms()) {
    if (s.max_vertex() > n)
      throw InvalidParameter("term " + s.str() + " exceeds ground set " +
                             std::to_string(n));
    for (int u = 1; u <= n; ++u) {
      if (s.has_vertex(u)) continue;
      Simplex xi = s.with_vertex(u);
      out.add_term(xi, fp.mul(fp.from_int(incidence_sign(xi, s)), a), fp);
    }
  }
  return out;
}

}  // namespace facetlab
