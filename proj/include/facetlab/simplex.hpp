#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "facetlab/errors.hpp"

namespace facetlab {

// A simplex is a strictly increasing tuple of vertices from {1, ..., n}.
// The empty tuple is the (-1)-dimensional empty simplex, which acts as the
// unique face of every vertex under the reduced boundary convention.
class Simplex {
 public:
  Simplex() = default;

  explicit Simplex(std::vector<int> verts) : v_(std::move(verts)) {
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (v_[i] < 1)
        throw InvalidParameter("simplex vertex " + std::to_string(v_[i]) +
                               " is not positive");
      if (i > 0 && v_[i] <= v_[i - 1])
        throw InvalidParameter("simplex " + joined(v_) +
                               " is not strictly increasing");
    }
  }

  int dim() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  const std::vector<int>& vertices() const { return v_; }
  int vertex(std::size_t i) const { return v_[i]; }
  int max_vertex() const { return v_.empty() ? 0 : v_.back(); }

  bool has_vertex(int u) const {
    return std::binary_search(v_.begin(), v_.end(), u);
  }

  // Subset test: every vertex of other appears in *this.
  bool contains(const Simplex& other) const {
    return std::includes(v_.begin(), v_.end(), other.v_.begin(),
                         other.v_.end());
  }

  // Codimension-1 face obtained by dropping the i-th smallest vertex.
  Simplex facet(std::size_t i) const {
    std::vector<int> w = v_;
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
    Simplex s;
    s.v_ = std::move(w);
    return s;
  }

  Simplex with_vertex(int u) const {
    if (u < 1) throw InvalidParameter("vertex must be positive");
    if (has_vertex(u))
      throw InvalidParameter("vertex " + std::to_string(u) +
                             " already present");
    std::vector<int> w = v_;
    w.insert(std::upper_bound(w.begin(), w.end(), u), u);
    Simplex s;
    s.v_ = std::move(w);
    return s;
  }

  Simplex without_vertex(int u) const {
    auto it = std::lower_bound(v_.begin(), v_.end(), u);
    if (it == v_.end() || *it != u)
      throw InvalidParameter("vertex " + std::to_string(u) + " not present");
    std::vector<int> w = v_;
    w.erase(w.begin() + (it - v_.begin()));
    Simplex s;
    s.v_ = std::move(w);
    return s;
  }

  // Dot-separated vertex list, "()" for the empty simplex.
  std::string str() const { return v_.empty() ? "()" : joined(v_); }

  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  static std::string joined(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += '.';
      s += std::to_string(v[i]);
    }
    return s;
  }

  std::vector<int> v_;
};

// +1 or -1 when tau is a codimension-1 face of sigma, 0 otherwise.  The sign
// is (-1)^i where i is the 0-based position of the dropped vertex in sigma,
// so a vertex has incidence +1 with the empty simplex.
inline int incidence_sign(const Simplex& sigma, const Simplex& tau) {
  if (sigma.dim() != tau.dim() + 1) return 0;
  int drop = -1;
  std::size_t j = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (j < tau.size() && sigma.vertex(i) == tau.vertex(j)) {
      ++j;
    } else if (drop < 0) {
      drop = static_cast<int>(i);
    } else {
      return 0;
    }
  }
  if (j != tau.size()) return 0;
  return drop % 2 == 0 ? 1 : -1;
}

inline Simplex intersect(const Simplex& a, const Simplex& b) {
  std::vector<int> w;
  std::set_intersection(a.vertices().begin(), a.vertices().end(),
                        b.vertices().begin(), b.vertices().end(),
                        std::back_inserter(w));
  return Simplex(std::move(w));
}

inline Simplex simplex_union(const Simplex& a, const Simplex& b) {
  std::vector<int> w;
  std::set_union(a.vertices().begin(), a.vertices().end(),
                 b.vertices().begin(), b.vertices().end(),
                 std::back_inserter(w));
  return Simplex(std::move(w));
}

// Complement within the ground set {1, ..., n}.
inline Simplex complement(const Simplex& s, int n) {
  if (s.max_vertex() > n)
    throw InvalidParameter("simplex " + s.str() + " exceeds ground set " +
                           std::to_string(n));
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n) - s.size());
  for (int u = 1; u <= n; ++u)
    if (!s.has_vertex(u)) w.push_back(u);
  return Simplex(std::move(w));
}

// All k-element subsets of {1, ..., n} in lexicographic order.
inline std::vector<Simplex> all_simplices(int n, int k) {
  std::vector<Simplex> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(Simplex(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// All simplices of dimension d over {1, ..., n} in lexicographic order.
inline std::vector<Simplex> all_faces_of_dim(int n, int d) {
  return all_simplices(n, d + 1);
}

}  // namespace facetlab
