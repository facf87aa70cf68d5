#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "facetlab/simplex.hpp"

namespace facetlab {

// A finite simplicial complex over the ground set {1, ..., n}: a
// downward-closed family of simplices.  Faces are stored per dimension in
// lexicographic order; the empty simplex is an implicit member and is
// materialized only as a boundary-matrix row.
class Complex {
 public:
  Complex() = default;

  // Downward closure of an arbitrary family of generators.
  static Complex closure(const std::vector<Simplex>& generators, int n) {
    std::set<Simplex> seen;
    for (const Simplex& g : generators) {
      if (g.max_vertex() > n)
        throw InvalidParameter("generator " + g.str() +
                               " exceeds ground set " + std::to_string(n));
      expand(g, seen);
    }
    return from_set(seen, n);
  }

  // Builds a complex from an already downward-closed face list.
  static Complex from_faces(const std::vector<Simplex>& faces, int n) {
    std::set<Simplex> seen;
    for (const Simplex& f : faces) {
      if (f.max_vertex() > n)
        throw InvalidParameter("face " + f.str() + " exceeds ground set " +
                               std::to_string(n));
      if (f.dim() >= 0) seen.insert(f);
    }
    for (const Simplex& f : seen)
      for (std::size_t i = 0; i < f.size(); ++i)
        if (f.dim() > 0 && !seen.count(f.facet(i)))
          throw InvalidParameter("face list is not downward closed at " +
                                 f.str());
    return from_set(seen, n);
  }

  // Full d-skeleton of the simplex on n vertices: every simplex of
  // dimension at most d.
  static Complex complete(int n, int d) {
    if (d < 0 || d > n - 1)
      throw InvalidParameter("complete complex needs 0 <= d <= n-1");
    return closure(all_faces_of_dim(n, d), n);
  }

  int n() const { return n_; }
  int dim() const { return static_cast<int>(faces_.size()) - 1; }
  bool empty() const { return faces_.empty(); }

  const std::vector<Simplex>& faces(int d) const {
    static const std::vector<Simplex> none;
    if (d < 0 || d >= static_cast<int>(faces_.size())) return none;
    return faces_[static_cast<std::size_t>(d)];
  }

  std::size_t face_count(int d) const { return faces(d).size(); }

  std::size_t total_faces() const {
    std::size_t t = 0;
    for (const auto& fs : faces_) t += fs.size();
    return t;
  }

  std::vector<Simplex> all_faces() const {
    std::vector<Simplex> out;
    out.reserve(total_faces());
    for (const auto& fs : faces_) out.insert(out.end(), fs.begin(), fs.end());
    return out;
  }

  bool contains(const Simplex& s) const {
    if (s.dim() < 0) return true;
    const auto& fs = faces(s.dim());
    return std::binary_search(fs.begin(), fs.end(), s);
  }

  // Inclusion-maximal faces.
  std::vector<Simplex> facets() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dim(); ++d) {
      for (const Simplex& f : faces(d)) {
        bool maximal = true;
        for (const Simplex& g : faces(d + 1)) {
          if (g.contains(f)) {
            maximal = false;
            break;
          }
        }
        if (maximal) out.push_back(f);
      }
    }
    return out;
  }

  // Faces of dimension d+1 containing s.
  std::vector<Simplex> cofaces(const Simplex& s) const {
    std::vector<Simplex> out;
    for (const Simplex& g : faces(s.dim() + 1))
      if (g.contains(s)) out.push_back(g);
    return out;
  }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.n_ == b.n_ && a.faces_ == b.faces_;
  }

 private:
  static void expand(const Simplex& g, std::set<Simplex>& seen) {
    if (g.dim() < 0 || seen.count(g)) return;
    seen.insert(g);
    if (g.dim() == 0) return;
    for (std::size_t i = 0; i < g.size(); ++i) expand(g.facet(i), seen);
  }

  static Complex from_set(const std::set<Simplex>& seen, int n) {
    Complex k;
    k.n_ = n;
    for (const Simplex& f : seen) {
      if (f.dim() >= static_cast<int>(k.faces_.size()))
        k.faces_.resize(static_cast<std::size_t>(f.dim()) + 1);
      k.faces_[static_cast<std::size_t>(f.dim())].push_back(f);
    }
    return k;  // set iteration is lexicographic per dimension already
  }

  int n_ = 0;
  std::vector<std::vector<Simplex>> faces_;
};

}  // namespace facetlab
