#pragma once

#include <set>

#include "facetlab/duality.hpp"
#include "facetlab/linalg.hpp"

namespace facetlab {

// Hard cap on the column count of circuit searches; the search walks all
// independent column subsets, which is bounded by 2^cols probes.
inline constexpr std::size_t kCircuitSearchMaxCols = 22;

namespace detail {

// All circuits of the column matroid of m: inclusion-minimal supports of
// kernel vectors.  Each circuit is the fundamental dependency of its last
// column over an independent prefix, normalized so its lexicographically
// least label has coefficient 1.
inline std::vector<Chain> matrix_circuits(const SparseMatrix& m) {
  if (m.cols() > kCircuitSearchMaxCols)
    throw InstanceTooLarge("circuit search supports at most " +
                           std::to_string(kCircuitSearchMaxCols) +
                           " faces, got " + std::to_string(m.cols()));
  Fp fp(m.p);
  GaussianEliminator elim(m.rows(), fp);
  std::vector<int> chosen;
  std::set<std::vector<int>> seen;
  std::vector<Chain> out;

  auto record = [&](const std::vector<std::pair<int, Scalar>>& dep, int j) {
    std::vector<int> support;
    Chain z(m.col_dim, m.p);
    for (const auto& [k, c] : dep) {
      int col = k < static_cast<int>(chosen.size())
                    ? chosen[static_cast<std::size_t>(k)]
                    : j;
      support.push_back(col);
      z.set_coeff(m.col_labels[static_cast<std::size_t>(col)], c);
    }
    std::sort(support.begin(), support.end());
    if (!seen.insert(support).second) return;
    // Normalize on the lexicographically least member of the support.
    Scalar lead = z.terms().begin()->second;
    z.scale(fp.inv(lead));
    out.push_back(std::move(z));
  };

  auto rec = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t j = start; j < m.cols(); ++j) {
      auto dep = elim.push(m.columns[j]);
      if (dep) {
        record(*dep, static_cast<int>(j));
        elim.pop();
      } else {
        chosen.push_back(static_cast<int>(j));
        self(self, j + 1);
        chosen.pop_back();
        elim.pop();
      }
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

// Circuits of the boundary matroid on the given d-faces: the simple cycles
// with inclusion-minimal support.
inline std::vector<Chain> enumerate_circuits(const std::vector<Simplex>& faces,
                                             std::uint64_t p) {
  if (faces.empty()) return {};
  return detail::matrix_circuits(boundary_matrix_restricted(faces, p));
}

// Cocircuits of the coboundary matroid on the given d-faces over [n]: the
// hypercuts whose support lies in the face list.
inline std::vector<Chain> enumerate_cocircuits(const std::vector<Simplex>& faces,
                                               int n, std::uint64_t p) {
  if (faces.empty()) return {};
  return detail::matrix_circuits(coboundary_matrix_restricted(faces, n, p));
}

// All d-hypercuts of the complete complex on n vertices.
inline std::vector<Chain> enumerate_hypercuts(int n, int d, std::uint64_t p) {
  if (d < 0 || d > n - 1)
    throw InvalidParameter("hypercut dimension out of range");
  return enumerate_cocircuits(all_faces_of_dim(n, d), n, p);
}

// Partition of the face list under the relation "lie on a common circuit",
// closed reflexively and transitively.  Faces on no circuit are singleton
// classes.
inline std::vector<std::vector<Simplex>> biconnected_classes(
    const std::vector<Simplex>& faces, std::uint64_t p) {
  std::vector<Simplex> sorted = faces;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = i;

  std::vector<std::size_t> parent(sorted.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const Chain& z : enumerate_circuits(sorted, p)) {
    auto it = z.terms().begin();
    std::size_t root = find(index.at(it->first));
    for (++it; it != z.terms().end(); ++it)
      parent[find(index.at(it->first))] = root;
  }

  std::map<std::size_t, std::vector<Simplex>> groups;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    groups[find(i)].push_back(sorted[i]);
  std::vector<std::vector<Simplex>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace facetlab
