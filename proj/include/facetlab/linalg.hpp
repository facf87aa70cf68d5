#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "facetlab/chain.hpp"
#include "facetlab/complex.hpp"

namespace facetlab {

// Sparse column: (row index, nonzero value) pairs sorted by row index.
using SparseCol = std::vector<std::pair<int, Scalar>>;

// Column-sparse matrix over GF(p) with simplex-labeled rows and columns.
// Row and column label lists are lexicographically sorted by the builders.
struct SparseMatrix {
  std::vector<Simplex> row_labels;
  std::vector<Simplex> col_labels;
  std::vector<SparseCol> columns;
  int row_dim = -1;  // dimension of the row labels
  int col_dim = -1;  // dimension of the column labels
  std::uint64_t p = 2;

  std::size_t rows() const { return row_labels.size(); }
  std::size_t cols() const { return col_labels.size(); }
};

// Incremental exact Gaussian elimination by column reduction.  Columns are
// pushed left to right; each is reduced against the pivots installed so
// far, where the pivot of a column is its bottom-most nonzero row.  pop()
// undoes the most recent push, which makes the eliminator usable as the
// backtracking state of a search.
class GaussianEliminator {
 public:
  GaussianEliminator(std::size_t nrows, const Fp& fp)
      : fp_(fp), pivot_col_(nrows, -1) {}

  // Dependency of the pushed column on earlier ones, when it reduces to
  // zero: coefficients over pushed-column indices, including the new column
  // itself with coefficient 1.  Independent pushes return std::nullopt.
  std::optional<std::vector<std::pair<int, Scalar>>> push(SparseCol col) {
    SparseCol combo{{static_cast<int>(cols_.size()), 1}};
    while (!col.empty()) {
      int low = col.back().first;
      int j = pivot_col_[static_cast<std::size_t>(low)];
      if (j < 0) break;
      Scalar factor =
          fp_.mul(col.back().second, fp_.inv(cols_[static_cast<std::size_t>(j)]
                                                 .reduced.back()
                                                 .second));
      axpy_neg(col, factor, cols_[static_cast<std::size_t>(j)].reduced);
      axpy_neg(combo, factor, cols_[static_cast<std::size_t>(j)].combo);
    }
    bool independent = !col.empty();
    int low = independent ? col.back().first : -1;
    cols_.push_back(Column{std::move(col), combo, low});
    if (independent) {
      pivot_col_[static_cast<std::size_t>(low)] =
          static_cast<int>(cols_.size()) - 1;
      ++rank_;
      return std::nullopt;
    }
    return combo;
  }

  void pop() {
    const Column& c = cols_.back();
    if (c.low >= 0) {
      pivot_col_[static_cast<std::size_t>(c.low)] = -1;
      --rank_;
    }
    cols_.pop_back();
  }

  int rank() const { return rank_; }
  std::size_t size() const { return cols_.size(); }

  // Expresses b in terms of the pushed columns: returns coefficients x with
  // sum x_j * col_j = b, or std::nullopt when b is outside the span.
  std::optional<std::map<int, Scalar>> express(SparseCol b) const {
    std::map<int, Scalar> x;
    while (!b.empty()) {
      int low = b.back().first;
      int j = pivot_col_[static_cast<std::size_t>(low)];
      if (j < 0) return std::nullopt;
      const Column& pc = cols_[static_cast<std::size_t>(j)];
      Scalar factor =
          fp_.mul(b.back().second, fp_.inv(pc.reduced.back().second));
      axpy_neg(b, factor, pc.reduced);
      // b -= factor * reduced_j and reduced_j = sum combo_j * original
      // columns, so accumulate factor * combo_j into x.
      for (const auto& [idx, v] : pc.combo) {
        Scalar& slot = x[idx];
        slot = fp_.add(slot, fp_.mul(factor, v));
        if (slot == 0) x.erase(idx);
      }
    }
    return x;
  }

 private:
  struct Column {
    SparseCol reduced;
    SparseCol combo;  // reduced = sum combo[i] * pushed_column[i]
    int low;          // pivot row, -1 when reduced to zero
  };

  // a -= factor * b on sorted sparse vectors.
  void axpy_neg(SparseCol& a, Scalar factor, const SparseCol& b) const {
    SparseCol out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, fp_.neg(fp_.mul(factor, b[j].second)));
        ++j;
      } else {
        Scalar v = fp_.sub(a[i].second, fp_.mul(factor, b[j].second));
        if (v != 0) out.emplace_back(a[i].first, v);
        ++i;
        ++j;
      }
    }
    a = std::move(out);
  }

  Fp fp_;
  std::vector<int> pivot_col_;
  std::vector<Column> cols_;
  int rank_ = 0;
};

// Boundary matrix of the d-faces of a complex: rows are the (d-1)-faces of
// the complex (the empty simplex when d = 0), columns the d-faces, both in
// lexicographic order.
inline SparseMatrix boundary_matrix(const Complex& k, int d, std::uint64_t p) {
  if (d < 0 || d > k.dim())
    throw InvalidParameter("boundary matrix dimension out of range");
  SparseMatrix m;
  m.p = p;
  m.row_dim = d - 1;
  m.col_dim = d;
  m.row_labels = d == 0 ? std::vector<Simplex>{Simplex()} : k.faces(d - 1);
  m.col_labels = k.faces(d);
  Fp fp(p);
  std::map<Simplex, int> row_of;
  for (std::size_t i = 0; i < m.row_labels.size(); ++i)
    row_of[m.row_labels[i]] = static_cast<int>(i);
  for (const Simplex& s : m.col_labels) {
    SparseCol col;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s.facet(i);
      auto it = row_of.find(f);
      if (it == row_of.end())
        throw InternalInconsistency("complex not closed at face " + f.str());
      col.emplace_back(it->second, fp.from_int(i % 2 == 0 ? 1 : -1));
    }
    std::sort(col.begin(), col.end());
    m.columns.push_back(std::move(col));
  }
  return m;
}

// Boundary matrix of an explicit list of equal-dimensional simplices; rows
// are the union of their codimension-1 faces.
inline SparseMatrix boundary_matrix_restricted(const std::vector<Simplex>& faces,
                                               std::uint64_t p) {
  SparseMatrix m;
  m.p = p;
  if (faces.empty()) return m;
  int d = faces.front().dim();
  for (const Simplex& s : faces)
    if (s.dim() != d)
      throw InvalidParameter("face list mixes dimensions " +
                             std::to_string(d) + " and " +
                             std::to_string(s.dim()));
  m.row_dim = d - 1;
  m.col_dim = d;
  m.col_labels = faces;
  std::sort(m.col_labels.begin(), m.col_labels.end());
  m.col_labels.erase(std::unique(m.col_labels.begin(), m.col_labels.end()),
                     m.col_labels.end());
  std::set<Simplex> rows;
  for (const Simplex& s : m.col_labels)
    for (std::size_t i = 0; i < s.size(); ++i) rows.insert(s.facet(i));
  m.row_labels.assign(rows.begin(), rows.end());
  std::map<Simplex, int> row_of;
  for (std::size_t i = 0; i < m.row_labels.size(); ++i)
    row_of[m.row_labels[i]] = static_cast<int>(i);
  Fp fp(p);
  for (const Simplex& s : m.col_labels) {
    SparseCol col;
    for (std::size_t i = 0; i < s.size(); ++i)
      col.emplace_back(row_of[s.facet(i)],
                       fp.from_int(i % 2 == 0 ? 1 : -1));
    std::sort(col.begin(), col.end());
    m.columns.push_back(std::move(col));
  }
  return m;
}

// Coboundary matrix over the ground set {1, ..., n}: columns are the given
// d-simplices, rows are all (d+1)-simplices over [n] incident to at least
// one column.
inline SparseMatrix coboundary_matrix_restricted(
    const std::vector<Simplex>& faces, int n, std::uint64_t p) {
  SparseMatrix m;
  m.p = p;
  if (faces.empty()) return m;
  int d = faces.front().dim();
  for (const Simplex& s : faces) {
    if (s.dim() != d) throw InvalidParameter("face list mixes dimensions");
    if (s.max_vertex() > n)
      throw InvalidParameter("face " + s.str() + " exceeds ground set");
  }
  m.row_dim = d + 1;
  m.col_dim = d;
  m.col_labels = faces;
  std::sort(m.col_labels.begin(), m.col_labels.end());
  m.col_labels.erase(std::unique(m.col_labels.begin(), m.col_labels.end()),
                     m.col_labels.end());
  std::set<Simplex> rows;
  for (const Simplex& s : m.col_labels)
    for (int u = 1; u <= n; ++u)
      if (!s.has_vertex(u)) rows.insert(s.with_vertex(u));
  m.row_labels.assign(rows.begin(), rows.end());
  std::map<Simplex, int> row_of;
  for (std::size_t i = 0; i < m.row_labels.size(); ++i)
    row_of[m.row_labels[i]] = static_cast<int>(i);
  Fp fp(p);
  for (const Simplex& s : m.col_labels) {
    SparseCol col;
    for (int u = 1; u <= n; ++u) {
      if (s.has_vertex(u)) continue;
      Simplex xi = s.with_vertex(u);
      col.emplace_back(row_of[xi], fp.from_int(incidence_sign(xi, s)));
    }
    std::sort(col.begin(), col.end());
    m.columns.push_back(std::move(col));
  }
  return m;
}

inline int rank(const SparseMatrix& m) {
  Fp fp(m.p);
  GaussianEliminator elim(m.rows(), fp);
  for (const SparseCol& c : m.columns) elim.push(c);
  return elim.rank();
}

struct SubspaceBasis {
  int dim = 0;
  std::vector<Chain> vectors;
};

// Basis of the kernel of m, as chains over the column labels.  Basis
// vectors are the dependency combinations produced by left-to-right column
// reduction, so the result is deterministic.
inline SubspaceBasis kernel_basis(const SparseMatrix& m) {
  Fp fp(m.p);
  GaussianEliminator elim(m.rows(), fp);
  SubspaceBasis basis;
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    auto dep = elim.push(m.columns[j]);
    if (!dep) continue;
    Chain v(m.col_dim, m.p);
    for (const auto& [idx, c] : *dep)
      v.set_coeff(m.col_labels[static_cast<std::size_t>(idx)], c);
    basis.vectors.push_back(std::move(v));
  }
  basis.dim = static_cast<int>(basis.vectors.size());
  return basis;
}

// Solves m * x = b for b given over the row labels.  Returns std::nullopt
// when the system is inconsistent; b = 0 yields the zero chain.
inline std::optional<Chain> solve(const SparseMatrix& m, const Chain& b) {
  if (b.dim() != m.row_dim && !(b.zero() && m.rows() == 0))
    throw InvalidParameter("right-hand side dimension mismatch");
  if (b.p() != m.p) throw InvalidParameter("right-hand side modulus mismatch");
  std::map<Simplex, int> row_of;
  for (std::size_t i = 0; i < m.row_labels.size(); ++i)
    row_of[m.row_labels[i]] = static_cast<int>(i);
  SparseCol rhs;
  for (const auto& [s, c] : b.terms()) {
    auto it = row_of.find(s);
    if (it == row_of.end()) return std::nullopt;  // b leaves the row space
    rhs.emplace_back(it->second, c);
  }
  std::sort(rhs.begin(), rhs.end());
  Fp fp(m.p);
  GaussianEliminator elim(m.rows(), fp);
  for (const SparseCol& c : m.columns) elim.push(c);
  auto x = elim.express(rhs);
  if (!x) return std::nullopt;
  Chain out(m.col_dim, m.p);
  for (const auto& [idx, c] : *x)
    out.set_coeff(m.col_labels[static_cast<std::size_t>(idx)], c);
  return out;
}

// Reduced Betti number over GF(p): dim ker boundary_d - rank boundary_{d+1},
// with the empty simplex materialized so that a point has all reduced Betti
// numbers zero.  Dimensions above dim(k) have no chains and return 0; the
// void complex has betti_reduced(-1) = 1.
inline int betti_reduced(const Complex& k, int d, std::uint64_t p) {
  if (d < -1) throw InvalidParameter("betti dimension below -1");
  auto rank_p = [&](int dd) -> int {
    if (dd < 0 || dd > k.dim() || k.face_count(dd) == 0) return 0;
    return rank(boundary_matrix(k, dd, p));
  };
  long long faces_d = d == -1 ? 1 : static_cast<long long>(k.face_count(d));
  return static_cast<int>(faces_d - rank_p(d) - rank_p(d + 1));
}

// Dimension of the space of cycles supported on the given equal-dimensional
// face list.
inline int cycle_space_dim(const std::vector<Simplex>& faces,
                           std::uint64_t p) {
  if (faces.empty()) return 0;
  SparseMatrix m = boundary_matrix_restricted(faces, p);
  return static_cast<int>(m.cols()) - rank(m);
}

}  // namespace facetlab
