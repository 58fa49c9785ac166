// Dense exact linear algebra: vectors, matrices, Gaussian elimination with
// first-nonzero pivoting (deterministic), nullspace bases with lexicographic
// pivot choice, and lexicographic enumeration of F_p^n.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pax/errors.hpp"
#include "pax/field.hpp"

namespace pax {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

inline Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector size mismatch");
  Vec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector size mismatch");
  Vec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

inline Vec scale(const Scalar& c, const Vec& v) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(c * x);
  return r;
}

inline Vec negate(const Vec& v) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(-x);
  return r;
}

// Lexicographic order on equal-length vectors (entry order per Scalar::compare).
inline int compare(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("comparing vectors of unequal size");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = Scalar::compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ShapeError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_.at(i * cols_ + j); }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_.at(i * cols_ + j); }

  Vec row(std::size_t i) const {
    Vec r;
    r.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
  }

  Vec col(std::size_t j) const {
    Vec c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
  }

  // A x, x indexed by columns.
  Vec apply(const Vec& x) const {
    if (x.size() != cols_) throw ShapeError("apply: size mismatch");
    Vec r = zero_vec(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (x[j].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) r[i] = r[i] + at(i, j) * x[j];
    }
    return r;
  }

  Matrix mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
    if (field_ != o.field_) throw FieldMismatchError("matrix product field mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    return r;
  }

  Matrix add(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }

  Matrix transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
  }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

// Solution set of A x = b: empty, or an affine subspace given by one
// particular solution plus a nullspace basis.
struct SolutionSet {
  bool solvable = false;
  Vec particular;            // valid iff solvable
  std::vector<Vec> nullspace;  // basis of ker A (always filled)
};

namespace detail {

// In-place reduced row echelon form.  Pivot rule: columns scanned left to
// right, pivot row = first row (top to bottom) with a nonzero entry.  The
// rule is part of the library contract: every caller that needs canonical
// output (kernel bases, default sections, class representatives) relies on
// this determinism.
struct Rref {
  Matrix m;
  std::vector<std::size_t> pivot_col;  // per pivot row
};

inline Rref rref(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    const Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Scalar factor = m.at(i, c);
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(m), std::move(pivots)};
}

}  // namespace detail

// Kernel basis of A, one vector per free column in ascending column order:
// the free coordinate is 1, pivot coordinates are back-substituted, the rest
// are 0.
inline std::vector<Vec> nullspace_basis(const Matrix& a) {
  const auto red = detail::rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (const auto c : red.pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vec(a.field(), cols);
    v[j] = Scalar::one(a.field());
    for (std::size_t r = 0; r < red.pivot_col.size(); ++r)
      v[red.pivot_col[r]] = -red.m.at(r, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::size_t rank(const Matrix& a) { return detail::rref(a).pivot_col.size(); }

// Canonical basis (RREF rows) of the span of the given vectors.
inline std::vector<Vec> row_space_basis(const Field& f, const std::vector<Vec>& vectors,
                                        std::size_t n) {
  const auto red = detail::rref(Matrix::from_rows(f, vectors, n));
  std::vector<Vec> basis;
  for (std::size_t r = 0; r < red.pivot_col.size(); ++r) basis.push_back(red.m.row(r));
  return basis;
}

inline SolutionSet solve_linear(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw ShapeError("solve_linear: rhs size mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const auto red = detail::rref(std::move(aug));

  SolutionSet s;
  s.nullspace = nullspace_basis(a);
  for (const auto c : red.pivot_col)
    if (c == a.cols()) return s;  // row (0 ... 0 | 1): inconsistent
  s.solvable = true;
  s.particular = zero_vec(a.field(), a.cols());
  for (std::size_t r = 0; r < red.pivot_col.size(); ++r)
    s.particular[red.pivot_col[r]] = red.m.at(r, a.cols());

  // Back-substitution check; a failure here is a library bug, not bad input.
  if (a.apply(s.particular) != b) throw Error("solve_linear: verification failed");
  for (const auto& v : s.nullspace)
    if (!is_zero_vec(a.apply(v))) throw Error("solve_linear: kernel verification failed");
  return s;
}

// Right inverse with free coordinates set to 0 (the default section used by
// extraction).  Empty when A is not surjective.
inline std::optional<Matrix> right_inverse(const Matrix& a) {
  Matrix x(a.field(), a.cols(), a.rows());
  for (std::size_t j = 0; j < a.rows(); ++j) {
    const auto s = solve_linear(a, unit_vec(a.field(), a.rows(), j));
    if (!s.solvable) return std::nullopt;
    for (std::size_t i = 0; i < a.cols(); ++i) x.at(i, j) = s.particular[i];
  }
  return x;
}

// Streams all p^n vectors of F_p^n in lexicographic order: (0,...,0) first,
// last coordinate varying fastest, entries ordered 0 < 1 < ... < p-1.
class VectorEnumerator {
 public:
  VectorEnumerator(const Field& f, std::size_t n) : f_(f), cur_(n, 0) {
    if (!f.is_finite()) throw InfiniteFieldError("cannot enumerate vectors over Q");
  }

  std::optional<Vec> next() {
    if (done_) return std::nullopt;
    Vec out;
    out.reserve(cur_.size());
    for (const long long r : cur_) out.push_back(Scalar::of(f_, r));
    // Odometer increment from the rightmost coordinate.
    const long long p = f_.modulus();
    std::size_t i = cur_.size();
    while (i > 0) {
      --i;
      if (++cur_[i] < p) return out;
      cur_[i] = 0;
    }
    done_ = true;
    return out;
  }

 private:
  Field f_;
  std::vector<long long> cur_;
  bool done_ = false;
};

inline std::vector<Vec> enumerate_vectors(const Field& f, std::size_t n) {
  VectorEnumerator e(f, n);
  std::vector<Vec> all;
  while (auto v = e.next()) all.push_back(std::move(*v));
  return all;
}

}  // namespace pax
