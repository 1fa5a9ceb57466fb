#pragma once

// Exact dense linear algebra over a field. Nothing here pivots on magnitude:
// the first nonzero entry in a column is the pivot, so every result is a
// deterministic function of the input matrix.

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "uberdh/scalar.hpp"

namespace uberdh {

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
Matrix<Scalar> zero_matrix(Index rows, Index cols) {
  return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}

template <class Scalar>
Matrix<Scalar> identity_matrix(Index n, const Ring<Scalar>& ring) {
  Matrix<Scalar> id = zero_matrix<Scalar>(n, n);
  for (Index i = 0; i < n; ++i) id(i, i) = ring.from_int(1);
  return id;
}

template <class Scalar>
bool is_zero_matrix(const Matrix<Scalar>& a) {
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (!is_zero(a(i, j))) return false;
    }
  }
  return true;
}

/// Exact product; an empty inner dimension gives a zero matrix.
template <class Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out = zero_matrix<Scalar>(a.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) {
    for (Index k = 0; k < a.cols(); ++k) {
      const Scalar& bkj = b(k, j);
      if (is_zero(bkj)) continue;
      for (Index i = 0; i < a.rows(); ++i) {
        if (!is_zero(a(i, k))) out(i, j) += a(i, k) * bkj;
      }
    }
  }
  return out;
}

template <class Scalar>
struct Echelon {
  Matrix<Scalar> reduced;     // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

template <class Scalar>
Echelon<Scalar> reduced_row_echelon(Matrix<Scalar> a, const Ring<Scalar>& ring) {
  static_assert(Ring<Scalar>::is_field, "row reduction needs a field");
  Echelon<Scalar> out;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index piv = row;
    while (piv < a.rows() && is_zero(a(piv, col))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const Scalar inv = ring.inverse(a(row, col));
    for (Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      const Scalar factor = a(i, col);
      for (Index j = col; j < a.cols(); ++j) {
        if (!is_zero(a(row, j))) a(i, j) -= factor * a(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

template <class Scalar>
Index rank(const Matrix<Scalar>& a, const Ring<Scalar>& ring) {
  return static_cast<Index>(reduced_row_echelon(a, ring).pivots.size());
}

/// Basis of the null space, one column per free column of the echelon form,
/// in increasing order of the free column.
template <class Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& a, const Ring<Scalar>& ring) {
  const auto ech = reduced_row_echelon(a, ring);
  const Index n = a.cols();
  std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  Matrix<Scalar> basis = zero_matrix<Scalar>(n, n - static_cast<Index>(ech.pivots.size()));
  Index out = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, out) = ring.from_int(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      basis(ech.pivots[r], out) = -ech.reduced(static_cast<Index>(r), f);
    }
    ++out;
  }
  return basis;
}

/// Inverse of a square invertible matrix.
template <class Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& a, const Ring<Scalar>& ring) {
  const Index n = a.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = identity_matrix(n, ring);
  auto ech = reduced_row_echelon(std::move(aug), ring);
  if (static_cast<Index>(ech.pivots.size()) < n || (n > 0 && ech.pivots[static_cast<std::size_t>(n - 1)] >= n)) {
    throw std::domain_error("matrix is singular");
  }
  return ech.reduced.rightCols(n);
}

/// For a full column rank matrix b (n x c), a c x n matrix l with l * b = I.
/// Built from the first maximal set of independent rows of b.
template <class Scalar>
Matrix<Scalar> left_inverse(const Matrix<Scalar>& b, const Ring<Scalar>& ring) {
  const Index n = b.rows();
  const Index c = b.cols();
  Matrix<Scalar> bt = b.transpose();
  const auto rows = reduced_row_echelon(bt, ring).pivots;  // independent rows of b
  if (static_cast<Index>(rows.size()) != c) throw std::domain_error("left_inverse: rank deficient");
  Matrix<Scalar> square(c, c);
  for (Index r = 0; r < c; ++r) square.row(r) = b.row(rows[static_cast<std::size_t>(r)]);
  const Matrix<Scalar> inv = inverse(square, ring);
  Matrix<Scalar> l = zero_matrix<Scalar>(c, n);
  for (Index r = 0; r < c; ++r) l.col(rows[static_cast<std::size_t>(r)]) = inv.col(r);
  return l;
}

}  // namespace uberdh
