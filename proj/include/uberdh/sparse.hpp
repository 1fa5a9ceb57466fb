#pragma once

// Sparse matrices for the Boolean-cube differentials, which have at most
// one nonzero block per cube edge.

#include <algorithm>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

#include "uberdh/dense.hpp"
#include "uberdh/errors.hpp"
#include "uberdh/smith.hpp"

namespace uberdh {

template <class Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::ColMajor, Index>;

template <class Scalar>
using Triplet = Eigen::Triplet<Scalar, Index>;

template <class Scalar>
SparseMatrix<Scalar> make_sparse(Index rows, Index cols, const std::vector<Triplet<Scalar>>& entries) {
  SparseMatrix<Scalar> m(rows, cols);
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

template <class Scalar>
Matrix<Scalar> to_dense(const SparseMatrix<Scalar>& s) {
  Matrix<Scalar> d = zero_matrix<Scalar>(s.rows(), s.cols());
  for (Index c = 0; c < s.outerSize(); ++c)
    for (typename SparseMatrix<Scalar>::InnerIterator it(s, c); it; ++it) d(it.row(), it.col()) = it.value();
  return d;
}

template <class Scalar>
SparseMatrix<Scalar> to_sparse(const Matrix<Scalar>& d) {
  std::vector<Triplet<Scalar>> entries;
  for (Index c = 0; c < d.cols(); ++c)
    for (Index r = 0; r < d.rows(); ++r)
      if (!is_zero(d(r, c))) entries.emplace_back(r, c, d(r, c));
  return make_sparse<Scalar>(d.rows(), d.cols(), entries);
}

namespace detail {

template <class Scalar>
using SparseColumn = std::vector<std::pair<Index, Scalar>>;  // sorted by row

// c <- c - factor * p
template <class Scalar>
void axpy_column(SparseColumn<Scalar>& c, const Scalar& factor, const SparseColumn<Scalar>& p) {
  SparseColumn<Scalar> out;
  out.reserve(c.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < c.size() || j < p.size()) {
    if (j == p.size() || (i < c.size() && c[i].first < p[j].first)) {
      out.push_back(std::move(c[i++]));
    } else if (i == c.size() || p[j].first < c[i].first) {
      out.emplace_back(p[j].first, -(factor * p[j].second));
      ++j;
    } else {
      Scalar v = c[i].second - factor * p[j].second;
      if (!is_zero(v)) out.emplace_back(c[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  c = std::move(out);
}

}  // namespace detail

/// Rank over a field by column reduction: each column is reduced against
/// earlier pivot columns keyed by their lowest nonzero row.
template <class Scalar>
Index sparse_rank(const SparseMatrix<Scalar>& a, const Ring<Scalar>& ring) {
  static_assert(Ring<Scalar>::is_field, "sparse_rank needs a field");
  std::vector<detail::SparseColumn<Scalar>> pivot_of_row(static_cast<std::size_t>(a.rows()));
  Index r = 0;
  for (Index c = 0; c < a.outerSize(); ++c) {
    detail::SparseColumn<Scalar> col;
    for (typename SparseMatrix<Scalar>::InnerIterator it(a, c); it; ++it)
      if (!is_zero(it.value())) col.emplace_back(it.row(), it.value());
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!col.empty()) {
      auto& piv = pivot_of_row[static_cast<std::size_t>(col.back().first)];
      if (piv.empty()) break;
      const Scalar factor = col.back().second * ring.inverse(piv.back().second);
      detail::axpy_column(col, factor, piv);
    }
    if (!col.empty()) {
      pivot_of_row[static_cast<std::size_t>(col.back().first)] = std::move(col);
      ++r;
    }
  }
  return r;
}

/// Rank together with the elementary divisors (integers) or an empty list
/// (fields, where every nonzero divisor is a unit).
template <class Scalar>
struct RankInfo {
  Index rank = 0;
  std::vector<BigInt> divisors;
};

template <class Scalar>
RankInfo<Scalar> rank_info(const SparseMatrix<Scalar>& a, const Ring<Scalar>& ring) {
  RankInfo<Scalar> info;
  if (a.rows() == 0 || a.cols() == 0) return info;
  if constexpr (Ring<Scalar>::is_field) {
    info.rank = sparse_rank(a, ring);
  } else {
    info.divisors = elementary_divisors(to_dense(a));
    info.rank = static_cast<Index>(info.divisors.size());
  }
  return info;
}

/// True iff b * a == 0.
template <class Scalar>
bool product_is_zero(const SparseMatrix<Scalar>& b, const SparseMatrix<Scalar>& a) {
  if (b.cols() != a.rows()) throw NotAComplex("dimension mismatch");
  std::vector<Scalar> acc(static_cast<std::size_t>(b.rows()), Scalar(0));
  std::vector<Index> touched;
  for (Index c = 0; c < a.outerSize(); ++c) {
    touched.clear();
    for (typename SparseMatrix<Scalar>::InnerIterator it(a, c); it; ++it) {
      for (typename SparseMatrix<Scalar>::InnerIterator jt(b, it.row()); jt; ++jt) {
        acc[static_cast<std::size_t>(jt.row())] += jt.value() * it.value();
        touched.push_back(jt.row());
      }
    }
    bool zero = true;
    for (Index r : touched) {
      auto& v = acc[static_cast<std::size_t>(r)];
      if (!is_zero(v)) zero = false;
      v = Scalar(0);
    }
    if (!zero) return false;
  }
  return true;
}

}  // namespace uberdh
