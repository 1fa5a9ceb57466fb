#pragma once

// Hochster decomposition of the homology of the moment-angle complex and
// its double homology. Bidegrees are stored as (k, l) and displayed as
// (-k, 2l); the summand from K[I] with |I| = l sits in simplicial degree
// p = l - k - 1.

#include "uberdh/cube.hpp"
#include "uberdh/homology.hpp"

namespace uberdh {

inline std::pair<int, int> hochster_display(int k, int l) { return {-k, 2 * l}; }

/// H_{-k,2l} as the direct sum over l-subsets I of H~_{l-k-1}(K[I]).
template <class Scalar>
BigradedTable hochster_table(const SubsetHomologyTable<Scalar>& table) {
  if (!table.reduced()) throw std::invalid_argument("the Hochster table needs reduced homology");
  const int m = table.vertex_count();
  BigradedTable out;
  for (int l = 0; l <= m; ++l) {
    std::map<int, GroupClass> by_degree;
    for (VertexSet s : subsets_of_size(m, l)) {
      for (const auto& [p, g] : table.graded(s)) {
        auto [it, fresh] = by_degree.try_emplace(p, GroupClass::zero(table.coefficients()));
        it->second += g;
      }
    }
    for (const auto& [p, g] : by_degree) put_nonzero(out, std::make_pair(l - p - 1, l), g);
  }
  return out;
}

/// Matrix of the differential from H_{-k,2l} to H_{-k-1,2l+2}, in the basis
/// ordered by subset (numeric) and then by each subset's homology basis.
template <class Scalar>
Matrix<Scalar> double_differential(const SubsetHomologyTable<Scalar>& table, int k, int l) {
  if (!table.reduced()) throw std::invalid_argument("the double differential needs reduced homology");
  require_free_table(table);
  const int p = l - k - 1;
  SubsetCubeSystem<SubsetHomologyTable<Scalar>> sys(table);
  const int slice = p - table.min_degree();
  if (slice < 0 || slice >= sys.slice_count() || l < 0 || l >= table.vertex_count()) {
    Index rows = 0, cols = 0;
    if (slice >= 0 && slice < sys.slice_count()) {
      for (VertexSet s : subsets_of_size(table.vertex_count(), l)) cols += sys.dim(s, slice);
      for (VertexSet s : subsets_of_size(table.vertex_count(), l + 1)) rows += sys.dim(s, slice);
    }
    return zero_matrix<Scalar>(rows, cols);
  }
  Matrix<Scalar> d = to_dense(cube_differential<Scalar>(sys, slice, l, CubeSign::BlackBefore, table.ring()));
  if ((p + 1) % 2 != 0) d = -d;
  return d;
}

/// Double homology, keyed by (k, l).
template <class Scalar>
BigradedTable double_homology(const SubsetHomologyTable<Scalar>& table) {
  if (!table.reduced()) throw std::invalid_argument("double homology needs reduced homology");
  require_free_table(table);
  SubsetCubeSystem<SubsetHomologyTable<Scalar>> sys(table);
  const CubeResult res = cube_homology(sys, CubeSign::BlackBefore, table.ring());
  BigradedTable out;
  for (int s = 0; s < sys.slice_count(); ++s) {
    const int p = sys.degree(s);
    for (const auto& [l, g] : res.slices[static_cast<std::size_t>(s)]) out[{l - p - 1, l}] = g;
  }
  return out;
}

template <class Scalar>
BigradedTable double_homology(const SimplicialComplex& k, const Ring<Scalar>& ring, TableOptions options = {}) {
  return double_homology(SubsetHomologyTable<Scalar>(k, true, ring, options));
}

/// Alternating sum of ranks along the diagonal l = k + 1.
inline long long diagonal_euler(const BigradedTable& dh) {
  long long sum = 0;
  for (const auto& [kl, g] : dh) {
    const auto [k, l] = kl;
    if (l != k + 1) continue;
    sum += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(g.rank());
  }
  return sum;
}

/// Sum of ranks over all bidegrees.
inline std::size_t total_rank(const BigradedTable& t) {
  std::size_t n = 0;
  for (const auto& [key, g] : t) n += g.rank();
  return n;
}

}  // namespace uberdh
