#pragma once

// Cochain complexes over the Boolean lattice of subsets of {0..m-1}.
//
// Level j holds one block per j-subset I (numeric order); the differential
// out of level j has the block sign(I, v) * edge_map(I, v) from I to I + v.
// A system supplies the blocks:
//
//   int   ground_size() const;
//   int   slice_count() const;
//   void  prepare_level(int j);   // data for level j must be available after this
//   void  release_level(int j);   // level j is no longer needed
//   Index dim(VertexSet I, int slice) const;
//   Matrix<Scalar> edge_map(VertexSet I, int v, int slice) const;   // dim(I+v) x dim(I)
//
// Slices are independent complexes sharing the cube (weights, rows, ...).

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uberdh/complex.hpp"
#include "uberdh/dense.hpp"
#include "uberdh/errors.hpp"
#include "uberdh/group.hpp"
#include "uberdh/parallel.hpp"
#include "uberdh/sparse.hpp"

namespace uberdh {

/// Sign assignments for cube edges I -> I + v.
enum class CubeSign {
  BlackBefore,  // (-1)^{#(I below v)}
  BlackAfter,   // (-1)^{#(I above v)}
  WhiteBefore,  // (-1)^{#((V - I) below v)}
};

inline int cube_sign(CubeSign convention, int m, VertexSet s, int v) {
  int count = 0;
  switch (convention) {
    case CubeSign::BlackBefore:
      count = s.count_below(v);
      break;
    case CubeSign::BlackAfter:
      count = s.count_above(v);
      break;
    case CubeSign::WhiteBefore:
      count = (VertexSet::full(m) - s).count_below(v);
      break;
  }
  return count % 2 == 0 ? 1 : -1;
}

/// j-subsets of {0..m-1} in increasing numeric order.
inline std::vector<VertexSet> subsets_of_size(int m, int j) {
  std::vector<VertexSet> out;
  if (j < 0 || j > m) return out;
  if (j == 0) return {VertexSet()};
  std::uint64_t s = (1ULL << j) - 1;
  const std::uint64_t limit = 1ULL << m;
  while (s < limit) {
    out.emplace_back(s);
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

/// Homology of every slice at every level, plus diagnostics.
struct CubeResult {
  std::vector<GradedGroup> slices;                // slices[s][j]
  std::vector<std::vector<Index>> chain_dims;     // chain_dims[s][j]
};

template <class Scalar, class System>
SparseMatrix<Scalar> cube_differential(const System& sys, int slice, int j, CubeSign convention,
                                       const Ring<Scalar>& ring) {
  const int m = sys.ground_size();
  const auto src = subsets_of_size(m, j);
  const auto dst = subsets_of_size(m, j + 1);
  std::map<std::uint64_t, Index> row_offset;
  Index rows = 0;
  for (VertexSet t : dst) {
    row_offset[t.bits()] = rows;
    rows += sys.dim(t, slice);
  }
  std::vector<Triplet<Scalar>> entries;
  Index col = 0;
  for (VertexSet s : src) {
    const Index width = sys.dim(s, slice);
    if (width > 0) {
      for (int v = 0; v < m; ++v) {
        if (s.contains(v)) continue;
        const VertexSet t = s.with(v);
        if (sys.dim(t, slice) == 0) continue;
        const Matrix<Scalar> block = sys.edge_map(s, v, slice);
        const Index r0 = row_offset.at(t.bits());
        const bool negate = cube_sign(convention, m, s, v) < 0;
        for (Index c = 0; c < block.cols(); ++c)
          for (Index r = 0; r < block.rows(); ++r)
            if (!is_zero(block(r, c))) entries.emplace_back(r0 + r, col + c, negate ? Scalar(-block(r, c)) : block(r, c));
      }
    }
    col += width;
  }
  (void)ring;
  return make_sparse<Scalar>(rows, col, entries);
}

/// Computes H^j of every slice. Each differential is checked against the
/// previous one (d d = 0) and NotAComplex is thrown otherwise.
template <class Scalar, class System>
CubeResult cube_homology(System& sys, CubeSign convention, const Ring<Scalar>& ring) {
  const int m = sys.ground_size();
  const int n_slices = sys.slice_count();
  CubeResult result;
  result.slices.resize(static_cast<std::size_t>(n_slices));
  result.chain_dims.resize(static_cast<std::size_t>(n_slices));

  std::vector<SparseMatrix<Scalar>> prev(static_cast<std::size_t>(n_slices));
  std::vector<RankInfo<Scalar>> prev_info(static_cast<std::size_t>(n_slices));
  sys.prepare_level(0);
  for (int j = 0; j <= m; ++j) {
    if (j < m) sys.prepare_level(j + 1);
    parallel_for(static_cast<std::size_t>(n_slices), [&](std::size_t s) {
      const int slice = static_cast<int>(s);
      SparseMatrix<Scalar> d;
      if (j < m) {
        d = cube_differential<Scalar>(sys, slice, j, convention, ring);
      } else {
        Index n = 0;
        for (VertexSet t : subsets_of_size(m, j)) n += sys.dim(t, slice);
        d = SparseMatrix<Scalar>(0, n);
      }
      if (j > 0 && !product_is_zero(d, prev[s]))
        throw NotAComplex("cube differential at level " + std::to_string(j) + ", slice " + std::to_string(slice));
      RankInfo<Scalar> info = rank_info(d, ring);
      const Index n = d.cols();
      result.chain_dims[s].push_back(n);
      const Index free_rank = n - info.rank - prev_info[s].rank;
      std::vector<BigInt> torsion;
      for (const auto& x : prev_info[s].divisors)
        if (x != 1) torsion.push_back(x);
      put_nonzero(result.slices[s], j,
                  GroupClass(ring.coefficients(), static_cast<std::size_t>(free_rank), std::move(torsion)));
      prev[s] = std::move(d);
      prev_info[s] = std::move(info);
    });
    if (j > 0) sys.release_level(j - 1);
  }
  sys.release_level(m);
  if (m > 0) sys.release_level(m - 1);
  return result;
}

/// A cube system whose vertex I carries degree-(row) homology of K[I] from a
/// subset table, with inclusion-induced edge maps. Slice s is degree
/// s + table.min_degree().
template <class Table>
class SubsetCubeSystem {
 public:
  using Scalar = std::decay_t<decltype(std::declval<Table>().ring().from_int(0))>;

  explicit SubsetCubeSystem(const Table& table) : table_(table) {}

  int ground_size() const { return table_.vertex_count(); }
  int slice_count() const { return table_.dimension() - table_.min_degree() + 1; }
  int degree(int slice) const { return slice + table_.min_degree(); }
  void prepare_level(int) {}
  void release_level(int) {}
  Index dim(VertexSet s, int slice) const { return table_.rank(s, degree(slice)); }
  Matrix<Scalar> edge_map(VertexSet s, int v, int slice) const { return table_.inclusion_map(s, v, degree(slice)); }

 private:
  const Table& table_;
};

/// Before the cube computation: over the integers every group must be free,
/// since the cube differential only sees free parts.
template <class Table>
void require_free_table(const Table& table) {
  if (table.coefficients().is_field()) return;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << table.vertex_count()); ++mask) {
    for (const auto& [deg, g] : table.graded(VertexSet(mask))) {
      if (!g.is_free()) throw TorsionObstruction("H_" + std::to_string(deg) + " of K" + VertexSet(mask).to_string());
    }
  }
}

}  // namespace uberdh
