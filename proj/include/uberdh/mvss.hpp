#pragma once

// Augmented Mayer-Vietoris spectral sequence of the anti-star cover.
//
// The intersection of the anti-stars of the vertices in a nerve simplex
// sigma is K[V - sigma], so the summand of E^1_{p,q} indexed by sigma is
// the homology of K[I] with I = V - sigma and |I| = m - p - 1. Column
// p = -1 is I = V (the complex itself); in the reduced variant the entry
// (m-1, -1) is H~_{-1}(K[empty]).

#include <string>
#include <unordered_map>
#include <vector>

#include "uberdh/cube.hpp"
#include "uberdh/homology.hpp"

namespace uberdh {

enum class MvssVariant { Unreduced, Reduced };

inline std::string to_string(MvssVariant v) { return v == MvssVariant::Reduced ? "reduced" : "unreduced"; }

template <class Scalar>
struct SpectralPage {
  MvssVariant variant = MvssVariant::Unreduced;
  int page = 1;
  BigradedTable entries;  // (p, q)
  /// delta^(1) out of (p, q), into (p - 1, q); filled on the first page only.
  std::map<std::pair<int, int>, Matrix<Scalar>> differentials;
};

inline MvssVariant variant_of(bool reduced) { return reduced ? MvssVariant::Reduced : MvssVariant::Unreduced; }

/// First-page groups from the per-subset groups (indexed by bitmask).
inline BigradedTable e1_entries(const std::vector<GradedGroup>& groups, int m, Coefficients c) {
  BigradedTable entries;
  for (int j = 0; j <= m; ++j) {
    const int p = m - j - 1;
    std::map<int, GroupClass> column;
    for (VertexSet s : subsets_of_size(m, j)) {
      for (const auto& [q, g] : groups[static_cast<std::size_t>(s.bits())]) {
        auto [it, fresh] = column.try_emplace(q, GroupClass::zero(c));
        it->second += g;
      }
    }
    for (const auto& [q, g] : column) put_nonzero(entries, std::make_pair(p, q), g);
  }
  return entries;
}

template <class Scalar>
SpectralPage<Scalar> e1_page(const SubsetHomologyTable<Scalar>& table, bool with_differentials = true,
                             CubeSign sign = CubeSign::WhiteBefore) {
  const int m = table.vertex_count();
  SpectralPage<Scalar> page;
  page.variant = variant_of(table.reduced());
  page.page = 1;
  page.entries = e1_entries(table.groups(), m, table.coefficients());
  if (with_differentials) {
    require_free_table(table);
    SubsetCubeSystem<SubsetHomologyTable<Scalar>> sys(table);
    for (int s = 0; s < sys.slice_count(); ++s) {
      for (int j = 0; j < m; ++j) {
        auto d = cube_differential<Scalar>(sys, s, j, sign, table.ring());
        if (d.rows() == 0 && d.cols() == 0) continue;
        page.differentials[{m - j - 1, sys.degree(s)}] = to_dense(d);
      }
    }
  }
  return page;
}

template <class Scalar>
SpectralPage<Scalar> e2_page(const SubsetHomologyTable<Scalar>& table, CubeSign sign = CubeSign::WhiteBefore) {
  require_free_table(table);
  const int m = table.vertex_count();
  SubsetCubeSystem<SubsetHomologyTable<Scalar>> sys(table);
  const CubeResult res = cube_homology(sys, sign, table.ring());
  SpectralPage<Scalar> page;
  page.variant = variant_of(table.reduced());
  page.page = 2;
  for (int s = 0; s < sys.slice_count(); ++s) {
    for (const auto& [j, g] : res.slices[static_cast<std::size_t>(s)]) page.entries[{m - j - 1, sys.degree(s)}] = g;
  }
  return page;
}

/// Alternating sum over p of the ranks in row q.
inline long long euler_row(const BigradedTable& entries, int q) {
  long long sum = 0;
  for (const auto& [pq, g] : entries) {
    if (pq.second != q) continue;
    sum += (pq.first % 2 == 0 ? 1 : -1) * static_cast<long long>(g.rank());
  }
  return sum;
}

template <class Scalar>
long long euler_row0(const SpectralPage<Scalar>& page) {
  return euler_row(page.entries, 0);
}

/// Builds the reduced augmented double complex at chain level (chains of
/// every K[V - sigma], the empty face in row -1) and reports whether its
/// total complex is acyclic. Needs a field.
template <class Scalar>
bool total_acyclicity_check(const SimplicialComplex& k, const Ring<Scalar>& ring, int max_vertices = 20) {
  static_assert(Ring<Scalar>::is_field, "the acyclicity check runs over a field");
  if (is_simplex(k)) throw IsSimplex();
  const int m = k.vertex_count();
  if (m > max_vertices) throw SizeCap(m, max_vertices);
  const auto all_faces = k.faces_by_dim();
  const int dim = k.dimension();

  // generators (I, tau), grouped by total degree n = p + q, shifted by 2
  struct Gen {
    VertexSet subset, face;
  };
  const int n_min = -2, n_max = (m - 1) + dim;
  std::vector<std::vector<Gen>> gens(static_cast<std::size_t>(n_max - n_min + 1));
  std::vector<std::unordered_map<std::uint64_t, Index>> index(gens.size());
  auto key = [](VertexSet s, VertexSet t) { return (s.bits() << 32) | t.bits(); };
  auto degree_of = [m](VertexSet s, VertexSet t) { return (m - s.size() - 1) + (t.size() - 1); };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const VertexSet s(mask);
    std::vector<Simplex> faces{VertexSet()};
    for (const auto& level : faces_within(all_faces, s))
      for (Simplex t : level) faces.push_back(t);
    for (Simplex t : faces) {
      const auto slot = static_cast<std::size_t>(degree_of(s, t) - n_min);
      index[slot][key(s, t)] = static_cast<Index>(gens[slot].size());
      gens[slot].push_back({s, t});
    }
  }

  const Scalar plus = ring.from_int(1), minus = ring.from_int(-1);
  // D_n : C_n -> C_{n-1}
  auto differential = [&](int n) {
    const auto src = static_cast<std::size_t>(n - n_min);
    const Index cols = static_cast<Index>(gens[src].size());
    if (n - 1 < n_min) return SparseMatrix<Scalar>(0, cols);
    const auto dst = src - 1;
    std::vector<Triplet<Scalar>> entries;
    for (Index c = 0; c < cols; ++c) {
      const auto [s, t] = gens[src][static_cast<std::size_t>(c)];
      const int p = m - s.size() - 1;
      for (int v = 0; v < m; ++v) {
        if (s.contains(v)) continue;
        const int sgn = cube_sign(CubeSign::WhiteBefore, m, s, v);
        entries.emplace_back(index[dst].at(key(s.with(v), t)), c, sgn > 0 ? plus : minus);
      }
      int r = 0;
      for (int v : t.vertices()) {
        const bool positive = ((r + p) % 2 + 2) % 2 == 0;
        entries.emplace_back(index[dst].at(key(s, t.without(v))), c, positive ? plus : minus);
        ++r;
      }
    }
    return make_sparse<Scalar>(static_cast<Index>(gens[dst].size()), cols, entries);
  };

  std::vector<Index> ranks(gens.size() + 1, 0);  // ranks[n - n_min] = rank D_n
  SparseMatrix<Scalar> prev;
  for (int n = n_min; n <= n_max; ++n) {
    SparseMatrix<Scalar> d = differential(n);
    if (n > n_min && !product_is_zero(prev, d)) throw NotAComplex("total complex of the anti-star double complex");
    ranks[static_cast<std::size_t>(n - n_min)] = sparse_rank(d, ring);
    prev = std::move(d);
  }
  for (int n = n_min; n <= n_max; ++n) {
    const auto slot = static_cast<std::size_t>(n - n_min);
    const Index h = static_cast<Index>(gens[slot].size()) - ranks[slot] - ranks[slot + 1];
    if (h != 0) return false;
  }
  return true;
}

}  // namespace uberdh
