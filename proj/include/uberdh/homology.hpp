#pragma once

// Simplicial chain complexes, their homology, and the table of homologies
// of all induced subcomplexes K[I] with inclusion-induced maps.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uberdh/chain.hpp"
#include "uberdh/complex.hpp"
#include "uberdh/errors.hpp"
#include "uberdh/group.hpp"
#include "uberdh/parallel.hpp"

namespace uberdh {

template <class Scalar>
struct ChainComplex {
  bool reduced = false;
  int min_degree = 0;                       // -1 when reduced
  std::vector<std::vector<Simplex>> bases;  // bases[d - min_degree], lexicographic
  std::vector<Matrix<Scalar>> boundaries;   // boundaries[d - min_degree]: C_d -> C_{d-1}

  int max_degree() const { return min_degree + static_cast<int>(bases.size()) - 1; }
  Index dim(int d) const {
    if (d < min_degree || d > max_degree()) return 0;
    return static_cast<Index>(bases[static_cast<std::size_t>(d - min_degree)].size());
  }
  /// dim C_{d-1} x dim C_d; zero-sized outside the stored range.
  Matrix<Scalar> boundary(int d) const {
    if (d < min_degree || d > max_degree()) return zero_matrix<Scalar>(dim(d - 1), dim(d));
    return boundaries[static_cast<std::size_t>(d - min_degree)];
  }
};

/// Index of a face in a lexicographically sorted list, or -1.
inline Index face_index(const std::vector<Simplex>& faces, Simplex s) {
  auto it = std::lower_bound(faces.begin(), faces.end(), s, lex_less);
  if (it == faces.end() || *it != s) return -1;
  return static_cast<Index>(it - faces.begin());
}

/// Signed incidence matrix from d-faces to (d-1)-faces: removing the r-th
/// vertex (in increasing order) carries the sign (-1)^r.
template <class Scalar>
Matrix<Scalar> boundary_matrix(const std::vector<Simplex>& lower, const std::vector<Simplex>& upper,
                               const Ring<Scalar>& ring) {
  Matrix<Scalar> b = zero_matrix<Scalar>(static_cast<Index>(lower.size()), static_cast<Index>(upper.size()));
  const Scalar plus = ring.from_int(1), minus = ring.from_int(-1);
  for (std::size_t c = 0; c < upper.size(); ++c) {
    int r = 0;
    for (int v : upper[c].vertices()) {
      const Index row = face_index(lower, upper[c].without(v));
      if (row < 0) throw InputError("face list is not closed under taking faces");
      b(row, static_cast<Index>(c)) = (r % 2 == 0) ? plus : minus;
      ++r;
    }
  }
  return b;
}

/// Chain complex on explicit face lists (faces[d] = d-faces, lexicographic).
template <class Scalar>
ChainComplex<Scalar> chain_complex_from_faces(const std::vector<std::vector<Simplex>>& faces, bool reduced,
                                              const Ring<Scalar>& ring, bool verify = true) {
  ChainComplex<Scalar> cc;
  cc.reduced = reduced;
  cc.min_degree = reduced ? -1 : 0;
  if (reduced) {
    cc.bases.push_back({VertexSet()});
    cc.boundaries.push_back(zero_matrix<Scalar>(0, 1));
  }
  for (std::size_t d = 0; d < faces.size(); ++d) {
    cc.bases.push_back(faces[d]);
    if (d == 0) {
      Matrix<Scalar> aug = zero_matrix<Scalar>(reduced ? 1 : 0, static_cast<Index>(faces[0].size()));
      if (reduced)
        for (Index c = 0; c < aug.cols(); ++c) aug(0, c) = ring.from_int(1);
      cc.boundaries.push_back(std::move(aug));
    } else {
      cc.boundaries.push_back(boundary_matrix(faces[d - 1], faces[d], ring));
    }
  }
  if (verify) {
    for (int d = cc.min_degree + 1; d <= cc.max_degree(); ++d) {
      if (!is_zero_matrix(multiply(cc.boundary(d - 1), cc.boundary(d)))) {
        throw NotAComplex("simplicial boundary in degree " + std::to_string(d));
      }
    }
  }
  return cc;
}

template <class Scalar>
ChainComplex<Scalar> chain_complex(const SimplicialComplex& k, bool reduced, const Ring<Scalar>& ring) {
  return chain_complex_from_faces(k.faces_by_dim(), reduced, ring);
}

/// Homology groups in degrees min_degree..max_degree; zero groups omitted.
template <class Scalar>
GradedGroup homology(const ChainComplex<Scalar>& cc, const Ring<Scalar>& ring) {
  GradedGroup out;
  for (int d = cc.min_degree; d <= cc.max_degree(); ++d) {
    put_nonzero(out, d, homology_quotient(cc.boundary(d + 1), cc.boundary(d), ring));
  }
  return out;
}

template <class Scalar>
GradedGroup homology(const SimplicialComplex& k, bool reduced, const Ring<Scalar>& ring) {
  return homology(chain_complex(k, reduced, ring), ring);
}

/// Map on homology induced by the chain map sending a face to itself when it
/// avoids `killed` and to zero otherwise. Surviving faces must occur in
/// dst_faces.
template <class Scalar>
Matrix<Scalar> face_map_on_homology(const std::vector<Simplex>& src_faces, const HomologyBasis<Scalar>& src,
                                    const std::vector<Simplex>& dst_faces, const HomologyBasis<Scalar>& dst,
                                    VertexSet killed) {
  const Index hs = src.size(), ht = dst.size();
  Matrix<Scalar> out = zero_matrix<Scalar>(ht, hs);
  if (hs == 0 || ht == 0) return out;
  for (std::size_t a = 0; a < src_faces.size(); ++a) {
    if (!(src_faces[a] & killed).empty()) continue;
    const Index b = face_index(dst_faces, src_faces[a]);
    if (b < 0) throw NotChainMap();
    for (Index c = 0; c < hs; ++c) {
      const Scalar& x = src.representatives(static_cast<Index>(a), c);
      if (is_zero(x)) continue;
      for (Index r = 0; r < ht; ++r) {
        const Scalar& y = dst.coordinates(r, b);
        if (!is_zero(y)) out(r, c) += y * x;
      }
    }
  }
  return out;
}

struct TableOptions {
  int max_vertices = 20;
  bool keep_bases = true;  // needed for inclusion maps
};

/// Homology of K[I] for every I subset of V, in global vertex labels.
template <class Scalar>
class SubsetHomologyTable {
 public:
  struct Entry {
    std::vector<std::vector<Simplex>> faces;   // faces of K[I] by dimension
    std::vector<GroupClass> groups;            // groups[d - min_degree]
    std::vector<HomologyBasis<Scalar>> bases;  // same indexing; empty without bases
  };

  SubsetHomologyTable(const SimplicialComplex& k, bool reduced, Ring<Scalar> ring, TableOptions options = {})
      : m_(k.vertex_count()), dim_(k.dimension()), reduced_(reduced), ring_(ring), has_bases_(options.keep_bases) {
    if (m_ > options.max_vertices) throw SizeCap(m_, options.max_vertices);
    const auto all_faces = k.faces_by_dim();
    entries_.resize(std::size_t{1} << m_);
    parallel_for(entries_.size(), [&](std::size_t mask) {
      Entry& e = entries_[mask];
      e.faces = faces_within(all_faces, VertexSet(mask));
      const auto cc = chain_complex_from_faces(e.faces, reduced_, ring_);
      for (int d = cc.min_degree; d <= cc.max_degree(); ++d) {
        if (has_bases_) {
          e.bases.push_back(homology_basis(cc.boundary(d + 1), cc.boundary(d), ring_, false));
          e.groups.push_back(e.bases.back().group);
        } else {
          e.groups.push_back(homology_quotient(cc.boundary(d + 1), cc.boundary(d), ring_));
        }
      }
    });
  }

  int vertex_count() const { return m_; }
  int dimension() const { return dim_; }
  bool reduced() const { return reduced_; }
  bool has_bases() const { return has_bases_; }
  const Ring<Scalar>& ring() const { return ring_; }
  Coefficients coefficients() const { return ring_.coefficients(); }
  int min_degree() const { return reduced_ ? -1 : 0; }
  const Entry& entry(VertexSet s) const { return entries_[static_cast<std::size_t>(s.bits())]; }

  GroupClass group(VertexSet s, int degree) const {
    const auto& g = entry(s).groups;
    const int i = degree - min_degree();
    if (i < 0 || i >= static_cast<int>(g.size())) return GroupClass::zero(coefficients());
    return g[static_cast<std::size_t>(i)];
  }

  GradedGroup graded(VertexSet s) const {
    GradedGroup out;
    const auto& g = entry(s).groups;
    for (std::size_t i = 0; i < g.size(); ++i) put_nonzero(out, static_cast<int>(i) + min_degree(), g[i]);
    return out;
  }

  /// Graded groups of every K[I], indexed by the bitmask of I.
  std::vector<GradedGroup> groups() const {
    std::vector<GradedGroup> out(entries_.size());
    for (std::size_t mask = 0; mask < entries_.size(); ++mask) out[mask] = graded(VertexSet(mask));
    return out;
  }

  /// Rank of the free part: the size of the homology basis.
  Index rank(VertexSet s, int degree) const { return static_cast<Index>(group(s, degree).rank()); }

  /// Matrix of H_p(K[I]) -> H_p(K[I + j]) in the stored bases.
  Matrix<Scalar> inclusion_map(VertexSet s, int j, int p) const {
    if (!has_bases_) throw std::logic_error("subset table was built without homology bases");
    if (s.contains(j)) throw std::invalid_argument("inclusion_map: vertex already in subset");
    const VertexSet t = s.with(j);
    const HomologyBasis<Scalar>* src = basis(s, p);
    const HomologyBasis<Scalar>* dst = basis(t, p);
    const Index hs = src ? src->size() : 0;
    const Index ht = dst ? dst->size() : 0;
    Matrix<Scalar> out = zero_matrix<Scalar>(ht, hs);
    if constexpr (!Ring<Scalar>::is_field) {
      if (src && !src->group.is_free()) throw TorsionObstruction("H_" + std::to_string(p) + " of K" + s.to_string());
      if (dst && !dst->group.is_free()) throw TorsionObstruction("H_" + std::to_string(p) + " of K" + t.to_string());
    }
    if (hs == 0 || ht == 0) return out;
    return face_map_on_homology(faces_in_degree(s, p), *src, faces_in_degree(t, p), *dst, VertexSet());
  }

 private:
  const HomologyBasis<Scalar>* basis(VertexSet s, int p) const {
    const auto& b = entry(s).bases;
    const int i = p - min_degree();
    if (i < 0 || i >= static_cast<int>(b.size())) return nullptr;
    return &b[static_cast<std::size_t>(i)];
  }
  const std::vector<Simplex>& faces_in_degree(VertexSet s, int p) const {
    static const std::vector<Simplex> empty_face{VertexSet()};
    if (p == -1) return empty_face;
    return entry(s).faces[static_cast<std::size_t>(p)];
  }

  int m_;
  int dim_;
  bool reduced_;
  Ring<Scalar> ring_;
  bool has_bases_;
  std::vector<Entry> entries_;
};

template <class Scalar>
SubsetHomologyTable<Scalar> subset_homology_table(const SimplicialComplex& k, bool reduced, const Ring<Scalar>& ring,
                                                  TableOptions options = {}) {
  return SubsetHomologyTable<Scalar>(k, reduced, ring, options);
}

}  // namespace uberdh
