#pragma once

// Bicolourings, horizontal homology and überhomology.
//
// A bicolouring is a VertexSet of black vertices. The weight of a face is
// its number of white vertices; the horizontal differential removes black
// vertices only and therefore preserves weight.

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "uberdh/chain.hpp"
#include "uberdh/complex.hpp"
#include "uberdh/cube.hpp"
#include "uberdh/homology.hpp"

namespace uberdh {

using Bicolouring = VertexSet;

inline int weight(Simplex sigma, Bicolouring black) { return (sigma - black).size(); }

using Bidegree = std::pair<int, int>;  // (dimension i, weight k)

/// Faces of K split by (dimension, weight), with the horizontal boundary
/// from (i, k) to (i - 1, k). No augmentation.
template <class Scalar>
struct HorizontalComplex {
  Bicolouring black;
  std::map<Bidegree, std::vector<Simplex>> faces;
  std::map<Bidegree, Matrix<Scalar>> boundaries;

  Index dim(Bidegree b) const {
    auto it = faces.find(b);
    return it == faces.end() ? 0 : static_cast<Index>(it->second.size());
  }
  Matrix<Scalar> boundary(Bidegree b) const {
    auto it = boundaries.find(b);
    if (it != boundaries.end()) return it->second;
    return zero_matrix<Scalar>(dim({b.first - 1, b.second}), dim(b));
  }
};

template <class Scalar>
HorizontalComplex<Scalar> horizontal_complex_from_faces(const std::vector<std::vector<Simplex>>& faces_by_dim,
                                                        Bicolouring black, const Ring<Scalar>& ring,
                                                        bool verify = true) {
  HorizontalComplex<Scalar> hc;
  hc.black = black;
  for (std::size_t d = 0; d < faces_by_dim.size(); ++d) {
    for (Simplex s : faces_by_dim[d]) hc.faces[{static_cast<int>(d), weight(s, black)}].push_back(s);
  }
  const Scalar plus = ring.from_int(1), minus = ring.from_int(-1);
  for (const auto& [b, list] : hc.faces) {
    if (b.first == 0) continue;
    const Bidegree lower{b.first - 1, b.second};
    Matrix<Scalar> m = zero_matrix<Scalar>(hc.dim(lower), static_cast<Index>(list.size()));
    const auto lit = hc.faces.find(lower);
    for (std::size_t c = 0; c < list.size(); ++c) {
      int r = 0;
      for (int v : list[c].vertices()) {
        if (black.contains(v)) {
          const Index row = face_index(lit->second, list[c].without(v));
          m(row, static_cast<Index>(c)) = (r % 2 == 0) ? plus : minus;
        }
        ++r;
      }
    }
    hc.boundaries[b] = std::move(m);
  }
  if (verify) {
    for (const auto& [b, list] : hc.faces) {
      if (b.first < 2) continue;
      if (!is_zero_matrix(multiply(hc.boundary({b.first - 1, b.second}), hc.boundary(b))))
        throw NotAComplex("horizontal boundary at " + std::to_string(b.first) + "," + std::to_string(b.second));
    }
  }
  return hc;
}

template <class Scalar>
HorizontalComplex<Scalar> horizontal_complex(const SimplicialComplex& k, Bicolouring black, const Ring<Scalar>& ring) {
  return horizontal_complex_from_faces(k.faces_by_dim(), black, ring);
}

/// Horizontal homology with bases, keyed by (dimension, weight).
template <class Scalar>
struct HorizontalHomology {
  Bicolouring black;
  std::map<Bidegree, std::vector<Simplex>> faces;
  std::map<Bidegree, HomologyBasis<Scalar>> bases;

  GroupClass group(Bidegree b, Coefficients c) const {
    auto it = bases.find(b);
    return it == bases.end() ? GroupClass::zero(c) : it->second.group;
  }
  const HomologyBasis<Scalar>* basis(Bidegree b) const {
    auto it = bases.find(b);
    return it == bases.end() ? nullptr : &it->second;
  }
  const std::vector<Simplex>& faces_at(Bidegree b) const {
    static const std::vector<Simplex> none;
    auto it = faces.find(b);
    return it == faces.end() ? none : it->second;
  }
};

template <class Scalar>
HorizontalHomology<Scalar> horizontal_homology_from_faces(const std::vector<std::vector<Simplex>>& faces_by_dim,
                                                          Bicolouring black, const Ring<Scalar>& ring) {
  const auto hc = horizontal_complex_from_faces(faces_by_dim, black, ring, false);
  HorizontalHomology<Scalar> hh;
  hh.black = black;
  for (const auto& [b, list] : hc.faces) {
    auto hb = homology_basis(hc.boundary({b.first + 1, b.second}), hc.boundary(b), ring, false);
    if (!hb.group.is_zero()) hh.bases.emplace(b, std::move(hb));
  }
  hh.faces = hc.faces;
  return hh;
}

/// Groups of the horizontal homology; zero groups omitted.
template <class Scalar>
BigradedTable horizontal_homology(const SimplicialComplex& k, Bicolouring black, const Ring<Scalar>& ring) {
  const auto hh = horizontal_homology_from_faces(k.faces_by_dim(), black, ring);
  BigradedTable out;
  for (const auto& [b, hb] : hh.bases) put_nonzero(out, b, hb.group);
  return out;
}

/// Sign of the cube edge from `from` to `to`, which must differ by turning
/// exactly one white vertex black.
inline int uber_edge_sign(Bicolouring from, Bicolouring to) {
  const VertexSet flipped = to - from;
  if (!to.contains(from) || flipped.size() != 1) throw NotCubeEdge();
  return from.count_below(std::countr_zero(flipped.bits())) % 2 == 0 ? 1 : -1;
}

/// Signed edge map on horizontal homology in bidegree (i, k).
template <class Scalar>
Matrix<Scalar> uber_edge_map(const SimplicialComplex& k, Bicolouring from, Bicolouring to, Bidegree b,
                             const Ring<Scalar>& ring) {
  const int sign = uber_edge_sign(from, to);
  const auto faces = k.faces_by_dim();
  const auto src = horizontal_homology_from_faces(faces, from, ring);
  const auto dst = horizontal_homology_from_faces(faces, to, ring);
  const HomologyBasis<Scalar>* sb = src.basis(b);
  const HomologyBasis<Scalar>* tb = dst.basis(b);
  if (sb) require_free(*sb, "horizontal homology");
  if (tb) require_free(*tb, "horizontal homology");
  if (!sb || !tb) return zero_matrix<Scalar>(tb ? tb->size() : 0, sb ? sb->size() : 0);
  Matrix<Scalar> f = face_map_on_homology(src.faces_at(b), *sb, dst.faces_at(b), *tb, to - from);
  if (sign < 0) f = -f;
  return f;
}

/// Cube system of horizontal homologies; slice = one (i, k) bidegree.
/// Only the levels currently needed are kept in memory.
template <class Scalar>
class UberCubeSystem {
 public:
  UberCubeSystem(const SimplicialComplex& k, Ring<Scalar> ring)
      : m_(k.vertex_count()), faces_(k.faces_by_dim()), ring_(ring), cache_(std::size_t{1} << m_) {
    for (int i = 0; i <= k.dimension(); ++i)
      for (int w = 0; w <= i + 1; ++w) slices_.push_back({i, w});
  }

  int ground_size() const { return m_; }
  int slice_count() const { return static_cast<int>(slices_.size()); }
  Bidegree bidegree(int slice) const { return slices_[static_cast<std::size_t>(slice)]; }

  void prepare_level(int j) {
    const auto level = subsets_of_size(m_, j);
    parallel_for(level.size(), [&](std::size_t n) {
      auto& slot = cache_[static_cast<std::size_t>(level[n].bits())];
      if (slot) return;
      auto hh = std::make_unique<HorizontalHomology<Scalar>>(horizontal_homology_from_faces(faces_, level[n], ring_));
      for (const auto& [b, hb] : hh->bases) require_free(hb, "horizontal homology");
      slot = std::move(hh);
    });
  }
  void release_level(int j) {
    for (VertexSet s : subsets_of_size(m_, j)) cache_[static_cast<std::size_t>(s.bits())].reset();
  }

  Index dim(VertexSet s, int slice) const {
    const auto* b = at(s).basis(bidegree(slice));
    return b ? b->size() : 0;
  }
  Matrix<Scalar> edge_map(VertexSet s, int v, int slice) const {
    const Bidegree b = bidegree(slice);
    const auto& src = at(s);
    const auto& dst = at(s.with(v));
    return face_map_on_homology(src.faces_at(b), *src.basis(b), dst.faces_at(b), *dst.basis(b), VertexSet::single(v));
  }

 private:
  const HorizontalHomology<Scalar>& at(VertexSet s) const { return *cache_[static_cast<std::size_t>(s.bits())]; }

  int m_;
  std::vector<std::vector<Simplex>> faces_;
  Ring<Scalar> ring_;
  std::vector<Bidegree> slices_;
  std::vector<std::unique_ptr<HorizontalHomology<Scalar>>> cache_;
};

struct UberOptions {
  int max_vertices = 20;
  CubeSign sign = CubeSign::BlackBefore;
};

/// Full überhomology, keyed by (j, k, i).
template <class Scalar>
TriGradedTable uberhomology(const SimplicialComplex& k, const Ring<Scalar>& ring, UberOptions options = {}) {
  if (k.vertex_count() > options.max_vertices) throw SizeCap(k.vertex_count(), options.max_vertices);
  UberCubeSystem<Scalar> sys(k, ring);
  const CubeResult res = cube_homology(sys, options.sign, ring);
  TriGradedTable out;
  for (int s = 0; s < sys.slice_count(); ++s) {
    const auto [i, w] = sys.bidegree(s);
    for (const auto& [j, g] : res.slices[static_cast<std::size_t>(s)]) out[{j, w, i}] = g;
  }
  return out;
}

/// 0-degree überhomology from an unreduced subset table, keyed by (j, i).
template <class Scalar>
BigradedTable uber_zero_degree(const SubsetHomologyTable<Scalar>& table, CubeSign sign = CubeSign::BlackBefore) {
  if (table.reduced()) throw std::invalid_argument("0-degree überhomology needs the unreduced table");
  require_free_table(table);
  SubsetCubeSystem<SubsetHomologyTable<Scalar>> sys(table);
  const CubeResult res = cube_homology(sys, sign, table.ring());
  BigradedTable out;
  for (int s = 0; s < sys.slice_count(); ++s) {
    for (const auto& [j, g] : res.slices[static_cast<std::size_t>(s)]) out[{j, sys.degree(s)}] = g;
  }
  return out;
}

template <class Scalar>
BigradedTable uber_zero_degree(const SimplicialComplex& k, const Ring<Scalar>& ring, TableOptions options = {}) {
  return uber_zero_degree(SubsetHomologyTable<Scalar>(k, false, ring, options));
}

}  // namespace uberdh
