#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "uberdh/graph.hpp"

namespace uberdh {

inline constexpr int kMaxVertices = 62;

/// Subset of {0, ..., m-1} as a bitmask. Also used for faces: a face is
/// the set of its vertices, oriented by increasing vertex index.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  static VertexSet of(const std::vector<int>& vertices);
  static constexpr VertexSet full(int m) { return VertexSet(m == 64 ? ~0ULL : ((1ULL << m) - 1)); }
  static constexpr VertexSet single(int v) { return VertexSet(1ULL << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1ULL; }
  constexpr bool contains(VertexSet o) const { return (o.bits_ & ~bits_) == 0; }
  /// Number of elements strictly below v.
  constexpr int count_below(int v) const { return std::popcount(bits_ & ((1ULL << v) - 1)); }
  constexpr int count_above(int v) const { return std::popcount(bits_ >> v) - (contains(v) ? 1 : 0); }

  std::vector<int> vertices() const;

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (1ULL << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(1ULL << v)); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order of increasing vertex lists, for sets of equal size:
/// the set holding the smallest element of the symmetric difference wins.
inline bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t x = a.bits() ^ b.bits();
  return x != 0 && (a.bits() & (x & (~x + 1))) != 0;
}

/// Order used for basis enumeration: by dimension, then lexicographic.
inline bool face_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

using Simplex = VertexSet;

/// Finite abstract simplicial complex given by its facets.
class SimplicialComplex {
 public:
  /// The empty complex on m vertices (only the empty face).
  static SimplicialComplex empty(int m = 0);

  /// Reduces to maximal facets. Throws VertexOutOfRange or GhostVertex.
  static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets);
  static SimplicialComplex from_facet_sets(int m, std::vector<VertexSet> facets);

  int vertex_count() const { return m_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  VertexSet vertex_set() const { return VertexSet::full(m_); }
  bool is_empty() const { return facets_.empty(); }
  int dimension() const;  // -1 for the empty complex

  bool contains_face(VertexSet sigma) const;

  /// All d-faces in lexicographic order; d = -1 gives the empty face.
  std::vector<Simplex> faces_of_dim(int d) const;
  /// Faces grouped by dimension 0..dimension().
  std::vector<std::vector<Simplex>> faces_by_dim() const;
  std::vector<std::size_t> f_vector() const;

  /// Original labels of the vertices (identity unless this complex came
  /// from induced()).
  const std::vector<int>& labels() const { return labels_; }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.facets_ == b.facets_;
  }

 private:
  int m_ = 0;
  std::vector<VertexSet> facets_;  // sorted by face_less
  std::vector<int> labels_;
  friend SimplicialComplex induced(const SimplicialComplex&, VertexSet);
};

/// K[I], reindexed onto |I| vertices; labels() keeps the original indices.
SimplicialComplex induced(const SimplicialComplex& k, VertexSet subset);
SimplicialComplex antistar(const SimplicialComplex& k, int v);

/// Faces of K contained in `subset`, in global labels, grouped by dimension.
std::vector<std::vector<Simplex>> faces_within(const std::vector<std::vector<Simplex>>& all_faces, VertexSet subset);

Graph one_skeleton(const SimplicialComplex& k);
bool is_simplex(const SimplicialComplex& k);
bool is_connected(const SimplicialComplex& k);

/// Relabel vertex v as perm[v].
SimplicialComplex permute(const SimplicialComplex& k, const std::vector<int>& perm);

// Generators.
SimplicialComplex simplex(int m);
SimplicialComplex boundary_simplex(int m);
SimplicialComplex cycle(int n);
SimplicialComplex icosahedron();
SimplicialComplex flag_complex(const Graph& g);

}  // namespace uberdh
