#include "uberdh/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "uberdh/errors.hpp"

namespace uberdh {

VertexSet VertexSet::of(const std::vector<int>& vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) bits |= 1ULL << v;
  return VertexSet(bits);
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : vertices()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

std::vector<VertexSet> maximal_only(std::vector<VertexSet> sets) {
  sets.erase(std::remove_if(sets.begin(), sets.end(), [](VertexSet s) { return s.empty(); }), sets.end());
  std::sort(sets.begin(), sets.end(), face_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < sets.size() && maximal; ++j) {
      if (sets[j].size() > sets[i].size() && sets[j].contains(sets[i])) maximal = false;
    }
    if (maximal) out.push_back(sets[i]);
  }
  return out;
}

std::vector<int> identity_labels(int m) {
  std::vector<int> l(static_cast<std::size_t>(m));
  std::iota(l.begin(), l.end(), 0);
  return l;
}

}  // namespace

SimplicialComplex SimplicialComplex::empty(int m) {
  SimplicialComplex k;
  k.m_ = m;
  k.labels_ = identity_labels(m);
  return k;
}

SimplicialComplex SimplicialComplex::from_facet_sets(int m, std::vector<VertexSet> facets) {
  if (m < 0 || m > kMaxVertices) throw InputError("vertex count must lie in 0.." + std::to_string(kMaxVertices));
  const VertexSet all = VertexSet::full(m);
  for (VertexSet f : facets) {
    if (!all.contains(f)) {
      const int bad = std::countr_zero((f - all).bits());
      throw VertexOutOfRange(bad, m);
    }
  }
  SimplicialComplex k;
  k.m_ = m;
  k.facets_ = maximal_only(std::move(facets));
  k.labels_ = identity_labels(m);
  VertexSet covered;
  for (VertexSet f : k.facets_) covered = covered | f;
  if (covered != all) throw GhostVertex(std::countr_zero((all - covered).bits()));
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(int m, const std::vector<std::vector<int>>& facets) {
  std::vector<VertexSet> sets;
  for (const auto& f : facets) {
    for (int v : f) {
      if (v < 0 || v >= m) throw VertexOutOfRange(v, m);
    }
    sets.push_back(VertexSet::of(f));
  }
  return from_facet_sets(m, std::move(sets));
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::contains_face(VertexSet sigma) const {
  if (sigma.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return f.contains(sigma); });
}

std::vector<std::vector<Simplex>> SimplicialComplex::faces_by_dim() const {
  std::vector<std::vector<Simplex>> out(static_cast<std::size_t>(dimension() + 1));
  for (VertexSet f : facets_) {
    // every nonempty subset of the facet
    const std::uint64_t full = f.bits();
    for (std::uint64_t s = full; s != 0; s = (s - 1) & full) {
      VertexSet face(s);
      out[static_cast<std::size_t>(face.size() - 1)].push_back(face);
    }
  }
  for (auto& level : out) {
    std::sort(level.begin(), level.end(), lex_less);
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::faces_of_dim(int d) const {
  if (d == -1) return {VertexSet()};
  if (d < -1 || d > dimension()) return {};
  return faces_by_dim()[static_cast<std::size_t>(d)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : faces_by_dim()) f.push_back(level.size());
  return f;
}

std::vector<std::vector<Simplex>> faces_within(const std::vector<std::vector<Simplex>>& all_faces, VertexSet subset) {
  std::vector<std::vector<Simplex>> out;
  for (const auto& level : all_faces) {
    std::vector<Simplex> kept;
    for (VertexSet f : level)
      if (subset.contains(f)) kept.push_back(f);
    if (kept.empty()) break;
    out.push_back(std::move(kept));
  }
  return out;
}

SimplicialComplex induced(const SimplicialComplex& k, VertexSet subset) {
  const std::vector<int> kept = (subset & k.vertex_set()).vertices();
  std::vector<int> new_index(static_cast<std::size_t>(k.vertex_count()), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) new_index[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
  std::vector<VertexSet> facets;
  for (VertexSet f : k.facets()) {
    std::uint64_t bits = 0;
    for (int v : (f & subset).vertices()) bits |= 1ULL << new_index[static_cast<std::size_t>(v)];
    facets.emplace_back(bits);
  }
  SimplicialComplex out;
  out.m_ = static_cast<int>(kept.size());
  out.facets_ = maximal_only(std::move(facets));
  for (int v : kept) out.labels_.push_back(k.labels()[static_cast<std::size_t>(v)]);
  return out;
}

SimplicialComplex antistar(const SimplicialComplex& k, int v) {
  if (v < 0 || v >= k.vertex_count()) throw VertexOutOfRange(v, k.vertex_count());
  return induced(k, k.vertex_set().without(v));
}

Graph one_skeleton(const SimplicialComplex& k) {
  Graph g(k.vertex_count());
  for (VertexSet f : k.facets()) {
    const auto vs = f.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
  }
  return g;
}

bool is_simplex(const SimplicialComplex& k) {
  return k.facets().size() == 1 && k.facets().front() == k.vertex_set();
}

bool is_connected(const SimplicialComplex& k) { return one_skeleton(k).is_connected(); }

SimplicialComplex permute(const SimplicialComplex& k, const std::vector<int>& perm) {
  std::vector<VertexSet> facets;
  for (VertexSet f : k.facets()) {
    std::uint64_t bits = 0;
    for (int v : f.vertices()) bits |= 1ULL << perm[static_cast<std::size_t>(v)];
    facets.emplace_back(bits);
  }
  if (k.is_empty()) return SimplicialComplex::empty(k.vertex_count());
  return SimplicialComplex::from_facet_sets(k.vertex_count(), std::move(facets));
}

SimplicialComplex simplex(int m) {
  if (m <= 0) return SimplicialComplex::empty(0);
  return SimplicialComplex::from_facet_sets(m, {VertexSet::full(m)});
}

SimplicialComplex boundary_simplex(int m) {
  if (m <= 1) throw InputError("boundary of a simplex needs at least 2 vertices");
  std::vector<VertexSet> facets;
  for (int v = 0; v < m; ++v) facets.push_back(VertexSet::full(m).without(v));
  return SimplicialComplex::from_facet_sets(m, std::move(facets));
}

SimplicialComplex cycle(int n) {
  if (n < 3) throw CycleTooSmall(n);
  std::vector<VertexSet> facets;
  for (int i = 0; i < n; ++i) facets.push_back(VertexSet::single(i).with((i + 1) % n));
  return SimplicialComplex::from_facet_sets(n, std::move(facets));
}

SimplicialComplex icosahedron() {
  // apex 0, upper ring 1..5, lower ring 6..10, apex 11
  std::vector<std::vector<int>> triangles;
  for (int i = 0; i < 5; ++i) {
    const int a = 1 + i, b = 1 + (i + 1) % 5, c = 6 + i, d = 6 + (i + 1) % 5;
    triangles.push_back({0, a, b});
    triangles.push_back({11, c, d});
    triangles.push_back({a, b, c});
    triangles.push_back({b, c, d});
  }
  return SimplicialComplex::from_facets(12, triangles);
}

SimplicialComplex flag_complex(const Graph& g) {
  std::vector<VertexSet> facets;
  for (std::uint64_t c : g.maximal_cliques()) facets.emplace_back(c);
  if (facets.empty()) return SimplicialComplex::empty(0);
  return SimplicialComplex::from_facet_sets(g.vertex_count(), std::move(facets));
}

}  // namespace uberdh
