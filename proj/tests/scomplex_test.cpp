#include <doctest.h>

#include "support.hpp"
#include "uberdh/complex.hpp"
#include "uberdh/errors.hpp"
#include "uberdh/graph.hpp"

using namespace uberdh;
using testing::Rng;

namespace {

std::vector<VertexSet> sets(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<VertexSet> out;
  for (auto l : lists) {
    VertexSet s;
    for (int v : l) s = s.with(v);
    out.push_back(s);
  }
  return out;
}

bool facets_maximal(const SimplicialComplex& k) {
  for (VertexSet a : k.facets())
    for (VertexSet b : k.facets())
      if (a != b && b.contains(a)) return false;
  return true;
}

}  // namespace

TEST_CASE("from_facets keeps maximal facets") {
  auto tri = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.facets().size() == 3);
  CHECK(tri == boundary_simplex(3));
  auto full = SimplicialComplex::from_facets(3, {{0, 1, 2}, {0, 1}});
  CHECK(full.facets() == sets({{0, 1, 2}}));
}

TEST_CASE("ghost and out-of-range vertices are rejected") {
  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{0}}), GhostVertex);
  try {
    SimplicialComplex::from_facets(2, {{0}});
  } catch (const GhostVertex& e) {
    CHECK(e.vertex == 1);
  }
  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{0, 2}}), VertexOutOfRange);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{-1, 1}}), VertexOutOfRange);
  CHECK_THROWS_AS(cycle(2), CycleTooSmall);
}

TEST_CASE("induced subcomplexes") {
  const auto tri = boundary_simplex(3);
  const auto edge = induced(tri, VertexSet(0b011));
  CHECK(edge == simplex(2));
  CHECK(edge.labels() == std::vector<int>{0, 1});

  const auto c5 = cycle(5);
  const auto pts = induced(c5, VertexSet(0b101));
  CHECK(pts.vertex_count() == 2);
  CHECK(pts.facets() == sets({{0}, {1}}));
  CHECK(pts.labels() == std::vector<int>{0, 2});

  const auto none = induced(c5, VertexSet());
  CHECK(none.is_empty());
  CHECK(none.vertex_count() == 0);
  CHECK(none.dimension() == -1);
}

TEST_CASE("anti-stars") {
  CHECK(antistar(boundary_simplex(3), 0) == simplex(2));
  CHECK(antistar(simplex(3), 0) == simplex(2));
  const auto path = antistar(cycle(5), 0);
  CHECK(path.facets() == sets({{0, 1}, {1, 2}, {2, 3}}));
  CHECK(path.labels() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("faces in lexicographic order") {
  const auto tri = boundary_simplex(3);
  CHECK(tri.faces_of_dim(1) == sets({{0, 1}, {0, 2}, {1, 2}}));
  CHECK(tri.faces_of_dim(2).empty());
  CHECK(tri.faces_of_dim(-1) == std::vector<Simplex>{VertexSet()});
  CHECK(simplex(4).faces_of_dim(2) == sets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
}

TEST_CASE("one-skeleta") {
  CHECK(one_skeleton(simplex(4)) == Graph::complete(4));
  CHECK(one_skeleton(cycle(5)) == Graph::cycle(5));
  const auto pt = one_skeleton(simplex(1));
  CHECK(pt.vertex_count() == 1);
  CHECK(pt.edge_count() == 0);
}

TEST_CASE("generators") {
  CHECK(boundary_simplex(3).facets().size() == 3);
  CHECK(icosahedron().f_vector() == std::vector<std::size_t>{12, 30, 20});
  CHECK(flag_complex(Graph::complete(4)) == simplex(4));
  CHECK(flag_complex(Graph::cycle(5)) == cycle(5));
  CHECK(flag_complex(Graph::cycle(3)) == simplex(3));
}

TEST_CASE("predicates") {
  CHECK(is_simplex(simplex(5)));
  CHECK_FALSE(is_simplex(boundary_simplex(3)));
  CHECK(is_connected(boundary_simplex(3)));
  const auto two_points = SimplicialComplex::from_facets(2, {{0}, {1}});
  CHECK_FALSE(is_connected(two_points));
  CHECK_FALSE(is_simplex(two_points));
}

TEST_CASE("anti-star equals the induced complex on the remaining vertices") {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const auto k = random_complex(m, rng);
    for (int v = 0; v < m; ++v) CHECK(antistar(k, v) == induced(k, k.vertex_set().without(v)));
  }
}

TEST_CASE("induced subcomplexes compose") {
  Rng rng(12);
  for (int t = 0; t < 60; ++t) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const auto k = random_complex(m, rng);
    const VertexSet i(rng() % (std::uint64_t{1} << m));
    const auto ki = induced(k, i);
    const auto labels = ki.labels();
    for (std::uint64_t jp = 0; jp < (std::uint64_t{1} << ki.vertex_count()); ++jp) {
      VertexSet j;
      for (int a = 0; a < ki.vertex_count(); ++a)
        if ((jp >> a) & 1) j = j.with(labels[static_cast<std::size_t>(a)]);
      CHECK(induced(ki, VertexSet(jp)) == induced(k, j));
    }
  }
}

TEST_CASE("constructors produce maximal facets") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng() % 7);
    const auto k = random_complex(m, rng);
    CHECK(facets_maximal(k));
    CHECK(facets_maximal(induced(k, VertexSet(rng() % (std::uint64_t{1} << m)))));
  }
  for (int m = 1; m <= 7; ++m) {
    CHECK(facets_maximal(simplex(m)));
    CHECK(facets_maximal(boundary_simplex(m + 1)));
  }
  CHECK(facets_maximal(icosahedron()));
}

TEST_CASE("face counts of simplex boundaries") {
  auto binom = [](int n, int r) {
    long long c = 1;
    for (int i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
    return c;
  };
  for (int m = 2; m <= 8; ++m) {
    const auto k = boundary_simplex(m);
    for (int d = 0; d < m; ++d) {
      const auto expected = d < m - 1 ? binom(m, d + 1) : 0;
      CHECK(static_cast<long long>(k.faces_of_dim(d).size()) == expected);
    }
  }
}

TEST_CASE("face enumeration agrees with brute force") {
  Rng rng(14);
  for (int t = 0; t < 50; ++t) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const auto k = random_complex(m, rng);
    for (int d = 0; d <= k.dimension(); ++d) {
      const auto faces = k.faces_of_dim(d);
      auto brute = testing::oracle_faces(k, d);
      CHECK(faces.size() == brute.size());
      for (Simplex s : faces) CHECK(std::find(brute.begin(), brute.end(), s.bits()) != brute.end());
    }
  }
}

TEST_CASE("graph utilities") {
  const Graph c6 = Graph::cycle(6);
  CHECK(c6.is_connected());
  CHECK_FALSE(c6.is_chordal());
  CHECK(Graph::complete(5).is_chordal());
  CHECK(c6.maximal_cliques().size() == 6);
  Rng rng(15);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_chordal_graph(2 + static_cast<int>(rng() % 7), rng);
    CHECK(g.is_chordal());
    CHECK(g.is_connected());
  }
}

TEST_CASE("permutation relabels facets") {
  const auto k = SimplicialComplex::from_facets(3, {{0, 1}, {2}});
  const auto p = permute(k, {2, 0, 1});
  CHECK(p == SimplicialComplex::from_facets(3, {{0, 2}, {1}}));
}
