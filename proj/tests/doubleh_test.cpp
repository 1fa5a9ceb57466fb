#include <doctest.h>

#include "support.hpp"
#include "uberdh/double_homology.hpp"

using namespace uberdh;
using testing::F2;
using testing::Q;
using testing::Rng;
using testing::Z;

namespace {

SimplicialComplex projective_plane() {
  return SimplicialComplex::from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4},
                                            {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

BigradedTable display(const BigradedTable& dh) {
  BigradedTable out;
  for (const auto& [kl, g] : dh) out[hochster_display(kl.first, kl.second)] = g;
  return out;
}

template <class S>
void check_square_zero(const SubsetHomologyTable<S>& t) {
  const int m = t.vertex_count();
  for (int l = 0; l + 1 < m; ++l)
    for (int p = -1; p <= t.dimension(); ++p) {
      const int k = l - p - 1;
      CHECK(is_zero_matrix(multiply(double_differential(t, k + 1, l + 1), double_differential(t, k, l))));
    }
}

}  // namespace

TEST_CASE("Hochster table of the triangle boundary") {
  const auto t = subset_homology_table(boundary_simplex(3), true, Ring<BigInt>{});
  // empty set in (0,0), the whole circle in H_{-1,6}
  CHECK(display(hochster_table(t)) == BigradedTable{{{0, 0}, Z()}, {{-1, 6}, Z()}});
  CHECK_THROWS(hochster_table(subset_homology_table(boundary_simplex(3), false, Ring<BigInt>{})));
}

TEST_CASE("double differential blocks") {
  const auto pts = subset_homology_table(SimplicialComplex::from_facets(2, {{0}, {1}}), true, Ring<BigInt>{});
  const auto d = double_differential(pts, 0, 0);
  CHECK(d.cols() == 1);
  CHECK(d.rows() == 0);
  const auto tri = subset_homology_table(boundary_simplex(3), true, Ring<BigInt>{});
  CHECK(double_differential(tri, 1, 2).cols() == 0);
  // two non-adjacent points of C_4 into the paths through a third vertex
  const auto c4 = subset_homology_table(cycle(4), true, Ring<BigInt>{});
  const auto e = double_differential(c4, 1, 2);
  CHECK(e.cols() == 2);
  CHECK(e.rows() == 0);
  const auto into_c4 = double_differential(c4, 1, 3);
  CHECK(into_c4.cols() == 0);
  CHECK(into_c4.rows() == 1);
}

TEST_CASE("double homology of boundary spheres") {
  for (int m = 3; m <= 6; ++m) {
    const auto dh = double_homology(boundary_simplex(m), Ring<BigInt>{});
    CHECK(display(dh) == BigradedTable{{{0, 0}, Z()}, {{-1, 2 * m}, Z()}});
  }
}

TEST_CASE("double homology of cycles") {
  for (int n = 5; n <= 8; ++n) {
    const auto dh = double_homology(cycle(n), Ring<BigInt>{});
    CHECK(display(dh) == BigradedTable{{{0, 0}, Z()}, {{-1, 4}, Z()}, {{-n + 3, 2 * (n - 2)}, Z()}, {{-n + 2, 2 * n}, Z()}});
  }
}

TEST_CASE("double homology of simplices") {
  for (int m = 1; m <= 6; ++m) CHECK(double_homology(simplex(m), Ring<BigInt>{}) == BigradedTable{{{0, 0}, Z()}});
}

TEST_CASE("icosahedron over F2") {
  const auto dh = double_homology(icosahedron(), Ring<Zp>{2});
  CHECK(display(dh) == BigradedTable{{{0, 0}, F2()},
                                     {{-1, 4}, F2()},
                                     {{-4, 10}, F2(10)},
                                     {{-5, 14}, F2(10)},
                                     {{-8, 20}, F2()},
                                     {{-9, 24}, F2()}});
}

TEST_CASE("diagonal Euler characteristic") {
  CHECK(diagonal_euler(double_homology(boundary_simplex(3), Ring<Rational>{})) == 0);
  CHECK(diagonal_euler(double_homology(cycle(5), Ring<Rational>{})) == 0);
  for (int m = 1; m <= 5; ++m) CHECK(diagonal_euler(double_homology(simplex(m), Ring<Rational>{})) == 0);
  // C_5 diagonal: (k,l) = (1,2) and (2,3)
  const auto c5 = double_homology(cycle(5), Ring<Rational>{});
  CHECK(c5.count({1, 2}) == 1);
  CHECK(c5.count({2, 3}) == 1);
}

TEST_CASE("the double differential squares to zero") {
  Rng rng(51);
  for (int t = 0; t < 40; ++t) {
    const auto k = random_complex(2 + static_cast<int>(rng() % 6), rng);
    check_square_zero(subset_homology_table(k, true, Ring<Rational>{}));
    check_square_zero(subset_homology_table(k, true, Ring<Zp>{2}));
  }
}

TEST_CASE("bidegree (0,0) always carries the coefficient ring") {
  Rng rng(52);
  for (int t = 0; t < 60; ++t) {
    const auto k = random_complex(1 + static_cast<int>(rng() % 6), rng);
    CHECK(double_homology(k, Ring<Rational>{}).at({0, 0}) == Q());
    CHECK(double_homology(k, Ring<Zp>{3}).at({0, 0}).rank() == 1);
  }
}

TEST_CASE("Euler characteristic along each differential line is preserved") {
  Rng rng(53);
  for (int t = 0; t < 40; ++t) {
    const auto k = random_complex(2 + static_cast<int>(rng() % 5), rng);
    const auto table = subset_homology_table(k, true, Ring<Rational>{});
    const auto chains = hochster_table(table);
    const auto dh = double_homology(table);
    std::map<int, long long> chi_chains, chi_dh;
    for (const auto& [kl, g] : chains) chi_chains[kl.second - kl.first - 1] += (kl.second % 2 ? -1 : 1) * static_cast<long long>(g.rank());
    for (const auto& [kl, g] : dh) chi_dh[kl.second - kl.first - 1] += (kl.second % 2 ? -1 : 1) * static_cast<long long>(g.rank());
    for (int p = -1; p <= k.dimension(); ++p) CHECK(chi_chains[p] == chi_dh[p]);
  }
}

TEST_CASE("total rank detects simplices on all small complexes") {
  int count = 0;
  for (int m = 1; m <= 4; ++m)
    for (const auto& k : testing::all_complexes(m)) {
      CHECK_MESSAGE((total_rank(double_homology(k, Ring<Rational>{})) == 1) == is_simplex(k), testing::describe(k));
      ++count;
    }
  CHECK(count == 1 + 2 + 9 + 114);
}

TEST_CASE("flag complexes of chordal graphs") {
  Rng rng(54);
  const BigradedTable expected{{{0, 0}, Q()}, {{-1, 4}, Q()}};
  int tested = 0;
  while (tested < 30) {
    const Graph g = random_chordal_graph(2 + static_cast<int>(rng() % 7), rng);
    const auto k = flag_complex(g);
    if (is_simplex(k)) continue;
    CHECK_MESSAGE(display(double_homology(k, Ring<Rational>{})) == expected, testing::describe(k));
    ++tested;
  }
}

TEST_CASE("torsion in subset homology blocks integral double homology") {
  CHECK_THROWS_AS(double_homology(projective_plane(), Ring<BigInt>{}), TorsionObstruction);
  CHECK_NOTHROW(double_homology(projective_plane(), Ring<Zp>{2}));
}

TEST_CASE("double homology is invariant under relabelling and sign choice") {
  Rng rng(55);
  for (int t = 0; t < 30; ++t) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const auto k = random_complex(m, rng);
    const auto dh = double_homology(k, Ring<Rational>{});
    CHECK(double_homology(permute(k, testing::random_permutation(m, rng)), Ring<Rational>{}) == dh);
    const auto table = subset_homology_table(k, true, Ring<Rational>{});
    SubsetCubeSystem<SubsetHomologyTable<Rational>> sys(table);
    for (CubeSign sign : {CubeSign::BlackAfter, CubeSign::WhiteBefore}) {
      const auto res = cube_homology(sys, sign, table.ring());
      BigradedTable other;
      for (int s = 0; s < sys.slice_count(); ++s)
        for (const auto& [l, g] : res.slices[static_cast<std::size_t>(s)]) other[{l - sys.degree(s) - 1, l}] = g;
      CHECK(other == dh);
    }
  }
}

TEST_CASE("field and integer ranks agree on torsion-free input") {
  Rng rng(56);
  for (int t = 0; t < 30; ++t) {
    const auto k = random_complex(2 + static_cast<int>(rng() % 5), rng);
    const auto z = double_homology(k, Ring<BigInt>{});
    const auto q = double_homology(k, Ring<Rational>{});
    CHECK(z.size() == q.size());
    for (const auto& [kl, g] : z) {
      CHECK(q.count(kl) == 1);
      if (q.count(kl)) CHECK(g.rank() == q.at(kl).rank());
    }
  }
}
