#include <doctest.h>

#include "support.hpp"
#include "uberdh/chain.hpp"
#include "uberdh/dense.hpp"
#include "uberdh/errors.hpp"
#include "uberdh/group.hpp"
#include "uberdh/smith.hpp"
#include "uberdh/sparse.hpp"

using namespace uberdh;
using testing::IntRows;
using testing::Rng;

namespace {

IntMatrix to_int(const IntRows& rows, Index cols = -1) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<Index>(rows[0].size()));
  IntMatrix m = zero_matrix<BigInt>(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

template <class S>
Matrix<S> convert(const IntMatrix& a, const Ring<S>& ring) {
  Matrix<S> out = zero_matrix<S>(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = ring.from_int(a(i, j).convert_to<long long>());
  return out;
}

IntRows random_rows(Rng& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntRows a(r, std::vector<long long>(c));
  for (auto& row : a)
    for (auto& x : row) x = dist(rng);
  return a;
}

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("elementary divisors of small matrices") {
  CHECK(elementary_divisors(identity_matrix<BigInt>(3, Ring<BigInt>{})) == big({1, 1, 1}));
  CHECK(elementary_divisors(zero_matrix<BigInt>(3, 2)).empty());
  CHECK(elementary_divisors(to_int({{2, 4}, {6, 8}})) == big({2, 4}));
  // oracle for the 2x2 case: d1 = gcd of entries, d1 d2 = |det|
  const IntRows a{{2, 4}, {6, 8}};
  CHECK(testing::minor_gcd(a, 1) == 2);
  CHECK(std::abs(testing::minor_gcd(a, 2)) == 8);
}

TEST_CASE("Smith normal form satisfies the divisor chain and the minor-gcd identity") {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    const IntRows a = random_rows(rng, r, c, -5, 5);
    const auto snf = smith_normal_form(to_int(a), true);
    for (std::size_t i = 0; i < snf.divisors.size(); ++i) {
      CHECK(snf.divisors[i] > 0);
      if (i + 1 < snf.divisors.size()) CHECK(snf.divisors[i + 1] % snf.divisors[i] == 0);
    }
    // u a v is diagonal with the divisors; u, v invertible over Z
    const IntMatrix d = multiply(multiply(snf.u, to_int(a)), snf.v);
    for (Index i = 0; i < d.rows(); ++i)
      for (Index j = 0; j < d.cols(); ++j) {
        const BigInt expected = (i == j && i < snf.rank()) ? snf.divisors[static_cast<std::size_t>(i)] : BigInt(0);
        CHECK(d(i, j) == expected);
      }
    CHECK(multiply(snf.u, snf.u_inv) == identity_matrix<BigInt>(static_cast<Index>(r), Ring<BigInt>{}));
    CHECK(multiply(snf.v, snf.v_inv) == identity_matrix<BigInt>(static_cast<Index>(c), Ring<BigInt>{}));
    if (r <= 4 && c <= 4) {
      BigInt product = 1;
      for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        const long long g = testing::minor_gcd(a, k);
        if (k <= snf.divisors.size()) {
          product *= snf.divisors[k - 1];
          CHECK(BigInt(std::abs(g)) == product);
        } else {
          CHECK(g == 0);
        }
      }
    }
  }
}

TEST_CASE("rank via Smith form equals rank via fraction arithmetic") {
  Rng rng(22);
  const Ring<Rational> q;
  for (int t = 0; t < 200; ++t) {
    const IntRows a = random_rows(rng, 1 + rng() % 8, 1 + rng() % 8, -3, 3);
    const auto m = to_int(a);
    const auto expected = testing::oracle_rank_q(a);
    CHECK(static_cast<long long>(elementary_divisors(m).size()) == expected);
    CHECK(static_cast<long long>(rank(convert(m, q), q)) == expected);
    CHECK(static_cast<long long>(sparse_rank(to_sparse(convert(m, q)), q)) == expected);
  }
}

TEST_CASE("ranks over prime fields") {
  Rng rng(23);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Ring<Zp> f{p};
    for (int t = 0; t < 60; ++t) {
      const IntRows a = random_rows(rng, 1 + rng() % 7, 1 + rng() % 7, -6, 6);
      const auto expected = testing::oracle_rank_p(a, p);
      const auto m = convert(to_int(a), f);
      CHECK(static_cast<long long>(rank(m, f)) == expected);
      CHECK(static_cast<long long>(sparse_rank(to_sparse(m), f)) == expected);
    }
  }
}

TEST_CASE("prime-field arithmetic") {
  const Ring<Zp> f{7};
  const Zp a = f.from_int(3);
  CHECK((a * f.inverse(a)) == f.from_int(1));
  CHECK((a + f.from_int(5)) == f.from_int(1));
  CHECK((-a) == f.from_int(4));
  CHECK(f.from_int(-15) == f.from_int(6));
  CHECK_THROWS_AS(Coefficients::prime_field(9), InputError);
  CHECK(Coefficients::parse("fp:5") == Coefficients::prime_field(5));
  CHECK(Coefficients::parse("f2") == Coefficients::prime_field(2));
  CHECK(Coefficients::parse("z") == Coefficients::integers());
  CHECK_THROWS_AS(Coefficients::parse("fp:4"), InputError);
  CHECK_THROWS_AS(Coefficients::parse("r"), InputError);
}

TEST_CASE("group classes") {
  const auto z = Coefficients::integers();
  CHECK(GroupClass(z, 0, big({2, 3})) == GroupClass(z, 0, big({6})));
  CHECK(GroupClass(z, 1, big({4, 2})).torsion() == big({2, 4}));
  CHECK((GroupClass(z, 1, big({2})) + GroupClass(z, 2, big({3}))) == GroupClass(z, 3, big({6})));
  CHECK(GroupClass(z, 0, big({1})).is_zero());
  CHECK(GroupClass(z, 2, big({2})).to_string() == "Z^2 + Z/2");
  CHECK_THROWS(GroupClass(Coefficients::rationals(), 1, big({2})));
  CHECK(invariant_factors(big({4, 6, 1})) == big({2, 12}));
}

TEST_CASE("homology of two-step complexes") {
  const Ring<BigInt> zr;
  CHECK(homology_quotient(zero_matrix<BigInt>(2, 0), zero_matrix<BigInt>(0, 2), zr) == testing::Z(2));
  CHECK(homology_quotient(to_int({{2}}), zero_matrix<BigInt>(0, 1), zr) == testing::Z(0, big({2})));
  // the circle: vertices 0,1,2 and edges 01, 02, 12
  const IntMatrix d1 = to_int({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
  CHECK(homology_quotient(zero_matrix<BigInt>(3, 0), d1, zr) == testing::Z(1));
  const auto hb = homology_basis(zero_matrix<BigInt>(3, 0), d1, zr);
  CHECK(hb.size() == 1);
  CHECK(is_zero_matrix(multiply(d1, hb.representatives)));
}

TEST_CASE("homology over the integers agrees with the oracle and with reduction mod p") {
  Rng rng(24);
  for (int t = 0; t < 150; ++t) {
    const Index n = 1 + static_cast<Index>(rng() % 6);
    const IntRows in_rows = random_rows(rng, static_cast<std::size_t>(n), 1 + rng() % 5, -3, 3);
    const IntMatrix d_in = to_int(in_rows);
    // d_out: random combinations of the left kernel of d_in
    const auto snf = smith_normal_form(d_in, true);
    const Index kernel = n - snf.rank();
    const IntRows mix = random_rows(rng, 1 + rng() % 4, static_cast<std::size_t>(kernel), -2, 2);
    IntMatrix d_out = zero_matrix<BigInt>(static_cast<Index>(mix.size()), n);
    if (kernel > 0) d_out = multiply(to_int(mix, kernel), IntMatrix(snf.u.bottomRows(kernel)));
    REQUIRE(is_zero_matrix(multiply(d_out, d_in)));

    const GroupClass hz = homology_quotient(d_in, d_out, Ring<BigInt>{});
    IntRows out_rows(static_cast<std::size_t>(d_out.rows()), std::vector<long long>(static_cast<std::size_t>(n)));
    for (Index i = 0; i < d_out.rows(); ++i)
      for (Index j = 0; j < n; ++j) out_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d_out(i, j).convert_to<long long>();
    const long long oracle_free = n - testing::oracle_rank_q(in_rows) - testing::oracle_rank_q(out_rows);
    CHECK(static_cast<long long>(hz.rank()) == oracle_free);
    CHECK(homology_quotient(convert(d_in, Ring<Rational>{}), convert(d_out, Ring<Rational>{}), Ring<Rational>{}).rank() ==
          hz.rank());

    for (std::uint32_t p : {2u, 3u, 5u}) {
      const Ring<Zp> f{p};
      const auto hp = homology_quotient(convert(d_in, f), convert(d_out, f), f);
      // universal coefficients: extra classes from p-divisible divisors of both maps
      std::size_t extra = 0;
      for (const auto& d : hz.torsion())
        if (d % p == 0) ++extra;
      for (const auto& d : elementary_divisors(d_out))
        if (d % p == 0) ++extra;
      CHECK(hp.rank() == hz.rank() + extra);
      CHECK(static_cast<long long>(hp.rank()) ==
            n - testing::oracle_rank_p(in_rows, p) - testing::oracle_rank_p(out_rows, p));
      bool coprime = true;
      for (const auto& d : elementary_divisors(d_in)) coprime = coprime && d % p != 0;
      for (const auto& d : elementary_divisors(d_out)) coprime = coprime && d % p != 0;
      if (coprime) CHECK(hp.rank() == hz.rank());
    }
  }
}

TEST_CASE("homology bases are deterministic and represent the classes") {
  Rng rng(25);
  const Ring<Rational> q;
  for (int t = 0; t < 50; ++t) {
    const IntRows a = random_rows(rng, 2 + rng() % 4, 1 + rng() % 5, -2, 2);
    const auto d_in = convert(to_int(a), q);
    const auto b1 = homology_basis(d_in, zero_matrix<Rational>(0, d_in.rows()), q);
    const auto b2 = homology_basis(d_in, zero_matrix<Rational>(0, d_in.rows()), q);
    CHECK(b1.representatives == b2.representatives);
    CHECK(b1.coordinates == b2.coordinates);
    // coordinates of the representatives form the identity; boundaries have zero coordinates
    CHECK(multiply(b1.coordinates, b1.representatives) == identity_matrix<Rational>(b1.size(), q));
    CHECK(is_zero_matrix(multiply(b1.coordinates, d_in)));
  }
}

TEST_CASE("induced maps on homology") {
  const Ring<Rational> q;
  const Matrix<Rational> none_in = zero_matrix<Rational>(2, 0);
  const Matrix<Rational> none_out = zero_matrix<Rational>(0, 2);
  const Matrix<Rational> id = identity_matrix<Rational>(2, q);
  CHECK(induced_map_on_homology(id, none_in, none_out, none_in, none_out, q) == id);
  const Matrix<Rational> zero = zero_matrix<Rational>(2, 2);
  CHECK(is_zero_matrix(induced_map_on_homology(zero, none_in, none_out, none_in, none_out, q)));

  // two points into the edge joining them, reduced degree 0: Q -> 0
  Matrix<Rational> aug_pts(1, 2);
  aug_pts << 1, 1;
  Matrix<Rational> edge_bd(2, 1);
  edge_bd << -1, 1;
  const auto f = induced_map_on_homology(id, zero_matrix<Rational>(2, 0), aug_pts, edge_bd, aug_pts, q);
  CHECK(f.rows() == 0);
  CHECK(f.cols() == 1);

  // a map that does not send cycles to cycles
  Matrix<Rational> bad(2, 2);
  bad << 1, 0, 0, 0;
  CHECK_THROWS_AS(induced_map_on_homology(bad, zero_matrix<Rational>(2, 0), aug_pts, edge_bd, aug_pts, q), NotChainMap);
}

TEST_CASE("induced maps over the integers refuse torsion") {
  const Ring<BigInt> zr;
  const IntMatrix two = to_int({{2}});
  const IntMatrix id = identity_matrix<BigInt>(1, zr);
  CHECK_THROWS_AS(induced_map_on_homology(id, two, zero_matrix<BigInt>(0, 1), two, zero_matrix<BigInt>(0, 1), zr),
                  TorsionObstruction);
}

TEST_CASE("sparse products and ranks") {
  Matrix<Rational> a(2, 3), b(1, 2);
  a << 1, 0, 1, 0, 1, 1;
  b << 1, -1;
  CHECK_FALSE(product_is_zero(to_sparse(b), to_sparse(a)));
  Matrix<Rational> c(3, 1);
  c << 1, 1, -1;
  CHECK(product_is_zero(to_sparse(a), to_sparse(c)));
  CHECK_THROWS_AS(product_is_zero(to_sparse(a), to_sparse(b)), NotAComplex);
  const auto info = rank_info(to_sparse(convert(to_int({{2, 0}, {0, 6}}), Ring<BigInt>{})), Ring<BigInt>{});
  CHECK(info.rank == 2);
  CHECK(info.divisors == big({2, 6}));
  CHECK(to_dense(to_sparse(a)) == a);
}
