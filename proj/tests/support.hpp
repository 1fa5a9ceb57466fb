#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// here deliberately avoid the library's linear algebra.

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "uberdh/complex.hpp"
#include "uberdh/group.hpp"
#include "uberdh/random.hpp"
#include "uberdh/scalar.hpp"

namespace testing {

using namespace uberdh;

using IntRows = std::vector<std::vector<long long>>;

inline GroupClass Q(std::size_t r = 1) { return GroupClass(Coefficients::rationals(), r); }
inline GroupClass Z(std::size_t r = 1, std::vector<BigInt> t = {}) {
  return GroupClass(Coefficients::integers(), r, std::move(t));
}
inline GroupClass F2(std::size_t r = 1) { return GroupClass(Coefficients::prime_field(2), r); }

/// Rank over Q by textbook elimination on rationals.
inline long long oracle_rank_q(const IntRows& a) {
  if (a.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  for (const auto& row : a) m.emplace_back(row.begin(), row.end());
  const std::size_t rows = m.size(), cols = m[0].size();
  long long rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

/// Rank over F_p by elimination on machine integers.
inline long long oracle_rank_p(const IntRows& a, long long p) {
  if (a.empty()) return 0;
  IntRows m = a;
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto inv = [p](long long x) {
    long long r = 1, e = p - 2, b = x;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  const std::size_t rows = m.size(), cols = m[0].size();
  long long rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const long long iv = inv(m[r][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const long long f = m[i][c] * iv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
    ++rank;
  }
  return rank;
}

/// gcd of all k x k minors (determinants by cofactor expansion).
inline long long det_oracle(const IntRows& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  long long d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntRows minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(row);
    }
    d += (c % 2 == 0 ? 1 : -1) * a[0][c] * det_oracle(minor);
  }
  return d;
}

inline long long minor_gcd(const IntRows& a, std::size_t k) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  long long g = 0;
  for (std::uint32_t rm = 0; rm < (1u << rows); ++rm) {
    if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
    for (std::uint32_t cm = 0; cm < (1u << cols); ++cm) {
      if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
      IntRows sub;
      for (std::size_t r = 0; r < rows; ++r) {
        if (!((rm >> r) & 1)) continue;
        std::vector<long long> row;
        for (std::size_t c = 0; c < cols; ++c)
          if ((cm >> c) & 1) row.push_back(a[r][c]);
        sub.push_back(row);
      }
      g = std::gcd(g, det_oracle(sub));
    }
  }
  return g;
}

/// Faces of K of dimension d, by brute force over all vertex subsets.
inline std::vector<std::uint64_t> oracle_faces(const SimplicialComplex& k, int d) {
  std::vector<std::uint64_t> out;
  if (d == -1) return {0};
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << k.vertex_count()); ++s) {
    if (__builtin_popcountll(s) != d + 1) continue;
    for (VertexSet f : k.facets())
      if ((s & ~f.bits()) == 0) {
        out.push_back(s);
        break;
      }
  }
  return out;
}

inline IntRows oracle_boundary(const std::vector<std::uint64_t>& lower, const std::vector<std::uint64_t>& upper) {
  IntRows b(lower.size(), std::vector<long long>(upper.size(), 0));
  for (std::size_t c = 0; c < upper.size(); ++c) {
    int pos = 0;
    for (int v = 0; v < 64; ++v) {
      if (!((upper[c] >> v) & 1)) continue;
      const std::uint64_t face = upper[c] & ~(std::uint64_t{1} << v);
      for (std::size_t r = 0; r < lower.size(); ++r)
        if (lower[r] == face) b[r][c] = pos % 2 == 0 ? 1 : -1;
      ++pos;
    }
  }
  return b;
}

/// Betti numbers over Q (p = 0) or F_p, degrees -1..dim; reduced adds the
/// augmentation.
inline std::vector<long long> oracle_betti(const SimplicialComplex& k, bool reduced, long long p = 0) {
  const int dim = k.dimension();
  std::vector<std::vector<std::uint64_t>> faces;
  for (int d = -1; d <= dim; ++d) faces.push_back(oracle_faces(k, d));
  if (!reduced) faces[0].clear();
  auto rk = [&](int d) -> long long {  // rank of C_d -> C_{d-1}
    if (d < 0 || d > dim) return 0;
    const auto& lo = faces[static_cast<std::size_t>(d)];
    const auto& up = faces[static_cast<std::size_t>(d + 1)];
    if (lo.empty() || up.empty()) return 0;
    const IntRows b = oracle_boundary(lo, up);
    return p == 0 ? oracle_rank_q(b) : oracle_rank_p(b, p);
  };
  std::vector<long long> betti;
  for (int d = -1; d <= dim; ++d) {
    const long long n = static_cast<long long>(faces[static_cast<std::size_t>(d + 1)].size());
    betti.push_back(n - rk(d) - rk(d + 1));
  }
  return betti;
}

/// Every simplicial complex on exactly m vertices (no ghost vertices), m <= 4.
inline std::vector<SimplicialComplex> all_complexes(int m) {
  std::vector<SimplicialComplex> out;
  const int n = (1 << m) - 1;  // nonempty subsets 1..n
  for (std::uint32_t family = 1; family < (1u << n); ++family) {
    std::vector<VertexSet> facets;
    std::uint64_t cover = 0;
    bool antichain = true;
    for (int i = 0; i < n && antichain; ++i) {
      if (!((family >> i) & 1)) continue;
      const std::uint64_t s = static_cast<std::uint64_t>(i + 1);
      for (VertexSet f : facets)
        if ((s & ~f.bits()) == 0 || (f.bits() & ~s) == 0) antichain = false;
      facets.emplace_back(s);
      cover |= s;
    }
    if (!antichain || cover != (std::uint64_t{1} << m) - 1) continue;
    out.push_back(SimplicialComplex::from_facet_sets(m, facets));
  }
  return out;
}

inline std::vector<int> random_permutation(int m, Rng& rng) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::string describe(const SimplicialComplex& k) {
  std::string s = "m=" + std::to_string(k.vertex_count()) + " facets";
  for (VertexSet f : k.facets()) s += " " + f.to_string();
  return s;
}

}  // namespace testing
