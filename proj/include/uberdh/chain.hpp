#pragma once

// Homology of one degree of a chain complex, C' --d_in--> C --d_out--> C'',
// together with a deterministic basis that induced maps are expressed in.

#include <string>
#include <vector>

#include "uberdh/dense.hpp"
#include "uberdh/errors.hpp"
#include "uberdh/group.hpp"
#include "uberdh/smith.hpp"

namespace uberdh {

template <class Scalar>
struct HomologyBasis {
  GroupClass group;
  Matrix<Scalar> cycles;           // n x z, basis of ker(d_out)
  Matrix<Scalar> representatives;  // n x h, cycles representing the free generators
  Matrix<Scalar> coordinates;      // h x n; coordinates * cycle = class of the cycle

  Index size() const { return representatives.cols(); }
};

namespace detail {

template <class Scalar>
void check_composable(const Matrix<Scalar>& d_in, const Matrix<Scalar>& d_out) {
  if (d_out.cols() != d_in.rows()) throw NotAComplex("middle dimensions differ");
  if (!is_zero_matrix(multiply(d_out, d_in))) throw NotAComplex();
}

template <class Scalar>
HomologyBasis<Scalar> field_homology_basis(const Matrix<Scalar>& d_in, const Matrix<Scalar>& d_out,
                                           const Ring<Scalar>& ring) {
  const Index n = d_in.rows();
  HomologyBasis<Scalar> hb;
  hb.cycles = kernel_basis(d_out, ring);
  // Complete im(d_in) to a basis of the cycles: greedy left-to-right pivots
  // over [d_in | cycles].
  Matrix<Scalar> joined(n, d_in.cols() + hb.cycles.cols());
  joined.leftCols(d_in.cols()) = d_in;
  joined.rightCols(hb.cycles.cols()) = hb.cycles;
  const auto pivots = reduced_row_echelon(joined, ring).pivots;
  std::vector<Index> image_cols, rep_cols;
  for (Index p : pivots) (p < d_in.cols() ? image_cols : rep_cols).push_back(p);
  const Index r = static_cast<Index>(image_cols.size());
  const Index h = static_cast<Index>(rep_cols.size());
  hb.representatives = Matrix<Scalar>(n, h);
  Matrix<Scalar> full(n, r + h);
  for (Index i = 0; i < r; ++i) full.col(i) = joined.col(image_cols[static_cast<std::size_t>(i)]);
  for (Index i = 0; i < h; ++i) {
    hb.representatives.col(i) = joined.col(rep_cols[static_cast<std::size_t>(i)]);
    full.col(r + i) = hb.representatives.col(i);
  }
  hb.coordinates = left_inverse(full, ring).bottomRows(h);
  hb.group = GroupClass(ring.coefficients(), static_cast<std::size_t>(h));
  return hb;
}

inline HomologyBasis<BigInt> integer_homology_basis(const IntMatrix& d_in, const IntMatrix& d_out) {
  const Ring<BigInt> z;
  const Index n = d_in.rows();
  HomologyBasis<BigInt> hb;
  // Kernel of d_out: trailing columns of the column transform.
  const SmithForm out = smith_normal_form(d_out, true);
  const Index r_out = out.rank();
  const Index zdim = n - r_out;
  hb.cycles = out.v.rightCols(zdim);
  const IntMatrix to_cycle_coords = out.v_inv.bottomRows(zdim);  // zdim x n
  // Boundaries in cycle coordinates, then split off the free quotient.
  const IntMatrix a = multiply(to_cycle_coords, d_in);
  const SmithForm in = smith_normal_form(a, true);
  const Index r_in = in.rank();
  std::vector<BigInt> torsion;
  for (const auto& d : in.divisors)
    if (d != 1) torsion.push_back(d);
  const Index h = zdim - r_in;
  hb.representatives = multiply(hb.cycles, IntMatrix(in.u_inv.rightCols(h)));
  hb.coordinates = multiply(IntMatrix(in.u.bottomRows(h)), to_cycle_coords);
  hb.group = GroupClass(z.coefficients(), static_cast<std::size_t>(h), std::move(torsion));
  return hb;
}

}  // namespace detail

/// Homology basis of ker(d_out) / im(d_in). Over a field the representatives
/// are the kernel-basis columns that are pivots of [d_in | ker]; over the
/// integers they span a complement of the torsion-closed image.
template <class Scalar>
HomologyBasis<Scalar> homology_basis(const Matrix<Scalar>& d_in, const Matrix<Scalar>& d_out,
                                     const Ring<Scalar>& ring, bool check = true) {
  if (check) detail::check_composable(d_in, d_out);
  if constexpr (Ring<Scalar>::is_field) {
    return detail::field_homology_basis(d_in, d_out, ring);
  } else {
    return detail::integer_homology_basis(d_in, d_out);
  }
}

/// Isomorphism class of ker(d_out) / im(d_in).
template <class Scalar>
GroupClass homology_quotient(const Matrix<Scalar>& d_in, const Matrix<Scalar>& d_out, const Ring<Scalar>& ring) {
  detail::check_composable(d_in, d_out);
  const Index n = d_in.rows();
  if constexpr (Ring<Scalar>::is_field) {
    return GroupClass(ring.coefficients(), static_cast<std::size_t>(n - rank(d_out, ring) - rank(d_in, ring)));
  } else {
    const auto div_in = elementary_divisors(d_in);
    const auto div_out = elementary_divisors(d_out);
    std::vector<BigInt> torsion;
    for (const auto& d : div_in)
      if (d != 1) torsion.push_back(d);
    return GroupClass(ring.coefficients(),
                      static_cast<std::size_t>(n - static_cast<Index>(div_in.size()) - static_cast<Index>(div_out.size())),
                      std::move(torsion));
  }
}

/// Throws TorsionObstruction over the integers when a basis has torsion.
template <class Scalar>
void require_free(const HomologyBasis<Scalar>& hb, const std::string& where) {
  if constexpr (!Ring<Scalar>::is_field) {
    if (!hb.group.is_free()) throw TorsionObstruction(where);
  }
}

/// Matrix of the map on homology induced by the chain map f between the
/// middle groups of (d_in, d_out) and (d_in_t, d_out_t).
template <class Scalar>
Matrix<Scalar> induced_map_on_homology(const Matrix<Scalar>& f, const Matrix<Scalar>& d_in, const Matrix<Scalar>& d_out,
                                       const Matrix<Scalar>& d_in_t, const Matrix<Scalar>& d_out_t,
                                       const Ring<Scalar>& ring) {
  const auto src = homology_basis(d_in, d_out, ring);
  const auto dst = homology_basis(d_in_t, d_out_t, ring);
  if (f.cols() != d_in.rows() || f.rows() != d_in_t.rows()) throw NotChainMap();
  require_free(src, "source of induced map");
  require_free(dst, "target of induced map");
  // cycles go to cycles, boundaries go to boundaries
  const Matrix<Scalar> f_cycles = multiply(f, src.cycles);
  if (!is_zero_matrix(multiply(d_out_t, f_cycles))) throw NotChainMap();
  const Matrix<Scalar> f_bounds = multiply(f, d_in);
  if (!is_zero_matrix(multiply(dst.coordinates, f_bounds))) throw NotChainMap();
  return multiply(dst.coordinates, multiply(f, src.representatives));
}

}  // namespace uberdh
