#pragma once

#include <vector>

#include "uberdh/dense.hpp"

namespace uberdh {

using IntMatrix = Matrix<BigInt>;

/// u * a * v = diag(divisors, 0...), u and v unimodular.
struct SmithForm {
  std::vector<BigInt> divisors;  // d_1 | d_2 | ..., all positive
  IntMatrix u, u_inv, v, v_inv;  // empty unless transforms were requested
  Index rank() const { return static_cast<Index>(divisors.size()); }
};

SmithForm smith_normal_form(IntMatrix a, bool with_transforms = false);

/// Nonzero diagonal of the Smith normal form.
inline std::vector<BigInt> elementary_divisors(const IntMatrix& a) {
  return smith_normal_form(a, false).divisors;
}

}  // namespace uberdh
