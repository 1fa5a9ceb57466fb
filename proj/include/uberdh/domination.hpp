#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uberdh/complex.hpp"
#include "uberdh/graph.hpp"

namespace uberdh {

/// Integer polynomial, coefficient of t^s at index s, trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coefficients);

  const std::vector<long long>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  long long coefficient(int s) const;
  long long evaluate(long long x) const;
  std::string to_string() const;  // "5t^3 + 5t^4 + t^5"

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  std::vector<long long> c_;
};

inline constexpr int kMaxDominationVertices = 25;

/// N[S] = V and G[S] connected.
bool is_connected_dominating(const Graph& g, std::uint64_t subset);

/// D_c(G)(t) = sum over connected dominating S of t^|S|.
IntPolynomial domination_polynomial(const Graph& g);

/// Diagonal Euler characteristic of DH against D_c(K^(1))(-1).
///
/// The identity that holds is  lhs = -D_c(-1) - 1. The form
/// D_c(-1) + (-1)^(m+1) agrees with it only when D_c(-1) is -1 (m odd) or
/// 0 (m even); the path on three vertices separates the two.
struct DominationCheck {
  int m = 0;
  long long lhs = 0;             // sum over k of (-1)^k rk DH_{-k,2(k+1)}
  long long at_minus_one = 0;    // D_c(K^(1))(-1)

  long long rhs() const { return -at_minus_one - 1; }
  long long printed_rhs() const { return at_minus_one + (m % 2 == 0 ? -1 : 1); }
  bool equal() const { return lhs == rhs(); }
  bool printed_form_holds() const { return lhs == printed_rhs(); }
};

/// Compares the diagonal of rational double homology with the connected
/// domination polynomial of the 1-skeleton.
DominationCheck condom_check(const SimplicialComplex& k, int max_vertices = 20);

}  // namespace uberdh
