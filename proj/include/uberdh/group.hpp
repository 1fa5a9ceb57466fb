#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "uberdh/scalar.hpp"

namespace uberdh {

/// Isomorphism class of a finitely generated module over the coefficients:
/// Z^rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, each d_i > 1.
/// Over a field the torsion list is always empty and rank is the dimension.
class GroupClass {
 public:
  GroupClass() = default;
  explicit GroupClass(Coefficients coeffs, std::size_t rank = 0, std::vector<BigInt> torsion = {});

  static GroupClass zero(Coefficients coeffs) { return GroupClass(coeffs); }

  const Coefficients& coefficients() const { return coeffs_; }
  std::size_t rank() const { return rank_; }
  const std::vector<BigInt>& torsion() const { return torsion_; }
  bool is_zero() const { return rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }

  GroupClass& operator+=(const GroupClass& other);  // direct sum
  friend GroupClass operator+(GroupClass a, const GroupClass& b) { return a += b; }

  friend bool operator==(const GroupClass& a, const GroupClass& b) {
    return a.coeffs_ == b.coeffs_ && a.rank_ == b.rank_ && a.torsion_ == b.torsion_;
  }
  friend bool operator!=(const GroupClass& a, const GroupClass& b) { return !(a == b); }

  /// e.g. "Z^2 + Z/2", "F2^10", "0".
  std::string to_string() const;

 private:
  Coefficients coeffs_ = Coefficients::rationals();
  std::size_t rank_ = 0;
  std::vector<BigInt> torsion_;
};

/// Puts arbitrary positive torsion coefficients into invariant-factor form.
std::vector<BigInt> invariant_factors(std::vector<BigInt> coefficients);

/// Sparse degree -> group maps; absent keys are zero groups.
using GradedGroup = std::map<int, GroupClass>;
using BigradedTable = std::map<std::pair<int, int>, GroupClass>;
using TriGradedTable = std::map<std::tuple<int, int, int>, GroupClass>;

/// Inserts g under key unless it is zero.
template <class Map, class Key>
void put_nonzero(Map& table, const Key& key, const GroupClass& g) {
  if (!g.is_zero()) table[key] = g;
}

}  // namespace uberdh
