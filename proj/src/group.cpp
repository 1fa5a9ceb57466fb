#include "uberdh/group.hpp"

#include <algorithm>
#include <sstream>

#include "uberdh/errors.hpp"

namespace uberdh {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Coefficients Coefficients::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    throw InputError("coefficient field needs a prime below 2^31, got " + std::to_string(p));
  }
  return Coefficients(Kind::Prime, p);
}

Coefficients Coefficients::parse(const std::string& text) {
  if (text == "z" || text == "Z") return integers();
  if (text == "q" || text == "Q") return rationals();
  if (text == "f2" || text == "F2") return prime_field(2);
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 10) {
      throw InputError("bad prime in coefficient spec '" + text + "'");
    }
    return prime_field(static_cast<std::uint32_t>(std::stoull(digits)));
  }
  throw InputError("unknown coefficients '" + text + "' (expected z, q, f2 or fp:<prime>)");
}

std::string Coefficients::name() const {
  switch (kind_) {
    case Kind::Integer:
      return "z";
    case Kind::Rational:
      return "q";
    case Kind::Prime:
      break;
  }
  return prime_ == 2 ? "f2" : "fp:" + std::to_string(prime_);
}

std::vector<BigInt> invariant_factors(std::vector<BigInt> c) {
  c.erase(std::remove_if(c.begin(), c.end(), [](const BigInt& x) { return x == 1; }), c.end());
  // Pairwise (gcd, lcm) sweeps converge to a divisibility chain.
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      BigInt g = boost::multiprecision::gcd(c[i], c[j]);
      BigInt l = c[i] / g * c[j];
      c[i] = g;
      c[j] = l;
    }
  }
  c.erase(std::remove_if(c.begin(), c.end(), [](const BigInt& x) { return x == 1; }), c.end());
  return c;
}

GroupClass::GroupClass(Coefficients coeffs, std::size_t rank, std::vector<BigInt> torsion)
    : coeffs_(coeffs), rank_(rank) {
  for (auto& t : torsion) {
    if (t < 0) t = -t;
    if (t == 0) throw std::invalid_argument("torsion coefficient 0");
  }
  torsion_ = invariant_factors(std::move(torsion));
  if (coeffs_.is_field() && !torsion_.empty()) {
    throw std::invalid_argument("torsion over a field");
  }
}

GroupClass& GroupClass::operator+=(const GroupClass& other) {
  if (other.coeffs_ != coeffs_) throw std::invalid_argument("direct sum across coefficient rings");
  rank_ += other.rank_;
  if (!other.torsion_.empty()) {
    std::vector<BigInt> all = torsion_;
    all.insert(all.end(), other.torsion_.begin(), other.torsion_.end());
    torsion_ = invariant_factors(std::move(all));
  }
  return *this;
}

std::string GroupClass::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  std::string base;
  switch (coeffs_.kind()) {
    case Coefficients::Kind::Integer:
      base = "Z";
      break;
    case Coefficients::Kind::Rational:
      base = "Q";
      break;
    case Coefficients::Kind::Prime:
      base = "F" + std::to_string(coeffs_.prime());
      break;
  }
  bool first = true;
  if (rank_ > 0) {
    os << base;
    if (rank_ > 1) os << "^" << rank_;
    first = false;
  }
  for (const auto& t : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

}  // namespace uberdh
