#pragma once

// Exact scalar types used as Eigen matrix coefficients.
//
//   BigInt   -- arbitrary precision integers (GMP backed)
//   Rational -- arbitrary precision rationals (GMP backed)
//   Zp       -- residues modulo a runtime prime p < 2^31
//
// Every algorithm that has to create a nonzero constant does so through a
// Ring<Scalar> object, which knows the prime for Zp.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace uberdh {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Element of F_p. A value with prime() == 0 is an unbound integer literal;
/// Eigen creates those internally (Scalar(0), Scalar(1)) and they bind to
/// the prime of the first bound operand they meet.
class Zp {
 public:
  Zp() = default;
  Zp(int literal) : value_(literal) {}  // NOLINT: Eigen needs the implicit form
  Zp(std::int64_t value, std::uint32_t prime) : prime_(prime) {
    std::int64_t r = value % static_cast<std::int64_t>(prime);
    value_ = r < 0 ? r + prime : r;
  }

  std::int64_t value() const { return value_; }
  std::uint32_t prime() const { return prime_; }
  bool is_zero() const { return value_ == 0 || (prime_ == 0 && value_ == 0); }

  Zp inverse() const {
    if (prime_ == 0) {
      if (value_ == 1 || value_ == -1) return *this;
      throw std::domain_error("Zp: cannot invert an unbound literal");
    }
    if (value_ == 0) throw std::domain_error("Zp: division by zero");
    // extended Euclid on (value, prime)
    std::int64_t a = value_, b = prime_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Zp(x0, prime_);
  }

  Zp operator-() const { return prime_ ? Zp(-value_, prime_) : Zp(static_cast<int>(-value_)); }

  Zp& operator+=(const Zp& o) { return *this = *this + o; }
  Zp& operator-=(const Zp& o) { return *this = *this - o; }
  Zp& operator*=(const Zp& o) { return *this = *this * o; }
  Zp& operator/=(const Zp& o) { return *this = *this / o; }

  friend Zp operator+(const Zp& a, const Zp& b) {
    std::uint32_t p = a.prime_ ? a.prime_ : b.prime_;
    if (p == 0) return Zp(static_cast<int>(a.value_ + b.value_));
    return Zp(a.value_ + b.value_, p);
  }
  friend Zp operator-(const Zp& a, const Zp& b) {
    std::uint32_t p = a.prime_ ? a.prime_ : b.prime_;
    if (p == 0) return Zp(static_cast<int>(a.value_ - b.value_));
    return Zp(a.value_ - b.value_, p);
  }
  friend Zp operator*(const Zp& a, const Zp& b) {
    std::uint32_t p = a.prime_ ? a.prime_ : b.prime_;
    if (p == 0) return Zp(static_cast<int>(a.value_ * b.value_));
    std::int64_t x = a.prime_ ? a.value_ : Zp(a.value_, p).value_;
    std::int64_t y = b.prime_ ? b.value_ : Zp(b.value_, p).value_;
    return Zp(static_cast<std::int64_t>((static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(y)) % p), p);
  }
  friend Zp operator/(const Zp& a, const Zp& b) { return a * b.inverse(); }

  friend bool operator==(const Zp& a, const Zp& b) {
    std::uint32_t p = a.prime_ ? a.prime_ : b.prime_;
    if (p == 0) return a.value_ == b.value_;
    return Zp(a.value_, p).value_ == Zp(b.value_, p).value_;
  }
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Zp& x) { return os << x.value_; }

 private:
  std::int64_t value_ = 0;
  std::uint32_t prime_ = 0;
};

// Eigen's generic kernels call these for custom scalars.
inline const Zp& conj(const Zp& x) { return x; }
inline const Zp& real(const Zp& x) { return x; }
inline Zp imag(const Zp&) { return Zp(0); }
inline Zp abs(const Zp& x) { return x; }
inline Zp abs2(const Zp& x) { return x * x; }

/// Coefficient choice: the integers, the rationals, or a prime field.
class Coefficients {
 public:
  enum class Kind { Integer, Rational, Prime };

  static Coefficients integers() { return Coefficients(Kind::Integer, 0); }
  static Coefficients rationals() { return Coefficients(Kind::Rational, 0); }
  static Coefficients prime_field(std::uint32_t p);

  /// Accepts "z", "q", "f2" and "fp:<prime>".
  static Coefficients parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint32_t prime() const { return prime_; }
  bool is_field() const { return kind_ != Kind::Integer; }
  std::string name() const;

  friend bool operator==(const Coefficients& a, const Coefficients& b) {
    return a.kind_ == b.kind_ && a.prime_ == b.prime_;
  }
  friend bool operator!=(const Coefficients& a, const Coefficients& b) { return !(a == b); }

 private:
  Coefficients(Kind k, std::uint32_t p) : kind_(k), prime_(p) {}
  Kind kind_ = Kind::Rational;
  std::uint32_t prime_ = 0;
};

bool is_prime(std::uint32_t n);

inline bool is_zero(const BigInt& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Zp& x) { return x.is_zero(); }

/// Arithmetic context for a scalar type.
template <class Scalar>
struct Ring;

template <>
struct Ring<BigInt> {
  static constexpr bool is_field = false;
  BigInt from_int(std::int64_t v) const { return BigInt(v); }
  Coefficients coefficients() const { return Coefficients::integers(); }
};

template <>
struct Ring<Rational> {
  static constexpr bool is_field = true;
  Rational from_int(std::int64_t v) const { return Rational(v); }
  Rational inverse(const Rational& x) const { return Rational(1) / x; }
  Coefficients coefficients() const { return Coefficients::rationals(); }
};

template <>
struct Ring<Zp> {
  static constexpr bool is_field = true;
  std::uint32_t prime = 2;
  Zp from_int(std::int64_t v) const { return Zp(v, prime); }
  Zp inverse(const Zp& x) const { return x.inverse(); }
  Coefficients coefficients() const { return Coefficients::prime_field(prime); }
};

/// Calls fn(Ring<S>{...}) with the scalar type matching the coefficients.
template <class Fn>
decltype(auto) visit_ring(const Coefficients& c, Fn&& fn) {
  switch (c.kind()) {
    case Coefficients::Kind::Integer:
      return fn(Ring<BigInt>{});
    case Coefficients::Kind::Rational:
      return fn(Ring<Rational>{});
    case Coefficients::Kind::Prime:
      break;
  }
  return fn(Ring<Zp>{c.prime()});
}

}  // namespace uberdh

namespace Eigen {

template <>
struct NumTraits<uberdh::Zp> : GenericNumTraits<uberdh::Zp> {
  using Real = uberdh::Zp;
  using NonInteger = uberdh::Zp;
  using Literal = uberdh::Zp;
  using Nested = uberdh::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
