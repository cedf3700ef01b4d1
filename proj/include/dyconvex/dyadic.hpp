#pragma once

// Exact arithmetic over the ring D = Z[1/2] of dyadic rationals, and points
// of the affine space D^n.  Every value is kept in the canonical form
// value = mantissa * 2^exponent with an odd (or zero) arbitrary-precision
// mantissa, so equality is field-wise equality and all predicates are exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dyconvex {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Splits n = odd * 2^k.  Rejects n = 0: zero has no odd part.
std::pair<BigInt, std::int64_t> odd_part(const BigInt& n);

// Largest k with 2^k dividing n (n != 0).
std::int64_t two_valuation(const BigInt& n);

// Floor of an exact rational.
BigInt rat_floor(const BigRat& q);

class DyadicRational {
 public:
  DyadicRational() : mantissa_(0), exponent_(0) {}
  DyadicRational(BigInt mantissa, std::int64_t exponent);
  static DyadicRational from_integer(const BigInt& n) { return DyadicRational(n, 0); }

  const BigInt& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_.is_zero(); }
  bool is_integer() const { return exponent_ >= 0; }
  // Exponent of the denominator in lowest terms: max(0, -exponent).
  std::int64_t denominator_exponent() const { return exponent_ < 0 ? -exponent_ : 0; }

  DyadicRational operator-() const;
  DyadicRational operator+(const DyadicRational& rhs) const;
  DyadicRational operator-(const DyadicRational& rhs) const;
  DyadicRational operator*(const DyadicRational& rhs) const;
  DyadicRational& operator+=(const DyadicRational& rhs) { return *this = *this + rhs; }
  DyadicRational& operator-=(const DyadicRational& rhs) { return *this = *this - rhs; }
  DyadicRational& operator*=(const DyadicRational& rhs) { return *this = *this * rhs; }

  // Multiplication by the unit 2^k.
  DyadicRational mul_pow2(std::int64_t k) const;
  DyadicRational abs() const { return mantissa_ < 0 ? -*this : *this; }
  int sign() const { return mantissa_.sign(); }

  bool operator==(const DyadicRational& rhs) const {
    return mantissa_ == rhs.mantissa_ && exponent_ == rhs.exponent_;
  }
  std::strong_ordering operator<=>(const DyadicRational& rhs) const;

  BigRat to_rational() const;
  // Exact conversion; empty when the denominator is not a power of two.
  static std::optional<DyadicRational> from_rational(const BigRat& q);

  // Canonical form "M*2^E" (odd M), or "0".
  std::string to_string() const;
  // Exact finite decimal expansion, e.g. 13*2^-3 -> "1.625".
  std::string to_decimal_string() const;

  // Accepts "M*2^E", a plain integer, or "A/B" with B a positive power of two.
  // Throws std::invalid_argument on any other shape.
  static DyadicRational parse(std::string_view text);

 private:
  BigInt mantissa_;
  std::int64_t exponent_;
};

class DyadicPoint {
 public:
  explicit DyadicPoint(std::vector<DyadicRational> coords);
  DyadicPoint(std::initializer_list<DyadicRational> coords)
      : DyadicPoint(std::vector<DyadicRational>(coords)) {}

  int dim() const { return static_cast<int>(coords_.size()); }
  const DyadicRational& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  const std::vector<DyadicRational>& coords() const { return coords_; }

  bool operator==(const DyadicPoint& rhs) const { return coords_ == rhs.coords_; }
  // Coordinate-wise lexicographic order on values.
  std::strong_ordering operator<=>(const DyadicPoint& rhs) const;

  // Largest denominator exponent over the coordinates.
  std::int64_t max_denominator_exponent() const;

  std::string to_string() const;          // "lit, lit, ..."
  std::string to_decimal_string() const;  // decimal coordinates, comma separated

  // Parses a comma-separated list of dyadic literals.
  static DyadicPoint parse(std::string_view text);

 private:
  std::vector<DyadicRational> coords_;
};

DyadicPoint operator+(const DyadicPoint& a, const DyadicPoint& b);
DyadicPoint operator-(const DyadicPoint& a, const DyadicPoint& b);
DyadicPoint operator*(const DyadicRational& s, const DyadicPoint& p);

// The basic groupoid operation x o y = (x + y) / 2.
DyadicRational midpoint(const DyadicRational& a, const DyadicRational& b);
DyadicPoint midpoint(const DyadicPoint& a, const DyadicPoint& b);

// Sum of weights[i] * points[i]; the weights must sum to exactly 1.
DyadicPoint affine_combination(const std::vector<DyadicPoint>& points,
                               const std::vector<DyadicRational>& weights);

// All points of D^2 on the unit circle whose coordinates have denominator
// exponent at most exp_cap.  Enumerates one axis exactly and tests the other
// coordinate for an exact dyadic square root; the grid scan runs in parallel.
std::vector<DyadicPoint> unit_circle_points(std::int64_t exp_cap);
// Single-threaded reference used to cross-check the parallel kernel.
std::vector<DyadicPoint> unit_circle_points_serial(std::int64_t exp_cap);

}  // namespace dyconvex
