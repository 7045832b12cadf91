#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "kummergap/checked.hpp"

namespace kummergap {

// Exact rational with a reduced representation and positive denominator.
// Arithmetic is carried out in 128 bits and fails with ErrorCode::Overflow
// if a reduced result does not fit back into int64.
class Rational {
public:
  Rational() = default;
  Rational(Int value) : num_(value) {}  // NOLINT(implicit)
  Rational(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;
  // Decimal rendering rounded half away from zero to `digits` places.
  std::string decimal(int digits) const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Parses "p", "p/q" or "-p/q"; throws InvalidArgument otherwise.
  static Rational parse(const std::string& text);

  __extension__ using Wide = __int128;

private:
  static Rational from_wide(Wide num, Wide den);

  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace kummergap
