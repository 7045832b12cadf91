#include "kummergap/rational.hpp"

#include <cerrno>
#include <cstdlib>
#include <limits>

namespace kummergap {

namespace {

using Wide = Rational::Wide;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide v) {
  return v >= std::numeric_limits<Int>::min() && v <= std::numeric_limits<Int>::max();
}

}  // namespace

Rational Rational::from_wide(Wide num, Wide den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) fail(ErrorCode::Overflow, "rational overflow");
  Rational out;
  out.num_ = static_cast<Int>(num);
  out.den_ = static_cast<Int>(den);
  return out;
}

Rational::Rational(Int num, Int den) { *this = from_wide(num, den); }

Rational Rational::operator-() const { return from_wide(-static_cast<Wide>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  Wide g = wide_gcd(a.den_, b.den_);
  Wide num = static_cast<Wide>(a.num_) * (b.den_ / g) + static_cast<Wide>(b.num_) * (a.den_ / g);
  Wide den = static_cast<Wide>(a.den_ / g) * b.den_;
  return Rational::from_wide(num, den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first so the 128-bit product cannot overflow.
  Wide g1 = wide_gcd(a.num_, b.den_);
  Wide g2 = wide_gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  Wide num = (a.num_ / g1) * (b.num_ / g2);
  Wide den = (a.den_ / g2) * (b.den_ / g1);
  return Rational::from_wide(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) fail(ErrorCode::InvalidArgument, "division by zero rational");
  return a * Rational::from_wide(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int digits) const {
  if (digits < 0 || digits > 30) fail(ErrorCode::InvalidArgument, "decimal digits must be in 0..30");
  Wide scale = 1;
  for (int d = 0; d < digits; ++d) scale *= 10;
  Wide n = wide_abs(num_);
  // round(n * scale / den) half away from zero, computed without floating point
  Wide whole = n / den_;
  Wide rem = n % den_;
  Wide frac_num = rem * scale;
  Wide frac = frac_num / den_;
  Wide frac_rem = frac_num % den_;
  if (2 * frac_rem >= den_) {
    ++frac;
    if (frac == scale) {
      frac = 0;
      ++whole;
    }
  }
  auto to_str = [](Wide v) {
    if (v == 0) return std::string("0");
    std::string s;
    while (v > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return s;
  };
  std::string out = (num_ < 0 && (whole != 0 || frac != 0)) ? "-" : "";
  out += to_str(whole);
  if (digits > 0) {
    std::string f = to_str(frac);
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [&](const std::string& part) -> Int {
    if (part.empty()) fail(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
    std::size_t pos = 0;
    if (part[0] == '-' || part[0] == '+') pos = 1;
    if (pos == part.size()) fail(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
    for (std::size_t k = pos; k < part.size(); ++k)
      if (part[k] < '0' || part[k] > '9') fail(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
    errno = 0;
    long long v = std::strtoll(part.c_str(), nullptr, 10);
    if (errno == ERANGE) fail(ErrorCode::Overflow, "rational component out of range in '" + text + "'");
    return static_cast<Int>(v);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace kummergap
