#include <limits>

#include "helpers.hpp"
#include "kummergap/rational.hpp"

using kummergap::ErrorCode;
using kummergap::Rational;

TEST_CASE("rational normal form") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(8, 4).str() == "2");
  CHECK(Rational(6, -4).num() == -3);
  CHECK(Rational(6, -4).den() == 2);
  CHECK_CODE(Rational(1, 0), ErrorCode::InvalidArgument);
}

TEST_CASE("rational arithmetic") {
  const Rational a(1, 3), b(1, 4);
  CHECK(a + b == Rational(7, 12));
  CHECK(a - b == Rational(1, 12));
  CHECK(a * b == Rational(1, 12));
  CHECK(a / b == Rational(4, 3));
  CHECK(-a == Rational(-1, 3));
  CHECK((b - a).abs() == Rational(1, 12));
  CHECK(a > b);
  CHECK(Rational(2) == Rational(4, 2));
  CHECK_CODE(a / Rational(0), ErrorCode::InvalidArgument);
}

TEST_CASE("rational overflow is loud") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_CODE(big + big, ErrorCode::Overflow);
  CHECK_CODE(big * Rational(2), ErrorCode::Overflow);
  // cross products exceed 64 bits but the reduced result does not
  const Rational p(std::numeric_limits<std::int64_t>::max(), 3);
  CHECK(p * Rational(3, std::numeric_limits<std::int64_t>::max()) == Rational(1));
}

TEST_CASE("rational parse and decimal") {
  CHECK(Rational::parse("3/9") == Rational(1, 3));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK_CODE(Rational::parse("1/"), ErrorCode::InvalidArgument);
  CHECK_CODE(Rational::parse("x"), ErrorCode::InvalidArgument);
  CHECK_CODE(Rational::parse("1/0"), ErrorCode::InvalidArgument);
  CHECK(Rational(1, 3).decimal(4) == "0.3333");
  CHECK(Rational(2, 3).decimal(4) == "0.6667");
  CHECK(Rational(-1, 8).decimal(2) == "-0.13");
  CHECK(Rational(5, 2).decimal(0) == "3");
  CHECK(Rational(3, 32).decimal(6) == "0.093750");
}
