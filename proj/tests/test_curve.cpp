#include "helpers.hpp"
#include "kummergap/curve.hpp"

using namespace kummergap;
using V = std::vector<Int>;

TEST_CASE("curve validation") {
  CHECK_CODE(KummerCurve(1, V{1}), ErrorCode::InvalidArgument);
  CHECK_CODE(KummerCurve(3, V{}), ErrorCode::InvalidArgument);
  CHECK_CODE(KummerCurve(3, V{3}), ErrorCode::InvalidArgument);
  CHECK_CODE(KummerCurve(3, V{0, 1}), ErrorCode::InvalidArgument);
  // f would be a square
  CHECK_CODE(KummerCurve(4, V{2, 2}), ErrorCode::InvalidArgument);
  const KummerCurve c(9, V{1, 1, 3, 3});
  CHECK(c.r() == 4);
  CHECK(c.lambda0() == 8);
  CHECK(c.lambda(Place(3)) == 3);
  CHECK(c.lambda(Place::infinity()) == 8);
  CHECK_CODE(c.lambda(Place(5)), ErrorCode::InvalidArgument);
  CHECK(c.describe() == "m=9, lambdas=(1,1,3,3)");
}

TEST_CASE("genus examples") {
  CHECK(KummerCurve(3, V{1, 2}).genus() == 0);
  CHECK(KummerCurve(2, V{1, 1, 1}).genus() == 1);
  CHECK(KummerCurve(9, V{1, 1, 3, 3}).genus() == 10);
  CHECK(KummerCurve(4, V{1, 2, 1}).genus() == 1);
  CHECK(KummerCurve(2, V(5, 1)).genus() == 2);
}

TEST_CASE("ramification data") {
  const KummerCurve c(4, V{1, 2, 1});
  CHECK(c.fiber_size(Place(0)) == 4);
  CHECK(c.fiber_size(Place(2)) == 2);
  CHECK(c.totally_ramified(Place(1)));
  CHECK_FALSE(c.all_coprime());
  CHECK_FALSE(c.roots_coprime());
  CHECK(c.totally_ramified_places() == std::vector<Place>{Place(1), Place(3)});
  CHECK(KummerCurve(5, V{4, 2, 2}).all_coprime());
  CHECK(KummerCurve(3, V{1, 2}).has_totally_ramified_place());
  CHECK_FALSE(KummerCurve(6, V{2, 3, 2, 3}).has_totally_ramified_place());
}

TEST_CASE("t_value examples") {
  CHECK(KummerCurve(9, V{1, 1, 3, 3}).t_value(Place(0), 1) == 1);
  CHECK(KummerCurve(5, V{4, 2, 2}).t_value(Place(1), 3) == 2);
  CHECK(KummerCurve(3, V{1, 1}).t_value(Place(1), 2) == 2);
  CHECK(KummerCurve(4, V{1, 2, 1}).t_value(Place(0), 1) == 4);
  CHECK(KummerCurve(4, V{1, 2, 1}).t_value(Place(2), 2) == 0);
  CHECK_CODE(KummerCurve(3, V{1, 1}).t_value(Place(1), 3), ErrorCode::InvalidArgument);
  CHECK_CODE(KummerCurve(3, V{1, 1}).t_value(Place(1), 0), ErrorCode::InvalidArgument);
}

TEST_CASE("beta0 examples") {
  const KummerCurve c(9, V{1, 1, 3, 3});
  CHECK(c.beta0(1) == 3);
  CHECK(c.beta0(8) == 0);
  CHECK(KummerCurve(3, V{1, 1}).beta0(2) == 0);
  CHECK(c.beta_max() == 3);
  CHECK(c.beta_min() == 0);
  CHECK_CODE(c.beta0(9), ErrorCode::InvalidArgument);
}

TEST_CASE("beta_s examples") {
  const KummerCurve c(5, V{4, 2, 2});
  CHECK(c.beta_s(Place(1), c.t_value(Place(1), 2)) == c.beta0(2));
  CHECK(c.beta0(2) == 0);
  CHECK(KummerCurve(3, V{1, 1}).beta_s(Place(1), 1) == 1);
  const KummerCurve d(9, V{1, 1, 3, 3});
  CHECK(d.beta_s(Place(1), 1) == 3);
  CHECK_CODE(d.beta_s(Place(3), 1), ErrorCode::NotTotallyRamified);
  CHECK_CODE(d.beta_s(Place(0), 1), ErrorCode::InvalidArgument);
}

TEST_CASE("beta identities over small curves") {
  for (oracle::ll m = 2; m <= 8; ++m)
    for (std::size_t r = 1; r <= 4; ++r) {
      std::vector<oracle::ll> l(r, 1);
      do {
        if (!oracle::valid_curve(m, l)) continue;
        const KummerCurve c(m, V(l.begin(), l.end()));
        for (std::size_t s = 1; s <= r; ++s) {
          if (!c.totally_ramified(Place(s))) continue;
          std::vector<bool> hit(static_cast<std::size_t>(m), false);
          for (Int i = 1; i < m; ++i) {
            const Int t = c.t_value(Place(s), i);
            REQUIRE(t >= 1);
            REQUIRE(t <= m - 1);
            hit[static_cast<std::size_t>(t)] = true;
            CHECK(c.beta_s(Place(s), t) == c.beta0(i));
          }
          CHECK(std::count(hit.begin() + 1, hit.end(), true) == m - 1);
        }
        if (c.roots_coprime())
          for (Int i = 1; i < m; ++i) {
            Int sum = 0;
            for (std::size_t k = 0; k <= r; ++k) sum += c.t_value(Place(k), i);
            CHECK(sum == m * (static_cast<Int>(r) - c.beta0(i)));
          }
        if (c.all_coprime())
          for (Int i = 1; i < m; ++i) CHECK(c.beta0(i) + c.beta0(m - i) == static_cast<Int>(r) - 1);
      } while (oracle::next_vector(l, m));
    }
}
