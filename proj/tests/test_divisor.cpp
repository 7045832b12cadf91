#include <algorithm>

#include "helpers.hpp"
#include "kummergap/divisor.hpp"
#include "kummergap/weierstrass.hpp"

using namespace kummergap;
using V = std::vector<Int>;

TEST_CASE("differential divisor examples") {
  const auto zero = differential_divisor(KummerCurve(3, V{1, 1}), Anchor::at_root(1), 1, 0);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == 0);

  const KummerCurve c(9, V{1, 1, 3, 3});
  const auto d = differential_divisor(c, Anchor::at_root(1), 1, 2);
  CHECK(d.coefficient(FiberLabel::root(1)) == 18);
  CHECK(gap_set(c, Place(1)).contains(19));
  CHECK(d.degree() == 2 * c.genus() - 2);
  CHECK(d.fiber_size(FiberLabel::root(3)) == 3);

  const auto g = differential_divisor(KummerCurve(2, V{1, 1, 1}), Anchor::generic_point(), 1, 0);
  CHECK(g.effective());
  CHECK(g.degree() == 0);
  CHECK(g.fiber_size(FiberLabel::extra()) == 2);
}

TEST_CASE("differential divisor index errors") {
  const KummerCurve c(9, V{1, 1, 3, 3});
  CHECK_CODE(differential_divisor(c, Anchor::at_root(1), 0, 0), ErrorCode::InvalidArgument);
  CHECK_CODE(differential_divisor(c, Anchor::at_root(1), 8, 0), ErrorCode::InvalidArgument);
  CHECK_CODE(differential_divisor(c, Anchor::at_root(1), 1, 3), ErrorCode::InvalidArgument);
  CHECK_CODE(differential_divisor(c, Anchor::at_root(5), 1, 0), ErrorCode::InvalidArgument);
  CHECK_CODE(differential_divisor(c, Anchor::at_root(0), 1, 0), ErrorCode::InvalidArgument);
}

TEST_CASE("differentials form a basis with the right valuations") {
  for (oracle::ll m = 2; m <= 8; ++m)
    for (std::size_t r = 1; r <= 4; ++r) {
      std::vector<oracle::ll> l(r, 1);
      do {
        if (!oracle::valid_curve(m, l)) continue;
        const KummerCurve c(m, V(l.begin(), l.end()));
        const auto indices = differential_indices(c);
        CHECK(static_cast<Int>(indices.size()) == c.genus());
        std::vector<Anchor> anchors{Anchor::generic_point()};
        for (std::size_t s = 1; s <= r; ++s) anchors.push_back(Anchor::at_root(s));
        for (const Anchor& a : anchors) {
          std::vector<oracle::ll> values;
          for (auto [i, j] : indices) {
            const auto d = differential_divisor(c, a, i, j);
            REQUIRE(d.effective());
            REQUIRE(d.degree() == 2 * c.genus() - 2);
            if (!a.generic && c.totally_ramified(Place(a.root)))
              values.push_back(d.coefficient(FiberLabel::root(a.root)) + 1);
            if (a.generic && c.totally_ramified(Place::infinity()))
              values.push_back(d.coefficient(FiberLabel::infinity()) + 1);
          }
          std::sort(values.begin(), values.end());
          const std::size_t s = a.generic ? 0 : a.root;
          if (c.totally_ramified(Place(s))) CHECK(values == oracle::place_gaps(m, l, s));
        }
      } while (oracle::next_vector(l, m));
    }
}
