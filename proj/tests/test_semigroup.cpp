#include <random>

#include "helpers.hpp"
#include "kummergap/semigroup.hpp"

using namespace kummergap;
using V = std::vector<Int>;

namespace {

NumericalSemigroup gen(V g) { return NumericalSemigroup::from_generators(g); }

}  // namespace

TEST_CASE("gap set validation") {
  CHECK(GapSet(V{1, 2, 4}).size() == 3);
  CHECK(GapSet::from_unsorted(V{4, 1, 2, 2}) == GapSet(V{1, 2, 4}));
  CHECK_CODE(GapSet(V{2, 1}), ErrorCode::InvalidArgument);
  CHECK_CODE(GapSet(V{1, 1}), ErrorCode::InvalidArgument);
  CHECK_CODE(GapSet(V{0, 1}), ErrorCode::InvalidArgument);
  CHECK(GapSet(V{1, 2, 4, 7}).sum() == 14);
  CHECK(GapSet(V{1, 2, 4, 7}).contains(4));
  CHECK_FALSE(GapSet(V{1, 2, 4, 7}).contains(5));
}

TEST_CASE("from_generators examples") {
  CHECK(gen({2, 3}).gaps() == GapSet(V{1}));
  CHECK(gen({3, 5}).gaps() == GapSet(V{1, 2, 4, 7}));
  CHECK(gen({6, 8, 9}).gaps() == GapSet(V{1, 2, 3, 4, 5, 7, 10, 11, 13, 19}));
  CHECK(gen({1}).gaps().empty());
  CHECK(gen({5, 3, 5, 10}).gaps() == GapSet(V{1, 2, 4, 7}));
  CHECK(gen({1}).minimal_generators() == V{1});
}

TEST_CASE("from_generators errors") {
  CHECK_CODE(gen({}), ErrorCode::InvalidArgument);
  CHECK_CODE(gen({4, 6}), ErrorCode::NotSemigroup);
  CHECK_CODE(gen({-1, 2}), ErrorCode::InvalidArgument);
  CHECK_CODE(gen({0}), ErrorCode::InvalidArgument);
  CHECK_CODE(gen({5, 0, 3}), ErrorCode::InvalidArgument);
}

TEST_CASE("from_gap_set examples") {
  CHECK(NumericalSemigroup::from_gap_set(GapSet()) == NumericalSemigroup());
  const auto h = NumericalSemigroup::from_gap_set(GapSet(V{1, 2, 4, 7}));
  CHECK(h == gen({3, 5}));
  CHECK(h.minimal_generators() == V{3, 5});
  const auto h13 = NumericalSemigroup::from_gap_set(GapSet(V{1, 3}));
  CHECK(h13.contains(2));
  CHECK(h13.contains(5));
  CHECK_FALSE(h13.contains(3));
  CHECK(h13.minimal_generators() == V{2, 5});
  try {
    NumericalSemigroup::from_gap_set(GapSet(V{1, 3, 4}));
    FAIL("closure violation not detected");
  } catch (const Error& e) {
    // 2 + 2 = 4
    CHECK(e.code() == ErrorCode::NotSemigroup);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("invariants examples") {
  CHECK(gen({2, 3}).invariants() == SemigroupInvariants{1, 1, 2});
  CHECK(gen({6, 8, 9}).invariants() == SemigroupInvariants{10, 19, 6});
  CHECK(NumericalSemigroup().invariants() == SemigroupInvariants{0, -1, 1});
  // F far above the product of the two smallest generators
  CHECK(gen({4, 6, 101}).frobenius() == 103);
}

TEST_CASE("apery examples") {
  CHECK(gen({2, 3}).apery(2).values == V{0, 3});
  CHECK(gen({6, 8, 9}).apery(9).values == V{0, 28, 20, 12, 22, 14, 6, 16, 8});
  CHECK(gen({3, 5}).apery(3).values == V{0, 10, 5});
  CHECK(gen({3, 5}).apery(5).values == V{0, 6, 12, 3, 9});
  CHECK_CODE(gen({3, 5}).apery(4), ErrorCode::InvalidBase);
  CHECK_CODE(gen({3, 5}).apery(0), ErrorCode::InvalidBase);
  CHECK_CODE(gen({3, 5}).apery(-3), ErrorCode::InvalidBase);
}

TEST_CASE("generators_via_apery round trips") {
  CHECK(gen({2, 3}).generators_via_apery(2) == V{2, 3});
  const V g9 = gen({6, 8, 9}).generators_via_apery(9);
  CHECK(g9 == V{9, 28, 20, 12, 22, 14, 6, 16, 8});
  CHECK(gen(g9).gaps() == GapSet(V{1, 2, 3, 4, 5, 7, 10, 11, 13, 19}));
  const V g3 = gen({3, 5}).generators_via_apery(3);
  CHECK(g3 == V{3, 10, 5});
  CHECK(gen(g3) == gen({3, 5}));
  CHECK_CODE(gen({3, 5}).generators_via_apery(7), ErrorCode::InvalidBase);
}

TEST_CASE("symmetry examples") {
  CHECK(gen({2, 3}).is_symmetric());
  CHECK(gen({6, 8, 9}).is_symmetric());
  CHECK(NumericalSemigroup::from_gap_set(GapSet(V{1, 2, 5})).is_symmetric());
  CHECK_FALSE(NumericalSemigroup::from_gap_set(GapSet(V{1, 2, 4})).is_symmetric());
  // F = 3 = 2g - 1
  CHECK(NumericalSemigroup::from_gap_set(GapSet(V{1, 3})).is_symmetric());
  CHECK(NumericalSemigroup().is_symmetric());
  CHECK_FALSE(gen({3, 4, 5}).is_symmetric());
  CHECK_FALSE(gen({3, 4, 5}).is_symmetric_apery(3));
  CHECK(gen({3, 5}).is_symmetric_apery(5));
}

TEST_CASE("random generator sets against the naive sieve") {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 300) {
    std::uniform_int_distribution<Int> count(1, 4), value(1, 24);
    V g(static_cast<std::size_t>(count(rng)));
    for (auto& x : g) x = value(rng);
    Int d = 0;
    for (Int x : g) d = std::gcd(d, x);
    if (d != 1) continue;
    ++checked;
    const auto h = gen(g);
    const auto expected = oracle::gaps_of(std::vector<long long>(g.begin(), g.end()));
    REQUIRE(ll_vec(h.gaps()) == expected);

    // complement closure up to 2F + 2
    for (Int a = 0; a <= 2 * h.frobenius() + 2; ++a)
      for (Int b = a; a + b <= 2 * h.frobenius() + 2; ++b)
        if (h.contains(a) && h.contains(b)) REQUIRE(h.contains(a + b));

    CHECK(NumericalSemigroup::from_gap_set(h.gaps()) == h);
    CHECK(gen(h.minimal_generators()) == h);

    for (Int n = 1; n <= h.frobenius() + 1; ++n) {
      if (!h.contains(n)) continue;
      const auto ap = h.apery(n);
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      for (Int a : ap.values) {
        REQUIRE(h.contains(a));
        const bool least = a < n || !h.contains(a - n);
        REQUIRE(least);
        seen[static_cast<std::size_t>(a % n)] = true;
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
      CHECK(h.is_symmetric_apery(n) == h.is_symmetric());
      CHECK(gen(h.generators_via_apery(n)) == h);
    }

    const V mg = h.minimal_generators();
    if (mg.size() >= 2 && std::gcd(mg[0], mg[1]) == 1) {
      const Int product = mg[0] * mg[1];
      CHECK(h.frobenius() < product);
    }
    const Int schur = (mg.front() - 1) * (mg.back() - 1) - 1;
    CHECK(h.frobenius() <= schur);
  }
}
