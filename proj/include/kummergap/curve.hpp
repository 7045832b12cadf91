#pragma once

// Ramification datum of a Kummer cover y^m = prod_k (x - a_k)^{lambda_k} of
// the projective line. Only (m; lambda_1..lambda_r) is modelled: the roots
// a_k never appear, places are referred to by index.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kummergap/checked.hpp"

namespace kummergap {

// Index of a fiber of x: 0 is the fiber over the pole of x, 1..r the fibers
// over the roots.
class Place {
public:
  constexpr explicit Place(std::size_t index) : index_(index) {}
  static constexpr Place infinity() { return Place(0); }

  constexpr std::size_t index() const noexcept { return index_; }
  constexpr bool is_infinity() const noexcept { return index_ == 0; }

  friend constexpr bool operator==(Place, Place) = default;

private:
  std::size_t index_;
};

class KummerCurve {
public:
  // Requires m >= 2, r >= 1, 1 <= lambda_k < m, and gcd(m, lambda_1, ...,
  // lambda_r) = 1 so that f is not a d-th power for any d | m, d > 1.
  // Violations throw InvalidArgument.
  KummerCurve(Int m, std::vector<Int> lambdas);

  Int m() const noexcept { return m_; }
  std::size_t r() const noexcept { return lambdas_.size(); }
  const std::vector<Int>& lambdas() const noexcept { return lambdas_; }
  Int lambda0() const noexcept { return lambda0_; }
  // lambda_s for 1 <= s <= r, lambda_0 for s = 0.
  Int lambda(Place s) const;

  // gcd(m, lambda_s); also the number of places lying over P_s.
  Int fiber_size(Place s) const;
  bool totally_ramified(Place s) const { return fiber_size(s) == 1; }
  bool has_totally_ramified_place() const;
  // gcd(m, lambda_k) = 1 for every k in 0..r.
  bool all_coprime() const;
  // gcd(m, lambda_k) = 1 for every k in 1..r.
  bool roots_coprime() const;
  std::vector<Place> totally_ramified_places() const;

  // (m(r-1) + 2 - sum_{k=0}^r gcd(m, lambda_k)) / 2
  Int genus() const;

  // (i lambda_s) mod m for s >= 1, m - (i lambda_0 mod m) for s = 0.
  // Requires 1 <= i <= m-1.
  Int t_value(Place s, Int i) const;
  // sum_k ceil(i lambda_k / m) - floor(i lambda_0 / m) - 1.
  // When some place is totally ramified the value is checked to lie in
  // [0, r-1]; otherwise it is returned as computed.
  Int beta0(Int i) const;
  // beta_0 with every lambda multiplied by the inverse of lambda_s mod m.
  // Throws NotTotallyRamified if gcd(m, lambda_s) != 1. Requires s >= 1.
  Int beta_s(Place s, Int i) const;
  // max_i beta0(i) and min_i beta0(i).
  Int beta_max() const;
  Int beta_min() const;

  std::string describe() const;

  friend bool operator==(const KummerCurve&, const KummerCurve&) = default;

private:
  void check_place(Place s) const;
  void check_index(Int i) const;

  Int m_;
  std::vector<Int> lambdas_;
  Int lambda0_ = 0;
};

}  // namespace kummergap
