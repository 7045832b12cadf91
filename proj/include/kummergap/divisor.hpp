#pragma once

// Divisors of the differentials
//   w_{i,j}(a) = (x - a)^j y^i dx / prod_k (x - a_k)^{ceil(i lambda_k / m)},
// 1 <= i <= m-1, 0 <= j <= beta0(i) - 1, recorded per fiber of x. Every place
// in one fiber carries the same coefficient.

#include <compare>
#include <map>
#include <vector>

#include "kummergap/curve.hpp"

namespace kummergap {

enum class FiberKind { Root, Infinity, Extra };

// Fiber(k) for k = 1..r, the fiber over the pole of x, or the fiber over the
// zero of x - a for a generic a.
struct FiberLabel {
  FiberKind kind = FiberKind::Root;
  std::size_t index = 0;  // meaningful for Root only

  static FiberLabel root(std::size_t k) { return {FiberKind::Root, k}; }
  static FiberLabel infinity() { return {FiberKind::Infinity, 0}; }
  static FiberLabel extra() { return {FiberKind::Extra, 0}; }

  friend auto operator<=>(const FiberLabel&, const FiberLabel&) = default;
};

// Either a_s for some root (1 <= s <= r) or a generic a.
struct Anchor {
  bool generic = true;
  std::size_t root = 0;

  static Anchor at_root(std::size_t s) { return {false, s}; }
  static Anchor generic_point() { return {true, 0}; }
};

class Divisor {
public:
  void set(FiberLabel label, Int coefficient, Int fiber_size);

  Int coefficient(FiberLabel label) const;
  // Number of places in the fiber; 0 for an absent label.
  Int fiber_size(FiberLabel label) const;
  // sum of coefficient * fiber size
  Int degree() const;
  bool effective() const;
  bool is_zero() const;

  struct Entry {
    Int coefficient = 0;
    Int fiber_size = 0;
  };
  const std::map<FiberLabel, Entry>& entries() const noexcept { return entries_; }

private:
  std::map<FiberLabel, Entry> entries_;
};

// Throws InvalidArgument if i or j is out of range or the anchor root index
// is outside 1..r.
Divisor differential_divisor(const KummerCurve& curve, Anchor anchor, Int i, Int j);

// All (i, j) index pairs with 0 <= j < beta0(i).
std::vector<std::pair<Int, Int>> differential_indices(const KummerCurve& curve);

}  // namespace kummergap
