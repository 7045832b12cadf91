#pragma once

// Numerical semigroups H of N0 with finite complement: construction from
// generators or from a gap set, the standard invariants, Apery sets and the
// symmetry test. Also used as the brute-force reference layer for every
// closed-form result about Weierstrass semigroups.

#include <cstddef>
#include <span>
#include <vector>

#include "kummergap/checked.hpp"

namespace kummergap {

// Strictly increasing list of positive integers.
class GapSet {
public:
  GapSet() = default;
  // Throws InvalidArgument unless strictly increasing with entries >= 1.
  explicit GapSet(std::vector<Int> values);
  // Sorts and deduplicates before validation.
  static GapSet from_unsorted(std::vector<Int> values);

  const std::vector<Int>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  bool contains(Int n) const;
  Int sum() const;
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const GapSet&, const GapSet&) = default;

private:
  std::vector<Int> values_;
};

// Least member of H in each residue class modulo `base`, indexed by residue.
struct AperyTuple {
  Int base = 1;
  std::vector<Int> values;

  friend bool operator==(const AperyTuple&, const AperyTuple&) = default;
};

struct SemigroupInvariants {
  Int genus = 0;
  Int frobenius = -1;
  Int multiplicity = 1;

  friend bool operator==(const SemigroupInvariants&, const SemigroupInvariants&) = default;
};

class NumericalSemigroup {
public:
  // N0 itself: no gaps, Frobenius number -1.
  NumericalSemigroup();

  // All N0-combinations of `generators`. Throws InvalidArgument on an empty
  // list or a non-positive entry, NotSemigroup when the gcd is not 1.
  static NumericalSemigroup from_generators(std::span<const Int> generators);
  // Throws NotSemigroup (naming a witnessing pair) if the complement of
  // `gaps` is not closed under addition.
  static NumericalSemigroup from_gap_set(const GapSet& gaps);

  const GapSet& gaps() const noexcept { return gaps_; }
  Int genus() const noexcept { return static_cast<Int>(gaps_.size()); }
  Int frobenius() const noexcept { return frobenius_; }
  Int multiplicity() const noexcept { return multiplicity_; }
  SemigroupInvariants invariants() const { return {genus(), frobenius_, multiplicity_}; }

  bool contains(Int n) const noexcept;

  // Throws InvalidBase unless n is a nonzero member.
  AperyTuple apery(Int n) const;
  // {n} followed by the nonzero Apery values in residue order.
  std::vector<Int> generators_via_apery(Int n) const;
  // The unique minimal system of generators, ascending.
  std::vector<Int> minimal_generators() const;

  // F = 2g - 1, with N0 symmetric by convention. Cross-checked internally
  // against the Apery pairing at base multiplicity; a disagreement throws
  // Internal.
  bool is_symmetric() const;
  // Pairing test on the sorted Apery set a_0 < ... < a_{n-1}:
  // a_i + a_{n-1-i} = a_{n-1} for all i.
  bool is_symmetric_apery(Int n) const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }

private:
  explicit NumericalSemigroup(GapSet gaps);

  GapSet gaps_;
  Int frobenius_ = -1;
  Int multiplicity_ = 1;
  // membership_[n] for 0 <= n <= frobenius_ + 1
  std::vector<bool> membership_;
};

}  // namespace kummergap
