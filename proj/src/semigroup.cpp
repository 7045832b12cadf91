#include "kummergap/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace kummergap {

GapSet::GapSet(std::vector<Int> values) : values_(std::move(values)) {
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 1) fail(ErrorCode::InvalidArgument, "gap set entries must be positive");
    if (k > 0 && values_[k] <= values_[k - 1])
      fail(ErrorCode::InvalidArgument, "gap set must be strictly increasing");
  }
}

GapSet GapSet::from_unsorted(std::vector<Int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return GapSet(std::move(values));
}

bool GapSet::contains(Int n) const { return std::binary_search(values_.begin(), values_.end(), n); }

Int GapSet::sum() const {
  Int total = 0;
  for (Int v : values_) total = checked_add(total, v);
  return total;
}

NumericalSemigroup::NumericalSemigroup() : membership_{true, true} {}

NumericalSemigroup::NumericalSemigroup(GapSet gaps) : gaps_(std::move(gaps)) {
  frobenius_ = gaps_.empty() ? -1 : gaps_.values().back();
  membership_.assign(static_cast<std::size_t>(frobenius_ + 2), true);
  for (Int gap : gaps_) membership_[static_cast<std::size_t>(gap)] = false;
  multiplicity_ = 1;
  while (!contains(multiplicity_)) ++multiplicity_;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> generators) {
  if (generators.empty()) fail(ErrorCode::InvalidArgument, "empty generator list");
  std::vector<Int> gens(generators.begin(), generators.end());
  Int g = 0;
  for (Int a : gens) {
    if (a <= 0) fail(ErrorCode::InvalidArgument, "generators must be positive");
    g = gcd(g, a);
  }
  if (g != 1) fail(ErrorCode::NotSemigroup, "not a numerical semigroup: generators have gcd " + std::to_string(g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const Int smallest = gens.front();
  if (smallest == 1) return NumericalSemigroup();

  // Forward DP. Once `smallest` consecutive members have appeared every
  // larger integer is a member, so the scan stops there. The Schur bound
  // F <= (a_min - 1)(a_max - 1) - 1 caps the table for gcd-1 inputs.
  const Int cap = checked_add(checked_mul(smallest - 1, gens.back() - 1), smallest + 1);
  std::vector<bool> member{true};
  std::vector<Int> gaps;
  Int run = 1;
  for (Int n = 1; run < smallest; ++n) {
    if (n > cap) fail(ErrorCode::Internal, "membership scan exceeded the Frobenius bound");
    bool in = false;
    for (Int a : gens) {
      if (a > n) break;
      if (member[static_cast<std::size_t>(n - a)]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      gaps.push_back(n);
    }
  }
  return NumericalSemigroup(GapSet(std::move(gaps)));
}

NumericalSemigroup NumericalSemigroup::from_gap_set(const GapSet& gaps) {
  if (gaps.empty()) return NumericalSemigroup();
  const Int frob = gaps.values().back();
  // Bit n of `member_bits` / `gap_bits` describes the integer n in [0, frob].
  const std::size_t words = static_cast<std::size_t>(frob / 64 + 1);
  std::vector<std::uint64_t> gap_bits(words, 0);
  for (Int gap : gaps) gap_bits[static_cast<std::size_t>(gap / 64)] |= std::uint64_t{1} << (gap % 64);
  std::vector<std::uint64_t> member_bits(words);
  for (std::size_t w = 0; w < words; ++w) member_bits[w] = ~gap_bits[w];
  if (frob % 64 != 63) member_bits[words - 1] &= (std::uint64_t{1} << (frob % 64 + 1)) - 1;

  auto is_member = [&](Int n) {
    return ((member_bits[static_cast<std::size_t>(n / 64)] >> (n % 64)) & 1U) != 0;
  };
  // For each member a <= frob/2 look for a member b >= a with a + b a gap,
  // i.e. test gap_bits against member_bits shifted left by a.
  for (Int a = 1; 2 * a <= frob; ++a) {
    if (!is_member(a)) continue;
    const std::size_t word_shift = static_cast<std::size_t>(a / 64);
    const unsigned bit_shift = static_cast<unsigned>(a % 64);
    for (std::size_t w = word_shift; w < words; ++w) {
      std::uint64_t shifted = member_bits[w - word_shift] << bit_shift;
      if (bit_shift != 0 && w > word_shift) shifted |= member_bits[w - word_shift - 1] >> (64 - bit_shift);
      std::uint64_t hit = shifted & gap_bits[w];
      if (hit != 0) {
        Int sum = static_cast<Int>(w * 64) + __builtin_ctzll(hit);
        fail(ErrorCode::NotSemigroup, "complement not a semigroup: " + std::to_string(a) + " + " +
                                          std::to_string(sum - a) + " = " + std::to_string(sum) + " is a gap");
      }
    }
  }
  return NumericalSemigroup(gaps);
}

bool NumericalSemigroup::contains(Int n) const noexcept {
  if (n < 0) return false;
  if (n > frobenius_) return true;
  return membership_[static_cast<std::size_t>(n)];
}

AperyTuple NumericalSemigroup::apery(Int n) const {
  if (n <= 0 || !contains(n))
    fail(ErrorCode::InvalidBase, "Apery base " + std::to_string(n) + " is not a nonzero member");
  AperyTuple out{n, std::vector<Int>(static_cast<std::size_t>(n))};
  for (Int residue = 0; residue < n; ++residue) {
    Int w = residue;
    while (!contains(w)) w += n;
    out.values[static_cast<std::size_t>(residue)] = w;
  }
  return out;
}

std::vector<Int> NumericalSemigroup::generators_via_apery(Int n) const {
  AperyTuple ap = apery(n);
  std::vector<Int> out{n};
  out.insert(out.end(), ap.values.begin() + 1, ap.values.end());
  return out;
}

std::vector<Int> NumericalSemigroup::minimal_generators() const {
  if (multiplicity_ == 1) return {1};
  std::vector<Int> out;
  // Minimal generators lie in Ap(H, multiplicity), hence below F + m.
  const Int limit = frobenius_ + multiplicity_;
  for (Int a = 1; a <= limit; ++a) {
    if (!contains(a)) continue;
    bool decomposes = false;
    for (Int b = 1; 2 * b <= a && !decomposes; ++b)
      decomposes = contains(b) && contains(a - b);
    if (!decomposes) out.push_back(a);
  }
  return out;
}

bool NumericalSemigroup::is_symmetric_apery(Int n) const {
  AperyTuple ap = apery(n);
  std::vector<Int> sorted = ap.values;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t last = sorted.size() - 1;
  for (std::size_t k = 0; k <= last; ++k)
    if (sorted[k] + sorted[last - k] != sorted[last]) return false;
  return true;
}

bool NumericalSemigroup::is_symmetric() const {
  const bool by_frobenius = gaps_.empty() || frobenius_ == 2 * genus() - 1;
  if (by_frobenius != is_symmetric_apery(multiplicity_))
    fail(ErrorCode::Internal, "symmetry tests disagree");
  return by_frobenius;
}

}  // namespace kummergap
