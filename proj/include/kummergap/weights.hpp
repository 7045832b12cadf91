#pragma once

// Weierstrass weights at the totally ramified places and the limit of
// BW / (g^3 - g) as the number of branch points grows.

#include <map>
#include <vector>

#include "kummergap/curve.hpp"
#include "kummergap/rational.hpp"
#include "kummergap/semigroup.hpp"

namespace kummergap {

// sum(gaps) - g(g+1)/2. Assumes a classical function field (characteristic
// 0 or at least 2g - 2); that hypothesis is not checked. Throws
// InvalidArgument when |gaps| != g.
Int weight(const GapSet& gaps, Int g);

// Sum of the weights of all totally ramified places (0 if there are none).
Int bw(const KummerCurve& curve);

// BW / (g^3 - g); throws RatioUndefined for genus <= 1.
Rational bw_ratio(const KummerCurve& curve);

// Densities k_j of branch-point multiplicities j, for j coprime to m.
class LimitProfile {
public:
  // Keys missing from `densities` get density 0. Throws InvalidArgument
  // for a key outside 1..m-1 or sharing a factor with m, a density outside
  // [0, 1], or densities not summing to 1.
  LimitProfile(Int m, const std::map<Int, Rational>& densities);

  Int m() const noexcept { return m_; }
  // One entry per j in 1..m-1 with gcd(j, m) = 1.
  const std::map<Int, Rational>& densities() const noexcept { return densities_; }
  Rational density(Int j) const;

  friend bool operator==(const LimitProfile&, const LimitProfile&) = default;

private:
  Int m_;
  std::map<Int, Rational> densities_;
};

// k_j = r_j / r. Throws HypothesisViolated unless every lambda_k is coprime
// to m.
LimitProfile profile_of_curve(const KummerCurve& curve);

// 4 / (m (m-1)^3) * sum_i [sum_j ((i j) mod m) k_j]^2 - 1 / (m-1)
Rational asymptotic_limit(const LimitProfile& profile);

struct LimitBounds {
  Rational lower;  // 1 / (m-1)^2
  Rational upper;  // (m+1) / (3 (m-1)^2)
};

LimitBounds limit_bounds(Int m);

struct SweepRow {
  Int r = 0;
  Int genus = 0;
  bool skipped = false;  // genus <= 1, no ratio
  Rational ratio;
  Rational limit;
  Rational difference;  // |ratio - limit|
};

// For each repeat count builds the curve whose multiplicities are `pattern`
// repeated that many times. Rows come back sorted by r. Throws
// HypothesisViolated for a pattern entry sharing a factor with m and
// InvalidArgument for an empty pattern.
std::vector<SweepRow> convergence_sweep(Int m, const std::vector<Int>& pattern, const std::vector<Int>& repeats);

}  // namespace kummergap
