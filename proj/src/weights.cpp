#include "kummergap/weights.hpp"

#include <algorithm>

#include "kummergap/weierstrass.hpp"

namespace kummergap {

Int weight(const GapSet& gaps, Int g) {
  if (g < 0 || static_cast<Int>(gaps.size()) != g)
    fail(ErrorCode::InvalidArgument,
         "gap set has " + std::to_string(gaps.size()) + " elements but the genus is " + std::to_string(g));
  return checked_sub(gaps.sum(), checked_mul(g, g + 1) / 2);
}

Int bw(const KummerCurve& curve) {
  const Int g = curve.genus();
  Int total = 0;
  for (Place s : curve.totally_ramified_places()) total = checked_add(total, weight(gap_set(curve, s), g));
  return total;
}

Rational bw_ratio(const KummerCurve& curve) {
  const Int g = curve.genus();
  if (g <= 1) fail(ErrorCode::RatioUndefined, "ratio undefined: genus " + std::to_string(g) + " <= 1");
  const Int denominator = checked_sub(checked_mul(checked_mul(g, g), g), g);
  return Rational(bw(curve), denominator);
}

LimitProfile::LimitProfile(Int m, const std::map<Int, Rational>& densities) : m_(m) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "m must be at least 2");
  for (Int j = 1; j < m; ++j)
    if (gcd(j, m) == 1) densities_[j] = Rational(0);
  Rational total(0);
  for (const auto& [j, k] : densities) {
    if (j < 1 || j >= m || gcd(j, m) != 1)
      fail(ErrorCode::InvalidArgument, "density key " + std::to_string(j) + " is not a unit modulo " + std::to_string(m));
    if (k < Rational(0) || k > Rational(1))
      fail(ErrorCode::InvalidArgument, "density k_" + std::to_string(j) + " = " + k.str() + " outside [0, 1]");
    densities_[j] = k;
    total += k;
  }
  if (total != Rational(1)) fail(ErrorCode::InvalidArgument, "densities sum to " + total.str() + ", not 1");
}

Rational LimitProfile::density(Int j) const {
  auto it = densities_.find(j);
  return it == densities_.end() ? Rational(0) : it->second;
}

LimitProfile profile_of_curve(const KummerCurve& curve) {
  if (!curve.roots_coprime())
    fail(ErrorCode::HypothesisViolated, "limit requires every lambda_k coprime to m");
  std::map<Int, Int> counts;
  for (Int lam : curve.lambdas()) ++counts[lam];
  std::map<Int, Rational> densities;
  const Int r = static_cast<Int>(curve.r());
  for (const auto& [j, count] : counts) densities[j] = Rational(count, r);
  return LimitProfile(curve.m(), densities);
}

Rational asymptotic_limit(const LimitProfile& profile) {
  const Int m = profile.m();
  Rational squares(0);
  for (Int i = 1; i < m; ++i) {
    Rational inner(0);
    for (const auto& [j, k] : profile.densities()) inner += Rational(mod(i * j, m)) * k;
    squares += inner * inner;
  }
  const Int cube = checked_mul(checked_mul(m - 1, m - 1), m - 1);
  return Rational(4, checked_mul(m, cube)) * squares - Rational(1, m - 1);
}

LimitBounds limit_bounds(Int m) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "m must be at least 2");
  const Int sq = checked_mul(m - 1, m - 1);
  return {Rational(1, sq), Rational(m + 1, checked_mul(3, sq))};
}

std::vector<SweepRow> convergence_sweep(Int m, const std::vector<Int>& pattern, const std::vector<Int>& repeats) {
  if (pattern.empty()) fail(ErrorCode::InvalidArgument, "sweep pattern is empty");
  if (m < 2) fail(ErrorCode::InvalidArgument, "m must be at least 2");
  for (Int lam : pattern)
    if (lam < 1 || lam >= m || gcd(lam, m) != 1)
      fail(ErrorCode::HypothesisViolated,
           "sweep pattern entry " + std::to_string(lam) + " is not coprime to m=" + std::to_string(m));
  std::vector<Int> sorted_repeats = repeats;
  std::sort(sorted_repeats.begin(), sorted_repeats.end());
  sorted_repeats.erase(std::unique(sorted_repeats.begin(), sorted_repeats.end()), sorted_repeats.end());

  std::vector<SweepRow> rows;
  for (Int rep : sorted_repeats) {
    if (rep < 1) fail(ErrorCode::InvalidArgument, "repeat counts must be positive");
    std::vector<Int> lambdas;
    for (Int k = 0; k < rep; ++k) lambdas.insert(lambdas.end(), pattern.begin(), pattern.end());
    const KummerCurve curve(m, std::move(lambdas));
    SweepRow row;
    row.r = static_cast<Int>(curve.r());
    row.genus = curve.genus();
    row.limit = asymptotic_limit(profile_of_curve(curve));
    if (row.genus <= 1) {
      row.skipped = true;
    } else {
      row.ratio = bw_ratio(curve);
      row.difference = (row.ratio - row.limit).abs();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace kummergap
