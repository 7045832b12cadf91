#include "kummergap/weierstrass.hpp"

#include <algorithm>

namespace kummergap {

namespace {

void require_totally_ramified(const KummerCurve& curve, Place s) {
  if (!curve.totally_ramified(s))
    fail(ErrorCode::NotTotallyRamified, "place not totally ramified: gcd(m, lambda_" + std::to_string(s.index()) +
                                            ") = " + std::to_string(curve.fiber_size(s)));
}

GapSet distinct_sorted(std::vector<Int> values) {
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    fail(ErrorCode::Internal, "gap formula produced a repeated value");
  return GapSet(std::move(values));
}

}  // namespace

GapSet gap_set(const KummerCurve& curve, Place s) {
  require_totally_ramified(curve, s);
  const Int m = curve.m();
  std::vector<Int> values;
  for (Int i = 1; i < m; ++i) {
    const Int t = curve.t_value(s, i);
    const Int beta = curve.beta0(i);
    for (Int j = 0; j < beta; ++j) values.push_back(checked_add(checked_mul(m, j), t));
  }
  return distinct_sorted(std::move(values));
}

GapSet gap_set_reference(const KummerCurve& curve, Place s) {
  require_totally_ramified(curve, s);
  const Int m = curve.m();
  const Int lam0 = curve.lambda0();
  std::vector<Int> values;
  if (s.is_infinity()) {
    for (Int i = 1; i < m; ++i) {
      Int upper = -1;
      for (Int lam : curve.lambdas()) upper += ceil_div(i * lam, m);
      const Int lower = floor_div(i * lam0, m) + 1;
      for (Int j = lower; j <= upper; ++j) values.push_back(checked_sub(checked_mul(m, j), i * lam0));
    }
  } else {
    const Int inverse = mod_inverse(curve.lambda(s), m);
    for (Int i = 1; i < m; ++i) {
      const Int scaled = i * inverse;
      Int upper = -2 - floor_div(checked_mul(scaled, lam0), m);
      for (Int lam : curve.lambdas()) upper += ceil_div(scaled * lam, m);
      for (Int j = 0; j <= upper; ++j) values.push_back(checked_add(checked_mul(m, j), i));
    }
  }
  return distinct_sorted(std::move(values));
}

PartialGaps partial_gaps(const KummerCurve& curve, Place s) {
  const Int d = curve.fiber_size(s);
  if (d == 1)
    fail(ErrorCode::TotallyRamified, "place is totally ramified: use the complete gap set for place " +
                                         std::to_string(s.index()));
  const Int m = curve.m();
  std::vector<Int> values;
  for (Int i = 1; i < m; ++i) {
    const Int t = curve.t_value(s, i);
    const Int beta = curve.beta0(i);
    Int shift = 0;
    if (!s.is_infinity()) {
      const Int prod = i * curve.lambda(s);
      shift = (m / d) * (1 + floor_div(prod, m) - ceil_div(prod, m));
    }
    for (Int j = 0; j < beta; ++j) values.push_back((m * j + t) / d + shift);
  }
  return {GapSet::from_unsorted(std::move(values)), m == 2};
}

PartialGaps generic_gaps(const KummerCurve& curve) {
  const Int beta = curve.beta_max();
  if (curve.has_totally_ramified_place()) {
    const Int floor_bound = ceil_div(curve.genus(), curve.m() - 1);
    if (beta < floor_bound)
      fail(ErrorCode::Internal, "max beta0 below ceil(g/(m-1)) for " + curve.describe());
  }
  std::vector<Int> values;
  for (Int n = 1; n <= beta; ++n) values.push_back(n);
  return {GapSet(std::move(values)), curve.m() == 2};
}

AperyTuple weierstrass_apery(const KummerCurve& curve, Place s) {
  require_totally_ramified(curve, s);
  const Int m = curve.m();
  AperyTuple out{m, std::vector<Int>(static_cast<std::size_t>(m), -1)};
  out.values[0] = 0;
  for (Int i = 1; i < m; ++i) {
    const Int t = curve.t_value(s, i);
    Int& slot = out.values[static_cast<std::size_t>(t % m)];
    if (slot != -1) fail(ErrorCode::Internal, "t_s is not a bijection on 1..m-1");
    slot = checked_add(checked_mul(m, curve.beta0(i)), t);
  }
  return out;
}

std::vector<Int> weierstrass_generators(const KummerCurve& curve, Place s) {
  require_totally_ramified(curve, s);
  std::vector<Int> gens{curve.m()};
  for (Int i = 1; i < curve.m(); ++i)
    gens.push_back(checked_add(checked_mul(curve.m(), curve.beta0(i)), curve.t_value(s, i)));
  return gens;
}

NumericalSemigroup weierstrass_semigroup(const KummerCurve& curve, Place s) {
  const std::vector<Int> gens = weierstrass_generators(curve, s);
  return NumericalSemigroup::from_generators(gens);
}

Int multiplicity_formula(const KummerCurve& curve, Place s) {
  require_totally_ramified(curve, s);
  const Int m = curve.m();
  const Int alpha = curve.beta_min();
  Int best = m;
  for (Int i = 1; i < m; ++i)
    if (curve.beta0(i) == alpha) best = std::min(best, m * alpha + curve.t_value(s, i));
  return best;
}

Int frobenius_formula(const KummerCurve& curve, Place s) {
  require_totally_ramified(curve, s);
  if (curve.genus() == 0) fail(ErrorCode::InvalidArgument, "Frobenius number formula needs genus >= 1");
  const Int m = curve.m();
  const Int beta = curve.beta_max();
  Int best = 0;
  for (Int i = 1; i < m; ++i)
    if (curve.beta0(i) == beta) best = std::max(best, m * (beta - 1) + curve.t_value(s, i));
  return best;
}

MultiplicityReport multiplicity_report(const KummerCurve& curve, Place s) {
  MultiplicityReport out;
  out.multiplicity = multiplicity_formula(curve, s);
  const Int g = curve.genus();
  if (g > 0) out.frobenius = frobenius_formula(curve, s);
  out.multiplicity_is_m_predicted = curve.beta_min() >= 1;
  out.all_coprime = curve.all_coprime();
  if (out.all_coprime) {
    const Int m = curve.m();
    const Int r = static_cast<Int>(curve.r());
    // genus 0 uses the convention F = -1
    const Int frob = out.frobenius.value_or(-1);
    out.multiplicity_from_frobenius = std::min(m, m * (r - 1) - frob);
    out.large_r_forces_m = m <= r;
  }
  return out;
}

const char* symmetry_verdict_name(SymmetryVerdict v) noexcept {
  switch (v) {
    case SymmetryVerdict::Symmetric: return "Symmetric";
    case SymmetryVerdict::NotSymmetric: return "NotSymmetric";
    case SymmetryVerdict::SufficientConditionHolds: return "SufficientConditionHolds";
    case SymmetryVerdict::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

const char* symmetry_criterion_name(SymmetryCriterion c) noexcept {
  switch (c) {
    case SymmetryCriterion::None: return "none";
    case SymmetryCriterion::LambdasEqual: return "lambdas_equal";
    case SymmetryCriterion::OffPlaceLambdasBalance: return "off_place_lambdas_balance";
    case SymmetryCriterion::LambdasDivideM: return "lambdas_divide_m";
    case SymmetryCriterion::ComplementsDivideM: return "complements_divide_m";
  }
  return "unknown";
}

SymmetryPrediction symmetry_predict(const KummerCurve& curve, Place s) {
  require_totally_ramified(curve, s);
  const Int m = curve.m();
  const Int lam0_mod = mod(curve.lambda0(), m);
  const auto& lambdas = curve.lambdas();

  // every lambda_k with k != s satisfies pred
  auto others_all = [&](auto pred) {
    for (std::size_t k = 1; k <= lambdas.size(); ++k)
      if (k != s.index() && !pred(lambdas[k - 1])) return false;
    return true;
  };
  auto divides_m = [m](Int v) { return v > 0 && m % v == 0; };

  if (curve.all_coprime()) {
    if (s.is_infinity()) {
      const bool equal = others_all([&](Int lam) { return lam == lambdas.front(); });
      return equal ? SymmetryPrediction{SymmetryVerdict::Symmetric, SymmetryCriterion::LambdasEqual}
                   : SymmetryPrediction{SymmetryVerdict::NotSymmetric, SymmetryCriterion::None};
    }
    // the least positive lambda with lambda_0 + lambda = 0 mod m
    const Int balance = m - lam0_mod;
    const bool match = others_all([&](Int lam) { return lam == balance; });
    return match ? SymmetryPrediction{SymmetryVerdict::Symmetric, SymmetryCriterion::OffPlaceLambdasBalance}
                 : SymmetryPrediction{SymmetryVerdict::NotSymmetric, SymmetryCriterion::None};
  }

  const bool lambdas_divide = others_all(divides_m);
  const bool complements_divide = others_all([&](Int lam) { return divides_m(m - lam); });
  bool first = false;
  bool second = false;
  if (s.is_infinity()) {
    first = lambdas_divide;
    second = complements_divide;
  } else {
    first = lambdas_divide && divides_m(m - lam0_mod);
    second = complements_divide && (lam0_mod == 0 || divides_m(lam0_mod));
  }
  if (first) return {SymmetryVerdict::SufficientConditionHolds, SymmetryCriterion::LambdasDivideM};
  if (second) return {SymmetryVerdict::SufficientConditionHolds, SymmetryCriterion::ComplementsDivideM};
  return {SymmetryVerdict::Inconclusive, SymmetryCriterion::None};
}

CoincidenceReport gap_sets_coincide(const KummerCurve& curve, Place s1, Place s2) {
  require_totally_ramified(curve, s1);
  require_totally_ramified(curve, s2);
  CoincidenceReport out;
  out.equal = gap_set(curve, s1) == gap_set(curve, s2);
  const Int m = curve.m();
  if (!s1.is_infinity() && !s2.is_infinity()) {
    out.same_lambda = curve.lambda(s1) == curve.lambda(s2);
    if (m == 3 && !out.same_lambda) {
      Int r1 = 0;
      Int r2 = 0;
      for (Int lam : curve.lambdas()) (lam == 1 ? r1 : r2) += 1;
      const Int value = r1 - r2 + mod(curve.lambda0(), 3);
      out.trigonal_applicable = true;
      out.trigonal_predicts_equal = value >= 0 && value <= 2;
    }
  } else if (s1.is_infinity() != s2.is_infinity()) {
    const Place root = s1.is_infinity() ? s2 : s1;
    out.infinity_balance = mod(curve.lambda0() + curve.lambda(root), m) == 0;
  } else {
    out.same_lambda = true;
  }
  return out;
}

}  // namespace kummergap
