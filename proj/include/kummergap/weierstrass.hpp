#pragma once

// Gap sets and Weierstrass semigroups at the places of a Kummer cover.

#include <optional>
#include <string>
#include <vector>

#include "kummergap/curve.hpp"
#include "kummergap/semigroup.hpp"

namespace kummergap {

// G(Q_s) = { m j + t_s(i) : 1 <= i <= m-1, 0 <= j <= beta0(i) - 1 }.
// Throws NotTotallyRamified when gcd(m, lambda_s) != 1.
GapSet gap_set(const KummerCurve& curve, Place s);

// Literal set-builder description in terms of lambda_0 (s = 0) or of the
// inverse of lambda_s (s >= 1). Evaluated without going through t_s or
// beta0; kept as an independent reference for gap_set.
GapSet gap_set_reference(const KummerCurve& curve, Place s);

// Gap subsets that do not determine G(Q) in general.
struct PartialGaps {
  GapSet gaps;
  // Set only where the subset is known to be the whole gap set (m = 2).
  bool complete = false;
};

// Gaps common to every place over P_s when gcd(m, lambda_s) != 1.
// Throws TotallyRamified otherwise.
PartialGaps partial_gaps(const KummerCurve& curve, Place s);
// {1, ..., max_i beta0(i)} at a place not lying over P_0..P_r.
PartialGaps generic_gaps(const KummerCurve& curve);

// Ap(H(Q_s), m) indexed by residue: w(t_s(i)) = m beta0(i) + t_s(i).
AperyTuple weierstrass_apery(const KummerCurve& curve, Place s);
// Generated by m and the nonzero Apery values.
NumericalSemigroup weierstrass_semigroup(const KummerCurve& curve, Place s);
// m followed by m beta0(i) + t_s(i) for i = 1..m-1.
std::vector<Int> weierstrass_generators(const KummerCurve& curve, Place s);

Int multiplicity_formula(const KummerCurve& curve, Place s);
// Throws InvalidArgument when the genus is 0.
Int frobenius_formula(const KummerCurve& curve, Place s);

struct MultiplicityReport {
  Int multiplicity = 0;
  std::optional<Int> frobenius;  // empty for genus 0
  // True iff every beta0(i) >= 1, which predicts multiplicity == m.
  bool multiplicity_is_m_predicted = false;
  bool all_coprime = false;
  // min(m, m(r-1) - F), present when all_coprime and genus >= 1.
  std::optional<Int> multiplicity_from_frobenius;
  // all_coprime and m <= r, which forces multiplicity == m.
  bool large_r_forces_m = false;
};

MultiplicityReport multiplicity_report(const KummerCurve& curve, Place s);

enum class SymmetryVerdict { Symmetric, NotSymmetric, SufficientConditionHolds, Inconclusive };

enum class SymmetryCriterion {
  None,
  // exact verdicts, all lambda_k coprime to m
  LambdasEqual,            // s = 0: lambda_1 = ... = lambda_r
  OffPlaceLambdasBalance,  // s >= 1: every other lambda equals -lambda_0 mod m
  // sufficient conditions
  LambdasDivideM,
  ComplementsDivideM,
};

struct SymmetryPrediction {
  SymmetryVerdict verdict = SymmetryVerdict::Inconclusive;
  SymmetryCriterion criterion = SymmetryCriterion::None;
};

const char* symmetry_verdict_name(SymmetryVerdict v) noexcept;
const char* symmetry_criterion_name(SymmetryCriterion c) noexcept;

// Exact when every gcd(m, lambda_k) = 1; otherwise reports whether one of
// the divisibility conditions guaranteeing symmetry applies.
SymmetryPrediction symmetry_predict(const KummerCurve& curve, Place s);

struct CoincidenceReport {
  bool equal = false;
  // s1, s2 >= 1 and lambda_s1 = lambda_s2
  bool same_lambda = false;
  // one place is 0, the other s, and lambda_0 + lambda_s = 0 mod m
  bool infinity_balance = false;
  // m = 3, s1, s2 >= 1 with different lambdas: the r_1/r_2 criterion applies
  bool trigonal_applicable = false;
  bool trigonal_predicts_equal = false;

  bool explained() const { return same_lambda || infinity_balance || trigonal_predicts_equal; }
};

// Throws NotTotallyRamified if either place is not totally ramified.
CoincidenceReport gap_sets_coincide(const KummerCurve& curve, Place s1, Place s2);

}  // namespace kummergap
