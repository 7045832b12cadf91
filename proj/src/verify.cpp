#include "kummergap/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "kummergap/divisor.hpp"
#include "kummergap/semigroup.hpp"
#include "kummergap/weierstrass.hpp"
#include "kummergap/weights.hpp"

namespace kummergap {

namespace {

const char* const kInvariantNames[] = {
    "semigroup.complement_closure",
    "semigroup.gap_round_trip",
    "semigroup.apery_residues",
    "semigroup.symmetry_cross_check",
    "semigroup.frobenius_bound",
    "kummer.oracle_equality",
    "kummer.cardinality",
    "kummer.complement_closed",
    "kummer.beta_s_of_t",
    "kummer.t_sum",
    "kummer.beta_complement",
    "kummer.apery_pairing_mr",
    "kummer.apery_agreement",
    "kummer.generators_regenerate",
    "kummer.multiplicity_frobenius",
    "kummer.multiplicity_iff_beta",
    "kummer.multiplicity_frobenius_relation",
    "kummer.large_r_multiplicity",
    "kummer.symmetry_exact",
    "kummer.symmetric_iff_m_r",
    "kummer.symmetry_sufficient",
    "kummer.coincidence_criteria",
    "kummer.differential_basis",
    "kummer.t_bijection",
    "kummer.generic_gap_bound",
    "kummer.hyperelliptic_complete",
    "weights.limit_bounds",
    "weights.upper_equality",
    "weights.lower_equality",
    "weights.formula_symmetry",
    "weights.bw_nonnegative",
    "weights.hyperelliptic_ratio",
};

class Recorder {
public:
  Recorder() {
    for (const char* name : kInvariantNames) {
      index_[name] = outcomes_.size();
      InvariantOutcome outcome;
      outcome.name = name;
      outcomes_.push_back(outcome);
    }
  }

  // `context` is only rendered for the first failure of each invariant.
  void check(const std::string& name, bool ok, const std::function<std::string()>& context) {
    InvariantOutcome& o = outcomes_.at(index_.at(name));
    ++o.checked;
    if (!ok) {
      if (o.failures == 0) o.first_failure = context();
      ++o.failures;
    }
  }

  // Runs `body`; a library exception counts as a failure of `name`.
  void guarded(const std::string& name, const std::function<std::string()>& context,
               const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      check(name, false, [&] { return context() + ": " + error_code_name(e.code()) + ": " + e.what(); });
    }
  }

  std::vector<InvariantOutcome> take() { return std::move(outcomes_); }

private:
  std::map<std::string, std::size_t> index_;
  std::vector<InvariantOutcome> outcomes_;
};

std::string place_context(const KummerCurve& curve, Place s) {
  return curve.describe() + ", place " + std::to_string(s.index());
}

bool closed_up_to(const NumericalSemigroup& h, Int limit) {
  for (Int a = 1; a <= limit; ++a) {
    if (!h.contains(a)) continue;
    for (Int b = a; a + b <= limit; ++b)
      if (h.contains(b) && !h.contains(a + b)) return false;
  }
  return true;
}

void check_semigroup(Recorder& rec, const NumericalSemigroup& h, const std::string& label) {
  const Int frob = h.frobenius();
  auto ctx = [&] { return label; };
  rec.check("semigroup.complement_closure", closed_up_to(h, 2 * frob + 2), ctx);
  rec.guarded("semigroup.gap_round_trip", ctx, [&] {
    rec.check("semigroup.gap_round_trip", NumericalSemigroup::from_gap_set(h.gaps()) == h, ctx);
  });

  for (Int n = 1; n <= frob + 1; ++n) {
    if (!h.contains(n)) continue;
    AperyTuple ap = h.apery(n);
    bool ok = ap.values[0] == 0;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Int residue = 0; residue < n; ++residue) {
      Int w = ap.values[static_cast<std::size_t>(residue)];
      ok = ok && mod(w, n) == residue && h.contains(w) && !h.contains(w - n) && !seen[static_cast<std::size_t>(residue)];
      seen[static_cast<std::size_t>(residue)] = true;
    }
    rec.check("semigroup.apery_residues", ok, [&] { return label + ", base " + std::to_string(n); });
    const bool by_frobenius = h.genus() == 0 || frob == 2 * h.genus() - 1;
    rec.check("semigroup.symmetry_cross_check", h.is_symmetric_apery(n) == by_frobenius,
              [&] { return label + ", base " + std::to_string(n); });
  }

  const std::vector<Int> mins = h.minimal_generators();
  if (mins.size() >= 2) {
    const Int a = mins[0];
    const Int b = mins[1];
    const Int schur = (a - 1) * (mins.back() - 1) - 1;
    bool ok = frob <= schur;
    if (gcd(a, b) == 1) ok = ok && frob < a * b;
    rec.check("semigroup.frobenius_bound", ok, ctx);
  } else {
    rec.check("semigroup.frobenius_bound", frob == -1, ctx);
  }
}

void check_place(Recorder& rec, const KummerCurve& curve, Place s) {
  const Int m = curve.m();
  const Int g = curve.genus();
  auto ctx = [&] { return place_context(curve, s); };

  GapSet gaps;
  try {
    gaps = gap_set(curve, s);
  } catch (const Error& e) {
    rec.check("kummer.oracle_equality", false, [&] { return ctx() + ": " + e.what(); });
    return;
  }
  rec.guarded("kummer.oracle_equality", ctx,
              [&] { rec.check("kummer.oracle_equality", gap_set_reference(curve, s) == gaps, ctx); });
  rec.check("kummer.cardinality", static_cast<Int>(gaps.size()) == g, ctx);

  NumericalSemigroup complement;
  bool closed = true;
  try {
    complement = NumericalSemigroup::from_gap_set(gaps);
  } catch (const Error&) {
    closed = false;
  }
  rec.check("kummer.complement_closed", closed, ctx);
  if (!closed) return;

  // t_s is a bijection of 1..m-1
  {
    std::vector<Int> ts;
    for (Int i = 1; i < m; ++i) ts.push_back(curve.t_value(s, i));
    std::sort(ts.begin(), ts.end());
    bool ok = true;
    for (Int i = 1; i < m; ++i) ok = ok && ts[static_cast<std::size_t>(i - 1)] == i;
    rec.check("kummer.t_bijection", ok, ctx);
  }

  if (!s.is_infinity()) {
    bool ok = true;
    for (Int i = 1; i < m; ++i) ok = ok && curve.beta_s(s, curve.t_value(s, i)) == curve.beta0(i);
    rec.check("kummer.beta_s_of_t", ok, ctx);
  }

  rec.guarded("kummer.apery_agreement", ctx, [&] {
    const AperyTuple ap = weierstrass_apery(curve, s);
    rec.check("kummer.apery_agreement", ap == complement.apery(m), ctx);
    const NumericalSemigroup regenerated = NumericalSemigroup::from_generators(complement.generators_via_apery(m));
    const NumericalSemigroup from_formula = weierstrass_semigroup(curve, s);
    rec.check("kummer.generators_regenerate", regenerated == complement && from_formula == complement, ctx);
    if (curve.all_coprime()) {
      std::vector<Int> sorted = ap.values;
      std::sort(sorted.begin(), sorted.end());
      bool ok = true;
      for (Int i = 1; i < m; ++i)
        ok = ok && sorted[static_cast<std::size_t>(i)] + sorted[static_cast<std::size_t>(m - i)] ==
                       m * static_cast<Int>(curve.r());
      rec.check("kummer.apery_pairing_mr", ok, ctx);
    }
  });

  rec.guarded("kummer.multiplicity_frobenius", ctx, [&] {
    const MultiplicityReport report = multiplicity_report(curve, s);
    const bool frob_ok = g == 0 ? !report.frobenius.has_value()
                                : report.frobenius.value_or(-2) == complement.frobenius();
    rec.check("kummer.multiplicity_frobenius", report.multiplicity == complement.multiplicity() && frob_ok, ctx);
    rec.check("kummer.multiplicity_iff_beta",
              report.multiplicity_is_m_predicted == (complement.multiplicity() == m), ctx);
    if (report.all_coprime) {
      rec.check("kummer.multiplicity_frobenius_relation",
                report.multiplicity_from_frobenius.value_or(-1) == complement.multiplicity(), ctx);
      if (report.large_r_forces_m)
        rec.check("kummer.large_r_multiplicity", complement.multiplicity() == m, ctx);
    }
  });

  rec.guarded("kummer.symmetry_exact", ctx, [&] {
    const SymmetryPrediction p = symmetry_predict(curve, s);
    const bool symmetric = complement.is_symmetric();
    if (curve.all_coprime()) {
      rec.check("kummer.symmetry_exact", (p.verdict == SymmetryVerdict::Symmetric) == symmetric, ctx);
      const std::vector<Int> mr{m, static_cast<Int>(curve.r())};
      bool is_m_r = false;
      if (gcd(m, static_cast<Int>(curve.r())) == 1) is_m_r = NumericalSemigroup::from_generators(mr) == complement;
      rec.check("kummer.symmetric_iff_m_r", symmetric == is_m_r, ctx);
    } else if (p.verdict == SymmetryVerdict::SufficientConditionHolds) {
      rec.check("kummer.symmetry_sufficient", symmetric, ctx);
    }
  });

  rec.guarded("kummer.differential_basis", ctx, [&] {
    const Anchor anchor = s.is_infinity() ? Anchor::generic_point() : Anchor::at_root(s.index());
    const FiberLabel at = s.is_infinity() ? FiberLabel::infinity() : FiberLabel::root(s.index());
    std::vector<Int> values;
    bool ok = true;
    for (auto [i, j] : differential_indices(curve)) {
      const Divisor d = differential_divisor(curve, anchor, i, j);
      ok = ok && d.effective() && d.degree() == 2 * g - 2;
      values.push_back(d.coefficient(at) + 1);
    }
    std::sort(values.begin(), values.end());
    ok = ok && values == gaps.values();
    rec.check("kummer.differential_basis", ok, ctx);
  });
}

void check_curve(Recorder& rec, const KummerCurve& curve) {
  const Int m = curve.m();
  const Int r = static_cast<Int>(curve.r());
  auto ctx = [&] { return curve.describe(); };

  const std::vector<Place> ramified = curve.totally_ramified_places();
  for (Place s : ramified) check_place(rec, curve, s);

  if (curve.roots_coprime()) {
    bool ok = true;
    for (Int i = 1; i < m; ++i) {
      Int total = 0;
      for (std::size_t k = 0; k <= curve.r(); ++k) total += curve.t_value(Place(k), i);
      ok = ok && total == m * (r - curve.beta0(i));
    }
    rec.check("kummer.t_sum", ok, ctx);
  }
  if (curve.all_coprime()) {
    bool ok = true;
    for (Int i = 1; i < m; ++i) ok = ok && curve.beta0(i) + curve.beta0(m - i) == r - 1;
    rec.check("kummer.beta_complement", ok, ctx);
  }

  // pairwise coincidence criteria are sufficient (the trigonal one exact)
  for (std::size_t a = 0; a < ramified.size(); ++a) {
    for (std::size_t b = a + 1; b < ramified.size(); ++b) {
      const CoincidenceReport rep = gap_sets_coincide(curve, ramified[a], ramified[b]);
      bool ok = !rep.same_lambda || rep.equal;
      ok = ok && (!rep.infinity_balance || rep.equal);
      ok = ok && (!rep.trigonal_applicable || rep.trigonal_predicts_equal == rep.equal);
      rec.check("kummer.coincidence_criteria", ok, [&] {
        return curve.describe() + ", places " + std::to_string(ramified[a].index()) + "/" +
               std::to_string(ramified[b].index());
      });
    }
  }

  rec.guarded("kummer.generic_gap_bound", ctx, [&] {
    const PartialGaps generic = generic_gaps(curve);
    bool ok = static_cast<Int>(generic.gaps.size()) == std::max<Int>(0, curve.beta_max());
    if (curve.has_totally_ramified_place())
      ok = ok && static_cast<Int>(generic.gaps.size()) >= ceil_div(curve.genus(), m - 1);
    rec.check("kummer.generic_gap_bound", ok, ctx);
    if (m == 2) {
      bool complete = generic.complete && static_cast<Int>(generic.gaps.size()) == curve.genus();
      if (!curve.totally_ramified(Place::infinity())) {
        const PartialGaps at_infinity = partial_gaps(curve, Place::infinity());
        complete = complete && at_infinity.complete && static_cast<Int>(at_infinity.gaps.size()) == curve.genus();
      }
      rec.check("kummer.hyperelliptic_complete", complete, ctx);
    }
  });

  rec.guarded("weights.bw_nonnegative", ctx, [&] {
    const Int total = bw(curve);
    bool ok = total >= 0;
    if (m == 2 && curve.genus() <= 1) ok = ok && total == 0;
    rec.check("weights.bw_nonnegative", ok, ctx);
  });

  if (m == 2 && r >= 5 && r % 2 == 1) {
    rec.guarded("weights.hyperelliptic_ratio", ctx,
                [&] { rec.check("weights.hyperelliptic_ratio", bw_ratio(curve) == Rational(1), ctx); });
  }
}

void check_profile(Recorder& rec, const LimitProfile& profile) {
  const Int m = profile.m();
  auto ctx = [&] {
    std::string out = "m=" + std::to_string(m) + " {";
    for (const auto& [j, k] : profile.densities()) out += " k" + std::to_string(j) + "=" + k.str();
    return out + " }";
  };
  rec.guarded("weights.limit_bounds", ctx, [&] {
    const Rational limit = asymptotic_limit(profile);
    const LimitBounds bounds = limit_bounds(m);
    rec.check("weights.limit_bounds", bounds.lower <= limit && limit <= bounds.upper, ctx);

    bool single = false;
    bool balanced = true;
    for (const auto& [j, k] : profile.densities()) {
      single = single || k == Rational(1);
      balanced = balanced && k == profile.density(m - j);
    }
    rec.check("weights.upper_equality", (limit == bounds.upper) == single, ctx);
    if (balanced) rec.check("weights.lower_equality", limit == bounds.lower, ctx);

    // replacing (i j) mod m by m - (i j) mod m leaves the square sum unchanged
    Rational direct(0);
    Rational mirrored(0);
    for (Int i = 1; i < m; ++i) {
      Rational a(0);
      Rational b(0);
      for (const auto& [j, k] : profile.densities()) {
        a += Rational(mod(i * j, m)) * k;
        b += Rational(m - mod(i * j, m)) * k;
      }
      direct += a * a;
      mirrored += b * b;
    }
    rec.check("weights.formula_symmetry", direct == mirrored, ctx);
  });
}

// Calls `visit` on every valid curve with multiplicities in 1..m-1 and r
// branch points.
void for_each_curve(Int m, std::size_t r, const std::function<void(const KummerCurve&)>& visit) {
  std::vector<Int> lambdas(r, 1);
  while (true) {
    Int common = m;
    for (Int lam : lambdas) common = gcd(common, lam);
    if (common == 1) visit(KummerCurve(m, lambdas));
    std::size_t k = 0;
    while (k < r && lambdas[k] == m - 1) lambdas[k++] = 1;
    if (k == r) return;
    ++lambdas[k];
  }
}

}  // namespace

std::vector<InvariantOutcome> verify_invariants(const VerifyOptions& options) {
  Recorder rec;
  std::mt19937_64 rng(options.seed);

  // semigroups: fixed examples, then random generator sets with gcd 1
  const std::vector<std::vector<Int>> fixed_gens = {{1}, {2, 3}, {3, 5}, {6, 8, 9}, {4, 6, 9}, {5, 7, 11}, {4, 6, 101}};
  for (const auto& gens : fixed_gens) {
    std::string label = "<";
    for (std::size_t k = 0; k < gens.size(); ++k) label += (k ? "," : "") + std::to_string(gens[k]);
    check_semigroup(rec, NumericalSemigroup::from_generators(gens), label + ">");
  }
  std::uniform_int_distribution<Int> gen_value(2, 30);
  std::uniform_int_distribution<int> gen_count(2, 4);
  for (std::size_t n = 0; n < options.random_curves / 4 + 1; ++n) {
    std::vector<Int> gens(static_cast<std::size_t>(gen_count(rng)));
    for (Int& a : gens) a = gen_value(rng);
    Int g = 0;
    for (Int a : gens) g = gcd(g, a);
    if (g != 1) continue;
    std::string label = "random <";
    for (std::size_t k = 0; k < gens.size(); ++k) label += (k ? "," : "") + std::to_string(gens[k]);
    check_semigroup(rec, NumericalSemigroup::from_generators(gens), label + ">");
  }

  // curves: exhaustive small corpus, then random
  for (Int m = 2; m <= options.exhaustive_max_m; ++m)
    for (std::size_t r = 1; r <= options.exhaustive_max_r; ++r)
      for_each_curve(m, r, [&](const KummerCurve& curve) { check_curve(rec, curve); });
  for (std::size_t r : {5, 7, 9, 11}) check_curve(rec, KummerCurve(2, std::vector<Int>(r, 1)));

  std::uniform_int_distribution<Int> m_dist(2, 30);
  std::uniform_int_distribution<std::size_t> r_dist(1, 6);
  for (std::size_t n = 0; n < options.random_curves;) {
    const Int m = m_dist(rng);
    std::vector<Int> lambdas(r_dist(rng));
    std::uniform_int_distribution<Int> lam_dist(1, m - 1);
    for (Int& lam : lambdas) lam = lam_dist(rng);
    Int common = m;
    for (Int lam : lambdas) common = gcd(common, lam);
    if (common != 1) continue;
    check_curve(rec, KummerCurve(m, lambdas));
    ++n;
  }

  // density profiles: single-multiplicity, balanced, and random counts
  for (Int m = 2; m <= 16; ++m) {
    std::vector<Int> units;
    for (Int j = 1; j < m; ++j)
      if (gcd(j, m) == 1) units.push_back(j);
    for (Int j : units) check_profile(rec, LimitProfile(m, {{j, Rational(1)}}));
    std::map<Int, Rational> balanced;
    for (Int j : units) balanced[j] = Rational(1, static_cast<Int>(units.size()));
    check_profile(rec, LimitProfile(m, balanced));
    for (int trial = 0; trial < 8; ++trial) {
      std::uniform_int_distribution<Int> count(0, 5);
      std::map<Int, Int> counts;
      Int total = 0;
      for (Int j : units) total += counts[j] = count(rng);
      if (total == 0) continue;
      std::map<Int, Rational> densities;
      for (const auto& [j, c] : counts) densities[j] = Rational(c, total);
      check_profile(rec, LimitProfile(m, densities));
    }
  }

  return rec.take();
}

}  // namespace kummergap
