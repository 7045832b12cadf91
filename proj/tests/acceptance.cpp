// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kummergap/divisor.hpp"
#include "kummergap/weierstrass.hpp"
#include "kummergap/weights.hpp"

using namespace kummergap;
using V = std::vector<Int>;
using Clock = std::chrono::steady_clock;

namespace {

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (violations++ == 0) first = what();
  }
  bool clean() const { return violations == 0 && checked > 0; }
  std::string summary() const {
    std::string s = std::to_string(checked) + " checks, " + std::to_string(violations) + " violations";
    if (!first.empty()) s += "; first: " + first;
    return s;
  }
};

struct Line {
  int id;
  bool pass;
  std::string text;
};

std::vector<Line> lines;

void report(int id, const char* title, bool pass, const std::string& detail, double seconds) {
  char timing[32];
  std::snprintf(timing, sizeof timing, " (%.3f s)", seconds);
  lines.push_back({id, pass, std::string(title) + ": " + detail + timing});
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Every lambda vector in [1, m-1]^r, r = 1..max_r, that defines a curve.
void for_each_curve(Int m, std::size_t max_r, const std::function<void(const KummerCurve&)>& f) {
  for (std::size_t r = 1; r <= max_r; ++r) {
    V l(r, 1);
    while (true) {
      Int common = m;
      for (Int x : l) common = gcd(common, x);
      if (common == 1) f(KummerCurve(m, l));
      std::size_t k = r;
      while (k > 0 && l[k - 1] == m - 1) l[--k] = 1;
      if (k == 0) break;
      ++l[k - 1];
    }
  }
}

void for_each_random_curve(std::size_t count, std::uint64_t seed, const std::function<void(const KummerCurve&)>& f) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> pick_m(13, 30);
  std::uniform_int_distribution<std::size_t> pick_r(1, 6);
  std::size_t made = 0;
  while (made < count) {
    const Int m = pick_m(rng);
    std::uniform_int_distribution<Int> pick_l(1, m - 1);
    V l(pick_r(rng));
    for (Int& x : l) x = pick_l(rng);
    Int common = m;
    for (Int x : l) common = gcd(common, x);
    if (common != 1) continue;
    ++made;
    f(KummerCurve(m, l));
  }
}

std::string where(const KummerCurve& c, Place s) { return c.describe() + ", s=" + std::to_string(s.index()); }

// ---- 1 ------------------------------------------------------------------

void criterion_maximal_curve() {
  const auto t0 = Clock::now();
  const GapSet expected(V{1, 2, 3, 4, 5, 7, 10, 11, 13, 19});
  const auto target = NumericalSemigroup::from_generators(V{9, 8, 6});
  bool ok = target.gaps() == expected;

  std::vector<double> runs;
  for (int rep = 0; rep < 101; ++rep) {
    const auto t = Clock::now();
    const KummerCurve c(9, V{1, 1, 3, 3});
    const Int g = c.genus();
    const GapSet gaps = gap_set(c, Place::infinity());
    const NumericalSemigroup h = weierstrass_semigroup(c, Place::infinity());
    runs.push_back(since(t));
    ok = ok && g == 10 && gaps == expected && h == target && h.minimal_generators() == V{6, 8, 9};
  }
  std::sort(runs.begin(), runs.end());
  const double median_ms = runs[runs.size() / 2] * 1e3;
  ok = ok && median_ms < 1.0;
  report(1, "maximal-curve example m=9, lambdas=(1,1,3,3)", ok,
         "H(Q_0)=<9,8,6>, g=10, gaps {1,2,3,4,5,7,10,11,13,19}; median " + std::to_string(median_ms) + " ms per run",
         since(t0));
}

// ---- 2, 3, 4, 5, 8 -----------------------------------------------------------

struct SweepTallies {
  Tally oracle, cardinality, closure, identities, basis;
  std::uint64_t curves = 0, random_curves = 0, coprime_curves = 0, places = 0;
};

void identity_suite(const KummerCurve& c, Tally& t) {
  const Int m = c.m();
  const Int r = static_cast<Int>(c.r());
  for (Int i = 1; i < m; ++i) {
    const Int b = c.beta0(i);
    for (std::size_t s = 1; s <= c.r(); ++s)
      t.check(c.beta_s(Place(s), c.t_value(Place(s), i)) == b,
              [&] { return "beta_s(t_s(i)) != beta0(i) at " + where(c, Place(s)) + ", i=" + std::to_string(i); });
    Int sum = 0;
    for (std::size_t k = 0; k <= c.r(); ++k) sum += c.t_value(Place(k), i);
    t.check(sum == m * (r - b), [&] { return "sum t_k(i) != m(r - beta0(i)) at " + c.describe(); });
    t.check(b + c.beta0(m - i) == r - 1, [&] { return "beta0(i) + beta0(m-i) != r-1 at " + c.describe(); });
  }
  for (std::size_t s = 0; s <= c.r(); ++s) {
    const Place p(s);
    V ap = weierstrass_apery(c, p).values;
    std::sort(ap.begin(), ap.end());
    for (Int i = 1; i < m; ++i)
      t.check(ap[static_cast<std::size_t>(i)] + ap[static_cast<std::size_t>(m - i)] == m * r,
              [&] { return "a_i + a_{m-i} != mr at " + where(c, p); });
    const NumericalSemigroup h = weierstrass_semigroup(c, p);
    t.check(h.multiplicity() == std::min(m, m * (r - 1) - h.frobenius()),
            [&] { return "multiplicity != min(m, m(r-1) - F) at " + where(c, p); });
    if (m <= r) t.check(h.multiplicity() == m, [&] { return "m <= r but multiplicity != m at " + where(c, p); });
  }
}

void differential_basis(const KummerCurve& c, Tally& t) {
  const Int two_g_minus_2 = 2 * c.genus() - 2;
  const auto indices = differential_indices(c);
  for (Place s : c.totally_ramified_places()) {
    const Anchor anchor = s.is_infinity() ? Anchor::generic_point() : Anchor::at_root(s.index());
    const FiberLabel label = s.is_infinity() ? FiberLabel::infinity() : FiberLabel::root(s.index());
    V values;
    values.reserve(indices.size());
    bool ok = true;
    for (auto [i, j] : indices) {
      const Divisor d = differential_divisor(c, anchor, i, j);
      ok = ok && d.effective() && d.degree() == two_g_minus_2;
      values.push_back(d.coefficient(label) + 1);
    }
    std::sort(values.begin(), values.end());
    t.check(ok && values == gap_set(c, s).values(),
            [&] { return "differential valuations do not reproduce the gaps at " + where(c, s); });
  }
}

void sweep_curve(const KummerCurve& c, SweepTallies& tallies, bool with_basis) {
  ++tallies.curves;
  const Int g = c.genus();
  for (Place s : c.totally_ramified_places()) {
    ++tallies.places;
    const GapSet gaps = gap_set(c, s);
    tallies.oracle.check(gaps == gap_set_reference(c, s), [&] { return "compact != reference at " + where(c, s); });
    tallies.cardinality.check(static_cast<Int>(gaps.size()) == g, [&] { return "|G| != g at " + where(c, s); });
    bool closed = true;
    try {
      (void)NumericalSemigroup::from_gap_set(gaps);
    } catch (const Error&) {
      closed = false;
    }
    tallies.closure.check(closed, [&] { return "complement not closed at " + where(c, s); });
  }
  if (c.all_coprime()) {
    ++tallies.coprime_curves;
    identity_suite(c, tallies.identities);
  }
  if (with_basis) differential_basis(c, tallies.basis);
}

void criteria_sweep() {
  const auto t0 = Clock::now();
  SweepTallies t;
  for (Int m = 2; m <= 12; ++m) for_each_curve(m, 6, [&](const KummerCurve& c) { sweep_curve(c, t, true); });
  const std::uint64_t exhaustive = t.curves;
  for_each_random_curve(12000, 20240917, [&](const KummerCurve& c) {
    ++t.random_curves;
    sweep_curve(c, t, false);
  });
  const double seconds = since(t0);
  const std::string scope = std::to_string(exhaustive) + " exhaustive curves (m<=12, r<=6) + " +
                            std::to_string(t.random_curves) + " random curves (13<=m<=30), " +
                            std::to_string(t.places) + " places; ";
  report(2, "oracle equivalence gap_set = gap_set_reference", t.oracle.clean(), scope + t.oracle.summary(), seconds);
  report(3, "cardinality |gap_set| = genus", t.cardinality.clean(), t.cardinality.summary(), 0.0);
  report(4, "semigroup closure of the complement", t.closure.clean(), t.closure.summary(), 0.0);
  report(5, "identity suite on the all-coprime subsweep", t.identities.clean(),
         std::to_string(t.coprime_curves) + " curves; " + t.identities.summary(), 0.0);
  report(8, "differential basis (m<=12)", t.basis.clean(), t.basis.summary(), 0.0);
}

// ---- 6 ------------------------------------------------------------------

void criterion_symmetry() {
  const auto t0 = Clock::now();
  Tally t;
  std::uint64_t curves = 0, symmetric = 0;
  for (Int m = 2; m <= 15; ++m)
    for_each_curve(m, 6, [&](const KummerCurve& c) {
      if (!c.all_coprime()) return;
      ++curves;
      const Int r = static_cast<Int>(c.r());
      for (std::size_t s = 0; s <= c.r(); ++s) {
        const Place p(s);
        const SymmetryPrediction pred = symmetry_predict(c, p);
        const NumericalSemigroup h = weierstrass_semigroup(c, p);
        const bool sym = h.is_symmetric();
        symmetric += sym ? 1 : 0;
        const bool exact = pred.verdict == SymmetryVerdict::Symmetric || pred.verdict == SymmetryVerdict::NotSymmetric;
        t.check(exact && (pred.verdict == SymmetryVerdict::Symmetric) == sym,
                [&] { return std::string("prediction ") + symmetry_verdict_name(pred.verdict) + " vs direct " +
                             (sym ? "symmetric" : "not symmetric") + " at " + where(c, p); });
        bool equals_m_r = false;
        if (gcd(m, r) == 1) equals_m_r = h == NumericalSemigroup::from_generators(V{m, r});
        t.check(sym == equals_m_r, [&] { return "symmetric != (H = <m, r>) at " + where(c, p); });
      }
    });
  report(6, "symmetry iff (all-coprime, m<=15, r<=6)", t.clean(),
         std::to_string(curves) + " curves, " + std::to_string(symmetric) + " symmetric places; " + t.summary(),
         since(t0));
}

// ---- 7 ------------------------------------------------------------------

void criterion_trigonal() {
  const auto t0 = Clock::now();
  Tally t;
  for (Int r1 = 1; r1 <= 10; ++r1)
    for (Int r2 = 1; r2 <= 10; ++r2) {
      V l(static_cast<std::size_t>(r1), 1);
      l.insert(l.end(), static_cast<std::size_t>(r2), 2);
      const KummerCurve c(3, l);
      const Place one(1), two(static_cast<std::size_t>(r1 + 1));
      const bool equal = gap_set(c, one) == gap_set(c, two);
      const Int e = r1 - r2 + mod(c.lambda0(), 3);
      const bool predicted = 0 <= e && e <= 2;
      const CoincidenceReport rep = gap_sets_coincide(c, one, two);
      t.check(equal == predicted && rep.equal == equal && rep.trigonal_applicable &&
                  rep.trigonal_predicts_equal == predicted,
              [&] { return "r1=" + std::to_string(r1) + ", r2=" + std::to_string(r2); });
    }
  report(7, "trigonal criterion (m=3, r1, r2 in 1..10)", t.clean(), t.summary(), since(t0));
}

// ---- 9 ------------------------------------------------------------------

void criterion_weights() {
  const auto t0 = Clock::now();
  const KummerCurve c(2, V(5, 1));
  const Int g = c.genus();
  const Rational hyper_limit = asymptotic_limit(LimitProfile(2, {{1, Rational(1)}}));
  const Rational upper = asymptotic_limit(LimitProfile(3, {{1, Rational(1)}}));
  const Rational lower = asymptotic_limit(LimitProfile(3, {{1, Rational(1, 2)}, {2, Rational(1, 2)}}));
  const bool ok = bw(c) == 6 && g * g * g - g == 6 && bw_ratio(c) == Rational(1) && hyper_limit == Rational(1) &&
                  upper == Rational(1, 3) && upper == limit_bounds(3).upper && lower == Rational(1, 4) &&
                  lower == limit_bounds(3).lower;
  report(9, "weights and limit equality cases", ok,
         "BW(2; 1^5)=" + std::to_string(bw(c)) + ", ratio " + bw_ratio(c).str() + ", m=2 limit " + hyper_limit.str() +
             "; m=3 k_1=1 -> " + upper.str() + ", k_1=k_2=1/2 -> " + lower.str(),
         since(t0));
}

// ---- 10 -----------------------------------------------------------------

void criterion_convergence() {
  const auto t0 = Clock::now();
  const auto rows = convergence_sweep(3, {1, 2}, {4, 32});
  bool ok = rows.size() == 2 && rows[0].r == 8 && rows[1].r == 64;
  std::string detail = "malformed sweep";
  if (ok) {
    const Rational d8 = rows[0].difference, d64 = rows[1].difference;
    ok = rows[1].limit == Rational(1, 4) && d64 < Rational(1, 50) && d64 < d8;
    detail = "|ratio - 1/4| = " + d8.str() + " (" + d8.decimal(6) + ") at r=8, " + d64.str() + " (" + d64.decimal(6) +
             ") at r=64";
  }
  report(10, "convergence m=3, pattern (1,2)", ok, detail, since(t0));
}

}  // namespace

int main() {
  try {
    criterion_maximal_curve();
    criteria_sweep();
    criterion_symmetry();
    criterion_trigonal();
    criterion_weights();
    criterion_convergence();
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.id < b.id; });
  int failed = 0;
  for (const Line& l : lines) {
    std::printf("[%s] %2d %s\n", l.pass ? "PASS" : "FAIL", l.id, l.text.c_str());
    failed += l.pass ? 0 : 1;
  }
  std::printf("%s\n", failed == 0 ? "all acceptance criteria passed" : "acceptance criteria failed");
  return failed == 0 ? 0 : 1;
}
