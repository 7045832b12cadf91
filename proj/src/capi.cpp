#include "kummergap/kummergap.h"

#include <exception>
#include <iterator>
#include <map>
#include <new>
#include <string>
#include <vector>

#include "kummergap/divisor.hpp"
#include "kummergap/semigroup.hpp"
#include "kummergap/verify.hpp"
#include "kummergap/weierstrass.hpp"
#include "kummergap/weights.hpp"

using namespace kummergap;

struct kg_ints {
  std::vector<Int> values;
};

struct kg_semigroup {
  NumericalSemigroup value;
};

struct kg_curve {
  KummerCurve value;
};

struct kg_divisor {
  std::vector<kg_divisor_entry> entries;
  Divisor value;
};

struct kg_profile {
  LimitProfile value;
};

struct kg_sweep {
  std::vector<SweepRow> rows;
};

struct kg_verify_report {
  std::vector<InvariantOutcome> outcomes;
};

namespace {

thread_local std::string last_error;

kg_status record(kg_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
kg_status guard(F&& body) noexcept {
  try {
    body();
    return KG_OK;
  } catch (const Error& e) {
    return record(static_cast<kg_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return record(KG_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(KG_E_INTERNAL, e.what());
  } catch (...) {
    return record(KG_E_INTERNAL, "unknown failure");
  }
}

void require(bool condition, const char* what) {
  if (!condition) fail(ErrorCode::InvalidArgument, std::string("null argument: ") + what);
}

kg_rational to_c(const Rational& q) { return kg_rational{q.num(), q.den()}; }

std::vector<Int> copy_array(const int64_t* data, size_t count, const char* what) {
  if (count > 0) require(data != nullptr, what);
  return std::vector<Int>(data, data + count);
}

void emit(std::vector<Int> values, kg_ints** out) { *out = new kg_ints{std::move(values)}; }

}  // namespace

extern "C" {

const char* kg_status_name(kg_status status) {
  if (status == KG_OK) return "OK";
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
}

const char* kg_last_error_message(void) { return last_error.c_str(); }

const char* kg_version(void) { return "1.0.0"; }

size_t kg_ints_size(const kg_ints* list) { return list ? list->values.size() : 0; }
const int64_t* kg_ints_data(const kg_ints* list) { return list ? list->values.data() : nullptr; }
void kg_ints_free(kg_ints* list) { delete list; }

kg_status kg_semigroup_from_generators(const int64_t* gens, size_t count, kg_semigroup** out) {
  return guard([&] {
    require(out != nullptr, "out");
    const std::vector<Int> g = copy_array(gens, count, "gens");
    *out = new kg_semigroup{NumericalSemigroup::from_generators(g)};
  });
}

kg_status kg_semigroup_from_gaps(const int64_t* gaps, size_t count, kg_semigroup** out) {
  return guard([&] {
    require(out != nullptr, "out");
    *out = new kg_semigroup{NumericalSemigroup::from_gap_set(GapSet(copy_array(gaps, count, "gaps")))};
  });
}

void kg_semigroup_free(kg_semigroup* h) { delete h; }

kg_status kg_semigroup_gaps(const kg_semigroup* h, kg_ints** out) {
  return guard([&] {
    require(h && out, "semigroup/out");
    emit(h->value.gaps().values(), out);
  });
}

kg_status kg_semigroup_invariants(const kg_semigroup* h, int64_t* genus, int64_t* frobenius, int64_t* multiplicity) {
  return guard([&] {
    require(h && genus && frobenius && multiplicity, "semigroup/out");
    const SemigroupInvariants inv = h->value.invariants();
    *genus = inv.genus;
    *frobenius = inv.frobenius;
    *multiplicity = inv.multiplicity;
  });
}

kg_status kg_semigroup_contains(const kg_semigroup* h, int64_t n, int* out) {
  return guard([&] {
    require(h && out, "semigroup/out");
    *out = h->value.contains(n) ? 1 : 0;
  });
}

kg_status kg_semigroup_apery(const kg_semigroup* h, int64_t n, kg_ints** out) {
  return guard([&] {
    require(h && out, "semigroup/out");
    emit(h->value.apery(n).values, out);
  });
}

kg_status kg_semigroup_generators_via_apery(const kg_semigroup* h, int64_t n, kg_ints** out) {
  return guard([&] {
    require(h && out, "semigroup/out");
    emit(h->value.generators_via_apery(n), out);
  });
}

kg_status kg_semigroup_minimal_generators(const kg_semigroup* h, kg_ints** out) {
  return guard([&] {
    require(h && out, "semigroup/out");
    emit(h->value.minimal_generators(), out);
  });
}

kg_status kg_semigroup_is_symmetric(const kg_semigroup* h, int* out) {
  return guard([&] {
    require(h && out, "semigroup/out");
    *out = h->value.is_symmetric() ? 1 : 0;
  });
}

kg_status kg_semigroup_is_symmetric_apery(const kg_semigroup* h, int64_t n, int* out) {
  return guard([&] {
    require(h && out, "semigroup/out");
    *out = h->value.is_symmetric_apery(n) ? 1 : 0;
  });
}

int kg_semigroup_equal(const kg_semigroup* a, const kg_semigroup* b) {
  return (a && b && a->value == b->value) ? 1 : 0;
}

kg_status kg_curve_create(int64_t m, const int64_t* lambdas, size_t r, kg_curve** out) {
  return guard([&] {
    require(out != nullptr, "out");
    *out = new kg_curve{KummerCurve(m, copy_array(lambdas, r, "lambdas"))};
  });
}

void kg_curve_free(kg_curve* curve) { delete curve; }

int64_t kg_curve_m(const kg_curve* curve) { return curve ? curve->value.m() : 0; }
size_t kg_curve_r(const kg_curve* curve) { return curve ? curve->value.r() : 0; }
int64_t kg_curve_lambda0(const kg_curve* curve) { return curve ? curve->value.lambda0() : 0; }

kg_status kg_curve_genus(const kg_curve* curve, int64_t* out) {
  return guard([&] {
    require(curve && out, "curve/out");
    *out = curve->value.genus();
  });
}

kg_status kg_curve_fiber_size(const kg_curve* curve, size_t s, int64_t* out) {
  return guard([&] {
    require(curve && out, "curve/out");
    *out = curve->value.fiber_size(Place(s));
  });
}

int kg_curve_all_coprime(const kg_curve* curve) { return (curve && curve->value.all_coprime()) ? 1 : 0; }

kg_status kg_curve_t_value(const kg_curve* curve, size_t s, int64_t i, int64_t* out) {
  return guard([&] {
    require(curve && out, "curve/out");
    *out = curve->value.t_value(Place(s), i);
  });
}

kg_status kg_curve_beta0(const kg_curve* curve, int64_t i, int64_t* out) {
  return guard([&] {
    require(curve && out, "curve/out");
    *out = curve->value.beta0(i);
  });
}

kg_status kg_curve_beta_s(const kg_curve* curve, size_t s, int64_t i, int64_t* out) {
  return guard([&] {
    require(curve && out, "curve/out");
    *out = curve->value.beta_s(Place(s), i);
  });
}

kg_status kg_gap_set(const kg_curve* curve, size_t s, kg_ints** out) {
  return guard([&] {
    require(curve && out, "curve/out");
    emit(gap_set(curve->value, Place(s)).values(), out);
  });
}

kg_status kg_gap_set_reference(const kg_curve* curve, size_t s, kg_ints** out) {
  return guard([&] {
    require(curve && out, "curve/out");
    emit(gap_set_reference(curve->value, Place(s)).values(), out);
  });
}

kg_status kg_partial_gaps(const kg_curve* curve, size_t s, kg_ints** out, int* complete) {
  return guard([&] {
    require(curve && out && complete, "curve/out");
    PartialGaps p = partial_gaps(curve->value, Place(s));
    *complete = p.complete ? 1 : 0;
    emit(p.gaps.values(), out);
  });
}

kg_status kg_generic_gaps(const kg_curve* curve, kg_ints** out, int* complete) {
  return guard([&] {
    require(curve && out && complete, "curve/out");
    PartialGaps p = generic_gaps(curve->value);
    *complete = p.complete ? 1 : 0;
    emit(p.gaps.values(), out);
  });
}

kg_status kg_weierstrass_apery(const kg_curve* curve, size_t s, kg_ints** out) {
  return guard([&] {
    require(curve && out, "curve/out");
    emit(weierstrass_apery(curve->value, Place(s)).values, out);
  });
}

kg_status kg_weierstrass_generators(const kg_curve* curve, size_t s, kg_ints** out) {
  return guard([&] {
    require(curve && out, "curve/out");
    emit(weierstrass_generators(curve->value, Place(s)), out);
  });
}

kg_status kg_weierstrass_semigroup(const kg_curve* curve, size_t s, kg_semigroup** out) {
  return guard([&] {
    require(curve && out, "curve/out");
    *out = new kg_semigroup{weierstrass_semigroup(curve->value, Place(s))};
  });
}

kg_status kg_multiplicity_report(const kg_curve* curve, size_t s, kg_multiplicity_info* out) {
  return guard([&] {
    require(curve && out, "curve/out");
    const MultiplicityReport r = multiplicity_report(curve->value, Place(s));
    kg_multiplicity_info info{};
    info.multiplicity = r.multiplicity;
    info.has_frobenius = r.frobenius.has_value() ? 1 : 0;
    info.frobenius = r.frobenius.value_or(-1);
    info.multiplicity_is_m_predicted = r.multiplicity_is_m_predicted ? 1 : 0;
    info.all_coprime = r.all_coprime ? 1 : 0;
    info.has_relation = r.multiplicity_from_frobenius.has_value() ? 1 : 0;
    info.multiplicity_from_frobenius = r.multiplicity_from_frobenius.value_or(0);
    info.large_r_forces_m = r.large_r_forces_m ? 1 : 0;
    *out = info;
  });
}

kg_status kg_symmetry_predict(const kg_curve* curve, size_t s, kg_symmetry_verdict* verdict,
                              kg_symmetry_criterion* criterion) {
  return guard([&] {
    require(curve && verdict && criterion, "curve/out");
    const SymmetryPrediction p = symmetry_predict(curve->value, Place(s));
    *verdict = static_cast<kg_symmetry_verdict>(static_cast<int>(p.verdict));
    *criterion = static_cast<kg_symmetry_criterion>(static_cast<int>(p.criterion));
  });
}

const char* kg_symmetry_verdict_name(kg_symmetry_verdict verdict) {
  return symmetry_verdict_name(static_cast<SymmetryVerdict>(static_cast<int>(verdict)));
}

const char* kg_symmetry_criterion_name(kg_symmetry_criterion criterion) {
  return symmetry_criterion_name(static_cast<SymmetryCriterion>(static_cast<int>(criterion)));
}

kg_status kg_gap_sets_coincide(const kg_curve* curve, size_t s1, size_t s2, kg_coincidence_info* out) {
  return guard([&] {
    require(curve && out, "curve/out");
    const CoincidenceReport r = gap_sets_coincide(curve->value, Place(s1), Place(s2));
    *out = kg_coincidence_info{r.equal, r.same_lambda, r.infinity_balance, r.trigonal_applicable,
                               r.trigonal_predicts_equal};
  });
}

kg_status kg_differential_divisor(const kg_curve* curve, kg_anchor_kind anchor, size_t anchor_root, int64_t i,
                                  int64_t j, kg_divisor** out) {
  return guard([&] {
    require(curve && out, "curve/out");
    if (anchor != KG_ANCHOR_GENERIC && anchor != KG_ANCHOR_ROOT)
      fail(ErrorCode::InvalidArgument, "unknown anchor kind");
    const Anchor a = anchor == KG_ANCHOR_GENERIC ? Anchor::generic_point() : Anchor::at_root(anchor_root);
    Divisor d = differential_divisor(curve->value, a, i, j);
    auto handle = new kg_divisor{{}, std::move(d)};
    for (const auto& [label, e] : handle->value.entries()) {
      kg_fiber_kind kind = KG_FIBER_ROOT;
      if (label.kind == FiberKind::Infinity) kind = KG_FIBER_INFINITY;
      if (label.kind == FiberKind::Extra) kind = KG_FIBER_EXTRA;
      handle->entries.push_back(kg_divisor_entry{kind, label.index, e.coefficient, e.fiber_size});
    }
    *out = handle;
  });
}

void kg_divisor_free(kg_divisor* d) { delete d; }
size_t kg_divisor_size(const kg_divisor* d) { return d ? d->entries.size() : 0; }

kg_status kg_divisor_entry_at(const kg_divisor* d, size_t index, kg_divisor_entry* out) {
  return guard([&] {
    require(d && out, "divisor/out");
    if (index >= d->entries.size()) fail(ErrorCode::InvalidArgument, "divisor entry index out of range");
    *out = d->entries[index];
  });
}

kg_status kg_divisor_degree(const kg_divisor* d, int64_t* out) {
  return guard([&] {
    require(d && out, "divisor/out");
    *out = d->value.degree();
  });
}

int kg_divisor_effective(const kg_divisor* d) { return (d && d->value.effective()) ? 1 : 0; }

kg_status kg_weight(const int64_t* gaps, size_t count, int64_t genus, int64_t* out) {
  return guard([&] {
    require(out != nullptr, "out");
    *out = weight(GapSet(copy_array(gaps, count, "gaps")), genus);
  });
}

kg_status kg_bw(const kg_curve* curve, int64_t* out) {
  return guard([&] {
    require(curve && out, "curve/out");
    *out = bw(curve->value);
  });
}

kg_status kg_bw_ratio(const kg_curve* curve, kg_rational* out) {
  return guard([&] {
    require(curve && out, "curve/out");
    *out = to_c(bw_ratio(curve->value));
  });
}

kg_status kg_profile_create(int64_t m, const int64_t* keys, const kg_rational* densities, size_t count,
                            kg_profile** out) {
  return guard([&] {
    require(out != nullptr, "out");
    if (count > 0) require(keys && densities, "keys/densities");
    std::map<Int, Rational> map;
    for (size_t k = 0; k < count; ++k) {
      if (!map.emplace(keys[k], Rational(densities[k].num, densities[k].den)).second)
        fail(ErrorCode::InvalidArgument, "duplicate density key " + std::to_string(keys[k]));
    }
    *out = new kg_profile{LimitProfile(m, map)};
  });
}

kg_status kg_profile_of_curve(const kg_curve* curve, kg_profile** out) {
  return guard([&] {
    require(curve && out, "curve/out");
    *out = new kg_profile{profile_of_curve(curve->value)};
  });
}

void kg_profile_free(kg_profile* p) { delete p; }
int64_t kg_profile_m(const kg_profile* p) { return p ? p->value.m() : 0; }
size_t kg_profile_size(const kg_profile* p) { return p ? p->value.densities().size() : 0; }

kg_status kg_profile_entry(const kg_profile* p, size_t index, int64_t* key, kg_rational* density) {
  return guard([&] {
    require(p && key && density, "profile/out");
    if (index >= p->value.densities().size()) fail(ErrorCode::InvalidArgument, "profile entry index out of range");
    auto it = p->value.densities().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(index));
    *key = it->first;
    *density = to_c(it->second);
  });
}

kg_status kg_asymptotic_limit(const kg_profile* p, kg_rational* out) {
  return guard([&] {
    require(p && out, "profile/out");
    *out = to_c(asymptotic_limit(p->value));
  });
}

kg_status kg_limit_bounds(int64_t m, kg_rational* lower, kg_rational* upper) {
  return guard([&] {
    require(lower && upper, "out");
    const LimitBounds b = limit_bounds(m);
    *lower = to_c(b.lower);
    *upper = to_c(b.upper);
  });
}

kg_status kg_convergence_sweep(int64_t m, const int64_t* pattern, size_t pattern_len, const int64_t* repeats,
                               size_t repeats_len, kg_sweep** out) {
  return guard([&] {
    require(out != nullptr, "out");
    *out = new kg_sweep{convergence_sweep(m, copy_array(pattern, pattern_len, "pattern"),
                                          copy_array(repeats, repeats_len, "repeats"))};
  });
}

void kg_sweep_free(kg_sweep* sweep) { delete sweep; }
size_t kg_sweep_size(const kg_sweep* sweep) { return sweep ? sweep->rows.size() : 0; }

kg_status kg_sweep_row_at(const kg_sweep* sweep, size_t index, kg_sweep_row* out) {
  return guard([&] {
    require(sweep && out, "sweep/out");
    if (index >= sweep->rows.size()) fail(ErrorCode::InvalidArgument, "sweep row index out of range");
    const SweepRow& row = sweep->rows[index];
    *out = kg_sweep_row{row.r, row.genus, row.skipped ? 1 : 0, to_c(row.ratio), to_c(row.limit),
                        to_c(row.difference)};
  });
}

kg_status kg_verify(uint64_t seed, size_t random_curves, kg_verify_report** out) {
  return guard([&] {
    require(out != nullptr, "out");
    VerifyOptions options;
    options.seed = seed;
    options.random_curves = random_curves;
    *out = new kg_verify_report{verify_invariants(options)};
  });
}

void kg_verify_free(kg_verify_report* report) { delete report; }
size_t kg_verify_size(const kg_verify_report* report) { return report ? report->outcomes.size() : 0; }

kg_status kg_verify_entry_at(const kg_verify_report* report, size_t index, kg_verify_entry* out) {
  return guard([&] {
    require(report && out, "report/out");
    if (index >= report->outcomes.size()) fail(ErrorCode::InvalidArgument, "verify entry index out of range");
    const InvariantOutcome& o = report->outcomes[index];
    *out = kg_verify_entry{o.name.c_str(), o.first_failure.c_str(), o.passed() ? 1 : 0, o.checked, o.failures};
  });
}

int kg_verify_all_passed(const kg_verify_report* report) {
  if (!report) return 0;
  for (const InvariantOutcome& o : report->outcomes)
    if (!o.passed()) return 0;
  return 1;
}

}  // extern "C"
