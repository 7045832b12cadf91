// kummergap command-line front end. Talks to the library exclusively through
// the C API in kummergap/kummergap.h.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kummergap/kummergap.h"

namespace {

using json = nlohmann::ordered_json;

// ---- C API plumbing -------------------------------------------------------

struct DomainError {
  kg_status status;
  std::string message;
};

struct UsageError {
  std::string message;
};

void check(kg_status status) {
  if (status != KG_OK) throw DomainError{status, kg_last_error_message()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using IntsPtr = std::unique_ptr<kg_ints, Deleter<kg_ints, kg_ints_free>>;
using CurvePtr = std::unique_ptr<kg_curve, Deleter<kg_curve, kg_curve_free>>;
using SemigroupPtr = std::unique_ptr<kg_semigroup, Deleter<kg_semigroup, kg_semigroup_free>>;
using DivisorPtr = std::unique_ptr<kg_divisor, Deleter<kg_divisor, kg_divisor_free>>;
using ProfilePtr = std::unique_ptr<kg_profile, Deleter<kg_profile, kg_profile_free>>;
using SweepPtr = std::unique_ptr<kg_sweep, Deleter<kg_sweep, kg_sweep_free>>;
using VerifyPtr = std::unique_ptr<kg_verify_report, Deleter<kg_verify_report, kg_verify_free>>;

std::vector<int64_t> take(kg_ints* raw) {
  IntsPtr list(raw);
  const int64_t* data = kg_ints_data(list.get());
  return std::vector<int64_t>(data, data + kg_ints_size(list.get()));
}

template <class F>
std::vector<int64_t> ints(F&& call) {
  kg_ints* raw = nullptr;
  check(call(&raw));
  return take(raw);
}

// ---- rational rendering -----------------------------------------------------

std::string rational_str(kg_rational q) {
  if (q.den == 1) return std::to_string(q.num);
  return std::to_string(q.num) + "/" + std::to_string(q.den);
}

// Rounded half away from zero; display only.
std::string rational_decimal(kg_rational q, int digits) {
  __extension__ using Wide = __int128;
  Wide n = q.num < 0 ? -static_cast<Wide>(q.num) : q.num;
  Wide scale = 1;
  for (int d = 0; d < digits; ++d) scale *= 10;
  Wide whole = n / q.den;
  Wide frac = (n % q.den) * scale / q.den;
  Wide rem = (n % q.den) * scale % q.den;
  if (2 * rem >= q.den && ++frac == scale) {
    frac = 0;
    ++whole;
  }
  auto digits_of = [](Wide v) {
    std::string s = v == 0 ? "0" : "";
    for (; v > 0; v /= 10) s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    return s;
  };
  std::string out = (q.num < 0 && (whole != 0 || frac != 0)) ? "-" : "";
  out += digits_of(whole);
  if (digits > 0) {
    std::string f = digits_of(frac);
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

// ---- parsing ----------------------------------------------------------------

int64_t parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError{"cannot parse " + what + " '" + text + "'"};
  }
  if (used != text.size()) throw UsageError{"cannot parse " + what + " '" + text + "'"};
  return value;
}

// "1,1,3,3" or with repetition "1^5,2^3".
std::vector<int64_t> parse_list(const std::string& text, const std::string& what) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) throw UsageError{"empty entry in " + what + " '" + text + "'"};
    auto caret = item.find('^');
    if (caret == std::string::npos) {
      out.push_back(parse_int(item, what));
    } else {
      const int64_t value = parse_int(item.substr(0, caret), what);
      const int64_t count = parse_int(item.substr(caret + 1), what + " repeat count");
      if (count < 1 || count > 1000000) throw UsageError{"bad repeat count in " + what + " '" + item + "'"};
      out.insert(out.end(), static_cast<std::size_t>(count), value);
    }
  }
  if (out.empty()) throw UsageError{what + " is empty"};
  return out;
}

kg_rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return {parse_int(text, "rational"), 1};
  return {parse_int(text.substr(0, slash), "rational"), parse_int(text.substr(slash + 1), "rational")};
}

// ---- shared options -----------------------------------------------------------

struct CurveOptions {
  std::optional<int64_t> m;
  std::string lambdas;
  std::string curve_file;
  std::string label;
};

struct Common {
  std::string format = "json";
  int decimal = -1;
};

struct Context {
  Common common;
  json warnings = json::array();
};

void add_curve_options(CLI::App* app, CurveOptions& opts) {
  app->add_option("--m", opts.m, "Kummer degree m");
  app->add_option("--lambdas", opts.lambdas, "multiplicities, e.g. 1,1,3,3 or 1^5");
  app->add_option("--curve", opts.curve_file, "JSON file {\"m\": 9, \"lambdas\": [1,1,3,3]}");
  app->add_option("--label", opts.label, "label echoed in the report");
}

bool has_curve(const CurveOptions& opts) { return !opts.lambdas.empty() || !opts.curve_file.empty(); }

struct CurveInput {
  int64_t m = 0;
  std::vector<int64_t> lambdas;
  std::string label;
};

CurveInput resolve_curve(const CurveOptions& opts, Context& ctx) {
  CurveInput in;
  std::optional<int64_t> file_m;
  std::optional<std::vector<int64_t>> file_lambdas;
  if (!opts.curve_file.empty()) {
    std::ifstream file(opts.curve_file);
    if (!file) throw UsageError{"cannot open curve file '" + opts.curve_file + "'"};
    json doc;
    try {
      doc = json::parse(file);
      file_m = doc.at("m").get<int64_t>();
      file_lambdas = doc.at("lambdas").get<std::vector<int64_t>>();
      if (doc.contains("label")) in.label = doc.at("label").get<std::string>();
    } catch (const json::exception& e) {
      throw UsageError{"malformed curve file '" + opts.curve_file + "': " + e.what()};
    }
  }
  if (opts.m && file_m && *opts.m != *file_m)
    ctx.warnings.push_back("--m overrides m=" + std::to_string(*file_m) + " from the curve file");
  std::vector<int64_t> flag_lambdas;
  if (!opts.lambdas.empty()) flag_lambdas = parse_list(opts.lambdas, "--lambdas");
  if (!opts.lambdas.empty() && file_lambdas && flag_lambdas != *file_lambdas)
    ctx.warnings.push_back("--lambdas overrides lambdas from the curve file");
  if (opts.m) {
    in.m = *opts.m;
  } else if (file_m) {
    in.m = *file_m;
  } else {
    throw UsageError{"missing --m"};
  }
  if (!flag_lambdas.empty()) {
    in.lambdas = flag_lambdas;
  } else if (file_lambdas) {
    in.lambdas = *file_lambdas;
  } else {
    throw UsageError{"missing --lambdas"};
  }
  if (!opts.label.empty()) in.label = opts.label;
  return in;
}

CurvePtr make_curve(const CurveInput& in) {
  kg_curve* raw = nullptr;
  check(kg_curve_create(in.m, in.lambdas.data(), in.lambdas.size(), &raw));
  return CurvePtr(raw);
}

json curve_echo(const CurveInput& in) {
  json out;
  out["m"] = in.m;
  out["lambdas"] = in.lambdas;
  if (!in.label.empty()) out["label"] = in.label;
  return out;
}

int64_t genus_of(const kg_curve* curve) {
  int64_t g = 0;
  check(kg_curve_genus(curve, &g));
  return g;
}

std::vector<std::size_t> totally_ramified_places(const kg_curve* curve) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s <= kg_curve_r(curve); ++s) {
    int64_t d = 0;
    check(kg_curve_fiber_size(curve, s, &d));
    if (d == 1) out.push_back(s);
  }
  return out;
}

json rational_json(kg_rational q, const Context& ctx) {
  if (ctx.common.decimal < 0) return rational_str(q);
  json out;
  out["exact"] = rational_str(q);
  out["decimal"] = rational_decimal(q, ctx.common.decimal);
  return out;
}

SemigroupPtr semigroup_from(const std::string& generators, const std::string& gaps) {
  kg_semigroup* raw = nullptr;
  if (!generators.empty()) {
    const auto gens = parse_list(generators, "--generators");
    check(kg_semigroup_from_generators(gens.data(), gens.size(), &raw));
  } else {
    std::vector<int64_t> values;
    if (gaps != "-") values = parse_list(gaps, "--gaps");
    check(kg_semigroup_from_gaps(values.data(), values.size(), &raw));
  }
  return SemigroupPtr(raw);
}

json semigroup_summary(const kg_semigroup* h) {
  int64_t g = 0, frob = 0, mult = 0;
  check(kg_semigroup_invariants(h, &g, &frob, &mult));
  json out;
  out["gaps"] = ints([&](kg_ints** o) { return kg_semigroup_gaps(h, o); });
  out["minimal_generators"] = ints([&](kg_ints** o) { return kg_semigroup_minimal_generators(h, o); });
  out["genus"] = g;
  out["frobenius"] = frob;
  out["multiplicity"] = mult;
  return out;
}

// ---- text rendering -------------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "{";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + scalar_text(v[k]);
    return out + "}";
  }
  if (v.is_object()) return v.dump();
  return v.dump();
}

bool is_table(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_object(); });
}

void render_table(std::ostream& os, const json& rows, const std::string& indent) {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [key, _] : row.items())
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  std::vector<std::size_t> widths;
  for (const auto& c : columns) widths.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line.push_back(row.contains(columns[c]) ? scalar_text(row.at(columns[c])) : "");
      widths[c] = std::max(widths[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  os << indent;
  for (std::size_t c = 0; c < columns.size(); ++c) os << std::left << std::setw(static_cast<int>(widths[c] + 2)) << columns[c];
  os << "\n";
  for (const auto& line : cells) {
    os << indent;
    for (std::size_t c = 0; c < columns.size(); ++c) os << std::left << std::setw(static_cast<int>(widths[c] + 2)) << line[c];
    os << "\n";
  }
}

void render_object(std::ostream& os, const json& obj, const std::string& indent) {
  std::size_t width = 0;
  for (const auto& [key, value] : obj.items())
    if (!value.is_object() && !is_table(value)) width = std::max(width, key.size());
  for (const auto& [key, value] : obj.items()) {
    if (key == "warnings" && value.is_array()) {
      os << indent << std::left << std::setw(static_cast<int>(width)) << key << " : " << (value.empty() ? "none" : "") << "\n";
      for (const auto& w : value) os << indent << "  - " << scalar_text(w) << "\n";
    } else if (value.is_object()) {
      os << indent << key << ":\n";
      render_object(os, value, indent + "  ");
    } else if (is_table(value)) {
      os << indent << key << ":\n";
      render_table(os, value, indent + "  ");
    } else {
      os << indent << std::left << std::setw(static_cast<int>(width)) << key << " : " << scalar_text(value) << "\n";
    }
  }
}

void emit_report(const Context& ctx, const std::string& command, const json& input, const json& results) {
  json report;
  report["command"] = command;
  report["input"] = input;
  report["results"] = results;
  report["warnings"] = ctx.warnings;
  if (ctx.common.format == "text") {
    render_object(std::cout, report, "");
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

// ---- subcommands ---------------------------------------------------------------

struct GapsetOptions {
  CurveOptions curve;
  std::size_t place = 0;
  bool all_places = false;
  bool reference = false;
  bool partial = false;
  bool generic = false;
};

json gapset_one(const kg_curve* curve, std::size_t s, const GapsetOptions& opts, Context& ctx) {
  json out;
  out["place"] = s;
  int64_t d = 0;
  check(kg_curve_fiber_size(curve, s, &d));
  if (opts.partial || (d != 1 && !opts.reference)) {
    int complete = 0;
    kg_ints* raw = nullptr;
    check(kg_partial_gaps(curve, s, &raw, &complete));
    out["kind"] = "partial";
    out["complete"] = complete != 0;
    out["gaps"] = take(raw);
    if (!complete)
      ctx.warnings.push_back("partial: place " + std::to_string(s) + " is not totally ramified (" +
                             std::to_string(d) + " places in the fiber); reporting a subset of the gap set");
    return out;
  }
  out["kind"] = opts.reference ? "reference" : "complete";
  out["complete"] = true;
  out["gaps"] = ints([&](kg_ints** o) {
    return opts.reference ? kg_gap_set_reference(curve, s, o) : kg_gap_set(curve, s, o);
  });
  return out;
}

void run_gapset(GapsetOptions& opts, Context& ctx) {
  const CurveInput in = resolve_curve(opts.curve, ctx);
  CurvePtr curve = make_curve(in);
  json input = curve_echo(in);
  json results;
  results["genus"] = genus_of(curve.get());
  if (opts.generic) {
    int complete = 0;
    kg_ints* raw = nullptr;
    check(kg_generic_gaps(curve.get(), &raw, &complete));
    input["place"] = "generic";
    results["kind"] = "generic";
    results["complete"] = complete != 0;
    results["gaps"] = take(raw);
    if (!complete) ctx.warnings.push_back("partial: generic place; reporting a subset of the gap set");
  } else if (opts.all_places) {
    input["place"] = "all";
    json rows = json::array();
    for (std::size_t s : totally_ramified_places(curve.get())) rows.push_back(gapset_one(curve.get(), s, opts, ctx));
    results["places"] = rows;
  } else {
    input["place"] = opts.place;
    json one = gapset_one(curve.get(), opts.place, opts, ctx);
    for (auto& [k, v] : one.items()) results[k] = v;
  }
  emit_report(ctx, "gapset", input, results);
}

struct SemigroupOptions {
  CurveOptions curve;
  std::size_t place = 0;
  std::string generators;
  std::string gaps;
  int64_t base = 0;
};

void add_semigroup_source(CLI::App* app, SemigroupOptions& opts) {
  add_curve_options(app, opts.curve);
  app->add_option("--place", opts.place, "place index (0 = infinity)");
  app->add_option("--generators", opts.generators, "generators of a numerical semigroup instead of a curve");
  app->add_option("--gaps", opts.gaps, "gap set of a numerical semigroup instead of a curve ('-' for none)");
}

bool semigroup_mode(const SemigroupOptions& opts) {
  const int sources = (has_curve(opts.curve) ? 1 : 0) + (opts.generators.empty() ? 0 : 1) + (opts.gaps.empty() ? 0 : 1);
  if (sources != 1) throw UsageError{"give exactly one of a curve (--m/--lambdas/--curve), --generators or --gaps"};
  return !has_curve(opts.curve);
}

json semigroup_input(const SemigroupOptions& opts, Context& ctx, CurvePtr& curve) {
  if (semigroup_mode(opts)) {
    json input;
    if (!opts.generators.empty()) input["generators"] = parse_list(opts.generators, "--generators");
    if (!opts.gaps.empty()) input["gaps"] = opts.gaps == "-" ? json::array() : json(parse_list(opts.gaps, "--gaps"));
    return input;
  }
  const CurveInput in = resolve_curve(opts.curve, ctx);
  curve = make_curve(in);
  json input = curve_echo(in);
  input["place"] = opts.place;
  return input;
}

void run_semigroup(SemigroupOptions& opts, Context& ctx) {
  CurvePtr curve;
  json input = semigroup_input(opts, ctx, curve);
  json results;
  if (!curve) {
    SemigroupPtr h = semigroup_from(opts.generators, opts.gaps);
    results = semigroup_summary(h.get());
  } else {
    kg_semigroup* raw = nullptr;
    check(kg_weierstrass_semigroup(curve.get(), opts.place, &raw));
    SemigroupPtr h(raw);
    results["generators"] = ints([&](kg_ints** o) { return kg_weierstrass_generators(curve.get(), opts.place, o); });
    const json summary = semigroup_summary(h.get());
    for (const auto& [k, v] : summary.items()) results[k] = v;
    const auto gaps = ints([&](kg_ints** o) { return kg_gap_set(curve.get(), opts.place, o); });
    results["gaps_match_gap_set"] = gaps == results["gaps"].get<std::vector<int64_t>>();
  }
  emit_report(ctx, "semigroup", input, results);
}

void run_apery(SemigroupOptions& opts, Context& ctx) {
  CurvePtr curve;
  json input = semigroup_input(opts, ctx, curve);
  json results;
  if (!curve) {
    SemigroupPtr h = semigroup_from(opts.generators, opts.gaps);
    int64_t g = 0, frob = 0, mult = 0;
    check(kg_semigroup_invariants(h.get(), &g, &frob, &mult));
    const int64_t base = opts.base > 0 ? opts.base : mult;
    input["base"] = base;
    results["base"] = base;
    results["apery"] = ints([&](kg_ints** o) { return kg_semigroup_apery(h.get(), base, o); });
    results["generators"] = ints([&](kg_ints** o) { return kg_semigroup_generators_via_apery(h.get(), base, o); });
  } else {
    const int64_t m = kg_curve_m(curve.get());
    if (opts.base != 0 && opts.base != m) {
      kg_semigroup* raw = nullptr;
      check(kg_weierstrass_semigroup(curve.get(), opts.place, &raw));
      SemigroupPtr h(raw);
      input["base"] = opts.base;
      results["base"] = opts.base;
      results["apery"] = ints([&](kg_ints** o) { return kg_semigroup_apery(h.get(), opts.base, o); });
    } else {
      input["base"] = m;
      results["base"] = m;
      const auto formula = ints([&](kg_ints** o) { return kg_weierstrass_apery(curve.get(), opts.place, o); });
      const auto gaps = ints([&](kg_ints** o) { return kg_gap_set(curve.get(), opts.place, o); });
      kg_semigroup* raw = nullptr;
      check(kg_semigroup_from_gaps(gaps.data(), gaps.size(), &raw));
      SemigroupPtr h(raw);
      const auto scanned = ints([&](kg_ints** o) { return kg_semigroup_apery(h.get(), m, o); });
      results["apery"] = formula;
      results["matches_scan"] = formula == scanned;
      results["generators"] = ints([&](kg_ints** o) { return kg_semigroup_generators_via_apery(h.get(), m, o); });
    }
  }
  emit_report(ctx, "apery", input, results);
}

void run_invariants(SemigroupOptions& opts, Context& ctx) {
  CurvePtr curve;
  json input = semigroup_input(opts, ctx, curve);
  json results;
  if (!curve) {
    SemigroupPtr h = semigroup_from(opts.generators, opts.gaps);
    int64_t g = 0, frob = 0, mult = 0;
    check(kg_semigroup_invariants(h.get(), &g, &frob, &mult));
    results["genus"] = g;
    results["frobenius"] = frob;
    results["multiplicity"] = mult;
  } else {
    kg_multiplicity_info info{};
    check(kg_multiplicity_report(curve.get(), opts.place, &info));
    kg_semigroup* raw = nullptr;
    check(kg_weierstrass_semigroup(curve.get(), opts.place, &raw));
    SemigroupPtr h(raw);
    int64_t g = 0, frob = 0, mult = 0;
    check(kg_semigroup_invariants(h.get(), &g, &frob, &mult));
    results["genus"] = genus_of(curve.get());
    results["frobenius"] = info.has_frobenius ? json(info.frobenius) : json(nullptr);
    results["multiplicity"] = info.multiplicity;
    results["semigroup_frobenius"] = frob;
    results["semigroup_multiplicity"] = mult;
    results["formulas_agree"] = (info.multiplicity == mult) && (info.has_frobenius ? info.frobenius == frob : frob == -1);
    results["multiplicity_is_m_predicted"] = info.multiplicity_is_m_predicted != 0;
    results["all_coprime"] = info.all_coprime != 0;
    if (info.has_relation) {
      results["multiplicity_from_frobenius"] = info.multiplicity_from_frobenius;
      results["large_r_forces_m"] = info.large_r_forces_m != 0;
    }
  }
  emit_report(ctx, "invariants", input, results);
}

void run_symmetry(SemigroupOptions& opts, Context& ctx) {
  CurvePtr curve;
  json input = semigroup_input(opts, ctx, curve);
  json results;
  SemigroupPtr h;
  if (!curve) {
    h = semigroup_from(opts.generators, opts.gaps);
  } else {
    kg_symmetry_verdict verdict{};
    kg_symmetry_criterion criterion{};
    check(kg_symmetry_predict(curve.get(), opts.place, &verdict, &criterion));
    results["prediction"] = kg_symmetry_verdict_name(verdict);
    results["criterion"] = kg_symmetry_criterion_name(criterion);
    kg_semigroup* raw = nullptr;
    check(kg_weierstrass_semigroup(curve.get(), opts.place, &raw));
    h.reset(raw);
  }
  int symmetric = 0;
  check(kg_semigroup_is_symmetric(h.get(), &symmetric));
  int64_t g = 0, frob = 0, mult = 0;
  check(kg_semigroup_invariants(h.get(), &g, &frob, &mult));
  int apery_symmetric = 0;
  check(kg_semigroup_is_symmetric_apery(h.get(), mult, &apery_symmetric));
  results["symmetric"] = symmetric != 0;
  results["apery_pairing_symmetric"] = apery_symmetric != 0;
  results["genus"] = g;
  results["frobenius"] = frob;
  if (curve) {
    const std::string p = results["prediction"].get<std::string>();
    bool consistent = true;
    if (p == "Symmetric" || p == "SufficientConditionHolds") consistent = symmetric != 0;
    if (p == "NotSymmetric") consistent = symmetric == 0;
    results["prediction_consistent"] = consistent;
  }
  emit_report(ctx, "symmetry", input, results);
}

struct CoincideOptions {
  CurveOptions curve;
  std::size_t s1 = 0;
  std::size_t s2 = 1;
};

void run_coincide(CoincideOptions& opts, Context& ctx) {
  const CurveInput in = resolve_curve(opts.curve, ctx);
  CurvePtr curve = make_curve(in);
  json input = curve_echo(in);
  input["s1"] = opts.s1;
  input["s2"] = opts.s2;
  kg_coincidence_info info{};
  check(kg_gap_sets_coincide(curve.get(), opts.s1, opts.s2, &info));
  json results;
  results["equal"] = info.equal != 0;
  results["same_lambda"] = info.same_lambda != 0;
  results["infinity_balance"] = info.infinity_balance != 0;
  if (info.trigonal_applicable) results["trigonal_predicts_equal"] = info.trigonal_predicts_equal != 0;
  results["gaps_s1"] = ints([&](kg_ints** o) { return kg_gap_set(curve.get(), opts.s1, o); });
  results["gaps_s2"] = ints([&](kg_ints** o) { return kg_gap_set(curve.get(), opts.s2, o); });
  emit_report(ctx, "coincide", input, results);
}

struct DivisorOptions {
  CurveOptions curve;
  std::string anchor = "root";
  std::size_t root = 1;
};

void run_divisors(DivisorOptions& opts, Context& ctx) {
  const CurveInput in = resolve_curve(opts.curve, ctx);
  CurvePtr curve = make_curve(in);
  json input = curve_echo(in);
  const bool generic = opts.anchor == "generic";
  if (!generic && opts.anchor != "root") throw UsageError{"--anchor must be 'root' or 'generic'"};
  input["anchor"] = generic ? json("generic") : json("root:" + std::to_string(opts.root));

  const int64_t m = kg_curve_m(curve.get());
  const int64_t g = genus_of(curve.get());
  json rows = json::array();
  bool all_effective = true;
  bool all_degree = true;
  std::vector<int64_t> valuations;
  // valuation target: Q_s for a totally ramified root anchor, Q_0 for a generic anchor
  int64_t target_fiber = 0;
  if (generic) {
    check(kg_curve_fiber_size(curve.get(), 0, &target_fiber));
  } else if (opts.root >= 1 && opts.root <= kg_curve_r(curve.get())) {
    check(kg_curve_fiber_size(curve.get(), opts.root, &target_fiber));
  }
  for (int64_t i = 1; i < m; ++i) {
    int64_t beta = 0;
    check(kg_curve_beta0(curve.get(), i, &beta));
    for (int64_t j = 0; j < beta; ++j) {
      kg_divisor* raw = nullptr;
      check(kg_differential_divisor(curve.get(), generic ? KG_ANCHOR_GENERIC : KG_ANCHOR_ROOT, opts.root, i, j, &raw));
      DivisorPtr d(raw);
      int64_t degree = 0;
      check(kg_divisor_degree(d.get(), &degree));
      json row;
      row["i"] = i;
      row["j"] = j;
      json coeffs = json::object();
      for (std::size_t k = 0; k < kg_divisor_size(d.get()); ++k) {
        kg_divisor_entry e{};
        check(kg_divisor_entry_at(d.get(), k, &e));
        std::string key = e.kind == KG_FIBER_ROOT ? "P" + std::to_string(e.index)
                          : e.kind == KG_FIBER_INFINITY ? "inf"
                                                        : "extra";
        coeffs[key] = e.coefficient;
        const bool target = generic ? e.kind == KG_FIBER_INFINITY : (e.kind == KG_FIBER_ROOT && e.index == opts.root);
        if (target && target_fiber == 1) valuations.push_back(e.coefficient + 1);
      }
      row["coefficients"] = coeffs.dump();
      row["degree"] = degree;
      row["effective"] = kg_divisor_effective(d.get()) != 0;
      all_effective = all_effective && kg_divisor_effective(d.get());
      all_degree = all_degree && degree == 2 * g - 2;
      rows.push_back(row);
    }
  }
  json results;
  results["genus"] = g;
  results["count"] = rows.size();
  results["all_effective"] = all_effective;
  results["all_degree_2g_minus_2"] = all_degree;
  if (target_fiber == 1) {
    std::sort(valuations.begin(), valuations.end());
    const std::size_t place = generic ? 0 : opts.root;
    const auto gaps = ints([&](kg_ints** o) { return kg_gap_set(curve.get(), place, o); });
    results["valuations_plus_one"] = valuations;
    results["reproduces_gap_set"] = valuations == gaps;
  }
  results["divisors"] = rows;
  emit_report(ctx, "divisors", input, results);
}

struct WeightsOptions {
  CurveOptions curve;
};

void run_weights(WeightsOptions& opts, Context& ctx) {
  const CurveInput in = resolve_curve(opts.curve, ctx);
  CurvePtr curve = make_curve(in);
  const int64_t g = genus_of(curve.get());
  json rows = json::array();
  for (std::size_t s : totally_ramified_places(curve.get())) {
    const auto gaps = ints([&](kg_ints** o) { return kg_gap_set(curve.get(), s, o); });
    int64_t w = 0;
    check(kg_weight(gaps.data(), gaps.size(), g, &w));
    json row;
    row["place"] = s;
    row["weight"] = w;
    rows.push_back(row);
  }
  int64_t total = 0;
  check(kg_bw(curve.get(), &total));
  json results;
  results["genus"] = g;
  results["places"] = rows;
  results["bw"] = total;
  kg_rational ratio{};
  kg_status status = kg_bw_ratio(curve.get(), &ratio);
  if (status == KG_OK) {
    results["ratio"] = rational_json(ratio, ctx);
  } else if (status == KG_E_RATIO_UNDEFINED) {
    results["ratio"] = nullptr;
    ctx.warnings.push_back(std::string("ratio undefined: ") + kg_last_error_message());
  } else {
    check(status);
  }
  emit_report(ctx, "weights", curve_echo(in), results);
}

struct LimitOptions {
  CurveOptions curve;
  std::vector<std::string> densities;
};

void run_limit(LimitOptions& opts, Context& ctx) {
  json input;
  ProfilePtr profile;
  if (has_curve(opts.curve)) {
    const CurveInput in = resolve_curve(opts.curve, ctx);
    CurvePtr curve = make_curve(in);
    input = curve_echo(in);
    kg_profile* raw = nullptr;
    check(kg_profile_of_curve(curve.get(), &raw));
    profile.reset(raw);
  } else {
    if (!opts.curve.m) throw UsageError{"missing --m"};
    if (opts.densities.empty()) throw UsageError{"give densities with --k j=p/q or a curve"};
    std::vector<int64_t> keys;
    std::vector<kg_rational> values;
    json echo = json::object();
    for (const std::string& item : opts.densities) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError{"--k expects j=p/q, got '" + item + "'"};
      keys.push_back(parse_int(item.substr(0, eq), "--k key"));
      values.push_back(parse_rational(item.substr(eq + 1)));
      echo[item.substr(0, eq)] = item.substr(eq + 1);
    }
    input["m"] = *opts.curve.m;
    input["k"] = echo;
    kg_profile* raw = nullptr;
    check(kg_profile_create(*opts.curve.m, keys.data(), values.data(), keys.size(), &raw));
    profile.reset(raw);
  }
  json densities = json::object();
  for (std::size_t k = 0; k < kg_profile_size(profile.get()); ++k) {
    int64_t key = 0;
    kg_rational q{};
    check(kg_profile_entry(profile.get(), k, &key, &q));
    densities[std::to_string(key)] = rational_str(q);
  }
  kg_rational limit{}, lower{}, upper{};
  check(kg_asymptotic_limit(profile.get(), &limit));
  check(kg_limit_bounds(kg_profile_m(profile.get()), &lower, &upper));
  json results;
  results["densities"] = densities;
  results["limit"] = rational_json(limit, ctx);
  results["lower_bound"] = rational_json(lower, ctx);
  results["upper_bound"] = rational_json(upper, ctx);
  emit_report(ctx, "limit", input, results);
}

struct SweepOptions {
  std::optional<int64_t> m;
  std::string pattern;
  std::string repeats;
};

void run_sweep(SweepOptions& opts, Context& ctx) {
  if (!opts.m) throw UsageError{"missing --m"};
  const auto pattern = parse_list(opts.pattern, "--pattern");
  const auto repeats = parse_list(opts.repeats, "--repeats");
  kg_sweep* raw = nullptr;
  check(kg_convergence_sweep(*opts.m, pattern.data(), pattern.size(), repeats.data(), repeats.size(), &raw));
  SweepPtr sweep(raw);
  json rows = json::array();
  for (std::size_t k = 0; k < kg_sweep_size(sweep.get()); ++k) {
    kg_sweep_row row{};
    check(kg_sweep_row_at(sweep.get(), k, &row));
    json out;
    out["r"] = row.r;
    out["genus"] = row.genus;
    if (row.skipped) {
      ctx.warnings.push_back("skipped r=" + std::to_string(row.r) + ": genus " + std::to_string(row.genus) + " <= 1");
      continue;
    }
    const int digits = ctx.common.decimal < 0 ? 6 : ctx.common.decimal;
    out["ratio"] = rational_str(row.ratio);
    out["limit"] = rational_str(row.limit);
    out["difference"] = rational_str(row.difference);
    out["difference_decimal"] = rational_decimal(row.difference, digits);
    rows.push_back(out);
  }
  json input;
  input["m"] = *opts.m;
  input["pattern"] = pattern;
  input["repeats"] = repeats;
  json results;
  results["rows"] = rows;
  emit_report(ctx, "sweep", input, results);
}

struct VerifyCliOptions {
  uint64_t seed = 20240917;
  std::size_t random = 2000;
};

bool run_verify(VerifyCliOptions& opts, Context& ctx) {
  kg_verify_report* raw = nullptr;
  check(kg_verify(opts.seed, opts.random, &raw));
  VerifyPtr report(raw);
  json rows = json::array();
  for (std::size_t k = 0; k < kg_verify_size(report.get()); ++k) {
    kg_verify_entry e{};
    check(kg_verify_entry_at(report.get(), k, &e));
    json row;
    row["invariant"] = e.name;
    row["status"] = e.passed ? "pass" : "FAIL";
    row["checked"] = e.checked;
    row["failures"] = e.failures;
    if (!e.passed) row["first_failure"] = e.first_failure;
    rows.push_back(row);
  }
  const bool passed = kg_verify_all_passed(report.get()) != 0;
  json input;
  input["seed"] = opts.seed;
  input["random_curves"] = opts.random;
  json results;
  results["all_passed"] = passed;
  results["invariants"] = rows;
  emit_report(ctx, "verify", input, results);
  return passed;
}

void print_error(const Context& ctx, const DomainError& e) {
  if (ctx.common.format == "text") {
    std::cerr << "error [" << kg_status_name(e.status) << "]: " << e.message << "\n";
  } else {
    json err;
    err["error"]["code"] = kg_status_name(e.status);
    err["error"]["status"] = static_cast<int>(e.status);
    err["error"]["message"] = e.message;
    std::cerr << err.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gap sets, Weierstrass semigroups and weight asymptotics of Kummer covers"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--format", ctx.common.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--decimal", ctx.common.decimal, "also render rationals with N decimal digits")
      ->check(CLI::Range(0, 30));
  app.set_version_flag("--version", std::string(kg_version()));

  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--format", ctx.common.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--decimal", ctx.common.decimal, "also render rationals with N decimal digits")
        ->check(CLI::Range(0, 30));
  };

  GapsetOptions gapset_opts;
  auto* gapset = app.add_subcommand("gapset", "gap set at a place");
  add_curve_options(gapset, gapset_opts.curve);
  gapset->add_option("--place", gapset_opts.place, "place index (0 = infinity)");
  gapset->add_flag("--all-places", gapset_opts.all_places, "every totally ramified place");
  gapset->add_flag("--reference", gapset_opts.reference, "use the reference set-builder form");
  gapset->add_flag("--partial", gapset_opts.partial, "gap subset at a place that is not totally ramified");
  gapset->add_flag("--generic", gapset_opts.generic, "gap subset at a generic place");
  add_globals(gapset);

  SemigroupOptions semigroup_opts, apery_opts, invariants_opts, symmetry_opts;
  auto* semigroup = app.add_subcommand("semigroup", "Weierstrass semigroup or a numerical semigroup");
  add_semigroup_source(semigroup, semigroup_opts);
  add_globals(semigroup);
  auto* apery = app.add_subcommand("apery", "Apery set");
  add_semigroup_source(apery, apery_opts);
  apery->add_option("--base", apery_opts.base, "Apery base (default m, or the multiplicity)");
  add_globals(apery);
  auto* invariants = app.add_subcommand("invariants", "genus, Frobenius number and multiplicity");
  add_semigroup_source(invariants, invariants_opts);
  add_globals(invariants);
  auto* symmetry = app.add_subcommand("symmetry", "symmetry prediction and direct check");
  add_semigroup_source(symmetry, symmetry_opts);
  add_globals(symmetry);

  CoincideOptions coincide_opts;
  auto* coincide = app.add_subcommand("coincide", "compare gap sets at two places");
  add_curve_options(coincide, coincide_opts.curve);
  coincide->add_option("--s1", coincide_opts.s1, "first place");
  coincide->add_option("--s2", coincide_opts.s2, "second place");
  add_globals(coincide);

  DivisorOptions divisor_opts;
  auto* divisors = app.add_subcommand("divisors", "divisors of the holomorphic differentials");
  add_curve_options(divisors, divisor_opts.curve);
  divisors->add_option("--anchor", divisor_opts.anchor, "root or generic");
  divisors->add_option("--root", divisor_opts.root, "root index for --anchor root");
  add_globals(divisors);

  WeightsOptions weights_opts;
  auto* weights = app.add_subcommand("weights", "Weierstrass weights at totally ramified places");
  add_curve_options(weights, weights_opts.curve);
  add_globals(weights);

  LimitOptions limit_opts;
  auto* limit = app.add_subcommand("limit", "asymptotic BW/(g^3-g) for a density profile");
  add_curve_options(limit, limit_opts.curve);
  limit->add_option("--k", limit_opts.densities, "density j=p/q (repeatable)");
  add_globals(limit);

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "exact ratio against the limit for repeated patterns");
  sweep->add_option("--m", sweep_opts.m, "Kummer degree m");
  sweep->add_option("--pattern", sweep_opts.pattern, "multiplicity pattern, e.g. 1,2")->required();
  sweep->add_option("--repeats", sweep_opts.repeats, "repeat counts, e.g. 4,8,16")->required();
  add_globals(sweep);

  VerifyCliOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--seed", verify_opts.seed, "seed for the random corpus");
  verify->add_option("--random", verify_opts.random, "number of random curves");
  add_globals(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gapset) run_gapset(gapset_opts, ctx);
    if (*semigroup) run_semigroup(semigroup_opts, ctx);
    if (*apery) run_apery(apery_opts, ctx);
    if (*invariants) run_invariants(invariants_opts, ctx);
    if (*symmetry) run_symmetry(symmetry_opts, ctx);
    if (*coincide) run_coincide(coincide_opts, ctx);
    if (*divisors) run_divisors(divisor_opts, ctx);
    if (*weights) run_weights(weights_opts, ctx);
    if (*limit) run_limit(limit_opts, ctx);
    if (*sweep) run_sweep(sweep_opts, ctx);
    if (*verify) return run_verify(verify_opts, ctx) ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return 2;
  } catch (const DomainError& e) {
    print_error(ctx, e);
    return 1;
  }
  return 0;
}
