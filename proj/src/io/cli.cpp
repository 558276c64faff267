#include "rigid/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rigid/factor.hpp"
#include "rigid/json_io.hpp"
#include "rigid/motive.hpp"
#include "rigid/zeta.hpp"

#ifndef RIGID_FIXTURE_DIR
#define RIGID_FIXTURE_DIR "fixtures"
#endif

namespace rigid::cli {

namespace {

using io::json;

struct Outcome {
  json report;
  int code = 0;
};

// Errors that mean the input itself is unusable.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read input file '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

json invariants(const Decomposition& dec) {
  json out = json::array();
  for (const auto& f : dec.factors) out.push_back({f.delta, f.d});
  return out;
}

json multiplicity_entries(const MultiplicityVector& mv) {
  json out = json::array();
  for (std::size_t i = 0; i < mv.mu.size(); ++i) {
    if (mv.scalar[i]) {
      out.push_back(io::write(*mv.scalar[i]));
    } else {
      out.push_back(io::write(mv.mu[i]));  // center coordinates
    }
  }
  return out;
}

Outcome decompose_cmd(const json& doc, std::uint64_t seed) {
  const Algebra a = io::read_algebra(doc);
  json factors = json::array();
  Decomposition dec;
  try {
    dec = decompose(a, seed);
  } catch (const NotSemisimple& e) {
    return {{{"semisimple", false}, {"reason", e.what()}}, 1};
  }
  for (const auto& f : dec.factors) {
    factors.push_back({{"delta", f.delta},
                       {"d", f.d},
                       {"dim", f.dim()},
                       {"idempotent", io::write(f.idempotent)},
                       {"center_minpoly", io::write(f.center_minpoly)}});
  }
  return {{{"semisimple", true}, {"factors", factors}, {"invariants", invariants(dec)}}, 0};
}

Outcome mult_cmd(const json& doc, std::uint64_t seed) {
  std::optional<ObjectDatum> obj;
  try {
    obj = io::read_object(doc);
  } catch (const NotSemisimple& e) {
    return {{{"semisimple", false}, {"reason", e.what()}}, 1};
  }
  const AnalyzedObject a = analyze(*obj, seed);
  const auto integral = check_integral_type(a.multiplicity);
  json idempotent_formula = nullptr;
  try {
    const auto by_idempotents = multiplicity_from_idempotents(*obj, a.decomposition);
    idempotent_formula = by_idempotents.scalar == a.multiplicity.scalar;
  } catch (const NotScalar&) {
  }
  json report{{"semisimple", true},
              {"mu", multiplicity_entries(a.multiplicity)},
              {"scalar", a.multiplicity.all_scalar()},
              {"integral", integral.integral},
              {"invariants", invariants(a.decomposition)},
              {"euler_characteristic", io::write(euler_characteristic(*obj))},
              {"idempotent_formula_agrees", idempotent_formula}};
  return {report, integral.integral ? 0 : 1};
}

Vector element_from(const json& doc, const std::string& flag, std::size_t dim) {
  Vector f;
  if (!flag.empty()) {
    try {
      f = parse_rational_list(flag);
    } catch (const Error& e) {
      throw UsageError(std::string("--element: ") + e.what());
    }
  } else if (doc.contains("element")) {
    f = io::read_vector(doc["element"], "/element");
  } else {
    throw io::SchemaError("/element", "no endomorphism given: use --element or an \"element\" field");
  }
  if (f.size() != dim) throw io::SchemaError("/element", "element length differs from the algebra dimension");
  return f;
}

Outcome zeta_cmd(const json& doc, const std::string& element, std::size_t precision, std::uint64_t seed) {
  const ObjectDatum obj = io::read_object(doc);
  const Vector f = element_from(doc, element, obj.algebra().dim());
  const AnalyzedObject a = analyze(obj, seed);
  ZetaResult z;
  try {
    z = zeta(a, f);
  } catch (const NotIntegralType& e) {
    return {{{"integral", false}, {"reason", e.what()}}, 1};
  }
  json factors = json::array();
  for (const auto& pf : z.per_factor) factors.push_back({{"nrd", io::write(pf.nrd)}, {"exponent", pf.exponent.get_str()}});
  const bool series = zeta_series_check(a, f, precision);
  json report{{"integral", true},
              {"zeta", io::write(z.zeta)},
              {"factors", factors},
              {"euler_characteristic", io::write(z.chi)},
              {"det", z.det ? io::write(*z.det) : json(nullptr)},
              {"series_precision", precision},
              {"series_agrees", series}};
  return {report, series ? 0 : 1};
}

Outcome funceq_cmd(const json& doc, const std::string& element, std::uint64_t seed) {
  const ObjectDatum obj = io::read_object(doc);
  const Vector f = element_from(doc, element, obj.algebra().dim());
  const AnalyzedObject a = analyze(obj, seed);
  try {
    const auto r = functional_equation_check(a, f);
    json report{{"invertible", true},
                {"integral", true},
                {"functional_equation", r.holds},
                {"euler_characteristic", io::write(r.chi)},
                {"det", io::write(r.det)},
                {"lhs", io::write(r.lhs)},
                {"rhs", io::write(r.rhs)}};
    return {report, r.holds ? 0 : 1};
  } catch (const NotInvertible& e) {
    return {{{"invertible", false}, {"reason", e.what()}}, 1};
  } catch (const NotIntegralType& e) {
    return {{{"integral", false}, {"reason", e.what()}}, 1};
  }
}

json named_spec(const CategoryDatum& cat, const ObjectSpec& m) {
  json out = json::object();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) out[cat.simples()[i].name] = m[i];
  }
  return out;
}

json condition(const CategoryDatum& cat, const ConditionReport& r) {
  json out{{"passed", r.passed}, {"detail", r.detail}, {"witnesses", r.witnesses}};
  if (r.bound) out["bound"] = *r.bound;
  if (r.first_violation) out["first_violation"] = named_spec(cat, *r.first_violation);
  if (r.second_violation) out["second_violation"] = named_spec(cat, *r.second_violation);
  return out;
}

Outcome tate_cmd(const json& doc, unsigned bound, unsigned kimura_bound) {
  const CategoryDatum cat = io::read_category(doc);
  const auto r = equivalence_report(cat, bound);
  json kimura = json::array();
  bool kimura_ok = true;
  for (const auto& e : kimura_grading_check(cat, kimura_bound)) {
    kimura.push_back({{"name", e.name},
                      {"chi", e.chi},
                      {"parity", e.positive ? "positive" : "negative"},
                      {"power", e.power},
                      {"checked", e.checked},
                      {"vanishes", e.checked ? json(e.vanishes) : json(nullptr)}});
    kimura_ok = kimura_ok && (!e.checked || e.vanishes);
  }
  json report{{"bound", bound},
              {"i", r.i.passed},
              {"ii", r.ii.passed},
              {"iii", r.iii.passed},
              {"iv", r.iv.passed},
              {"v", r.v.passed},
              {"vi", r.vi.passed},
              {"conditions",
               {{"i", condition(cat, r.i)},
                {"ii", condition(cat, r.ii)},
                {"iii", condition(cat, r.iii)},
                {"iv", condition(cat, r.iv)},
                {"v", condition(cat, r.v)},
                {"vi", condition(cat, r.vi)}}},
              {"unbounded", {{"ii", r.ii_unbounded}, {"iv", r.iv_unbounded}}},
              {"consistency",
               {{"exact_agree", r.exact_agree}, {"bounded_agree", r.bounded_agree}, {"vi_implied", r.vi_implied}}},
              {"kimura", kimura}};
  const bool all = r.i.passed && r.ii.passed && r.iii.passed && r.iv.passed && r.v.passed && r.vi.passed;
  return {report, all && r.consistent() && kimura_ok ? 0 : 1};
}

json projector(const std::optional<SignProjectorResult>& p) {
  if (!p) return nullptr;
  return {{"pi", io::write(p->pi)}, {"p_plus", io::write(p->p_plus)}, {"p_minus", io::write(p->p_minus)}};
}

Outcome homology_cmd(const json& doc) {
  if (doc.is_object() && doc.contains("family")) {
    const json& list = doc["family"];
    if (!list.is_array()) throw io::SchemaError("/family", "expected an array");
    std::vector<RealizedObject> family;
    for (std::size_t i = 0; i < list.size(); ++i) family.push_back(io::read_realized(list[i], "/family/" + std::to_string(i)));
    const auto c = corollary_c1_report(family);
    json members = json::array();
    for (const auto& m : c.members) members.push_back({{"sign_projector", m.sign}, {"odd_fixed_zero", m.odd_fixed_zero}});
    json report{{"members", members},
                {"sign_projector_all", c.sign_all},
                {"odd_fixed_zero_all", c.odd_fixed_zero_all},
                {"implication", c.implication}};
    return {report, c.sign_all && c.odd_fixed_zero_all && c.implication ? 0 : 1};
  }
  const RealizedObject r = io::read_realized(doc);
  const auto t = check_t5_conditions(r);
  json report{{"i", t.i},
              {"ii", t.ii},
              {"iii", t.iii},
              {"iv", t.iv},
              {"v", t.v},
              {"ord_at_one", t.ord_z},
              {"hom_dim", t.hom_dim},
              {"fixed_dim", t.fixed_dim},
              {"semisimple_at_one", t.semisimple_at_one},
              {"sign_projector", projector(t.projector)},
              {"implications",
               {{"equivalence", t.equivalence}, {"i_iv_implies_v", t.i_iv_implies_v}, {"v_implies_iv", t.v_implies_iv}}}};
  const bool all = t.i && t.ii && t.iii && t.iv && t.v;
  return {report, all && t.implications_hold() ? 0 : 1};
}

std::vector<long> integer_list(const std::string& text, const std::string& flag) {
  std::vector<long> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

Outcome abelian_cmd(std::uint64_t q, const std::string& curve, const std::string& weil, unsigned n_max) {
  if (curve.empty() == weil.empty()) throw UsageError("give exactly one of --curve and --weil");
  std::optional<EllipticCurve> e;
  WeilDatum w;
  json report;
  try {
    if (!curve.empty()) {
      const auto a = integer_list(curve, "--curve");
      if (a.size() != 5) throw UsageError("--curve needs a1,a2,a3,a4,a6");
      e = EllipticCurve{q, {a[0], a[1], a[2], a[3], a[4]}};
      w = elliptic_point_count_oracle(*e);
      report["points"] = count_points(*e, 1);
    } else {
      const auto c = integer_list(weil, "--weil");
      if (c.size() % 2 == 0) throw UsageError("--weil needs 2g + 1 coefficients");
      Vector coeffs;
      for (long x : c) coeffs.emplace_back(x);
      w = {Integer(static_cast<unsigned long>(q)), static_cast<unsigned>(c.size() / 2), Polynomial(coeffs)};
    }
  } catch (const HasseViolation& err) {
    return {{{"hasse", false}, {"reason", err.what()}}, 1};
  } catch (const SingularCurve& err) {
    throw UsageError(err.what());
  } catch (const UnsupportedField& err) {
    throw UsageError(err.what());
  }
  MotiveDatum m;
  try {
    m = from_weil(w);
  } catch (const NotWeil& err) {
    throw UsageError(err.what());
  }
  report["q"] = q;
  report["g"] = m.g;
  report["weil"] = io::write(w.p1);
  json comps = json::array();
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    const auto& c = m.components[i];
    comps.push_back({{"i", i}, {"p", io::write(c.p)}, {"chi", c.chi}, {"mu", c.mu}});
  }
  report["components"] = comps;
  report["zeta"] = io::write(variety_zeta(m));

  int code = 0;
  if (w.g >= 1 && is_irreducible(w.p1)) {
    const AnalyzedObject h1 = analyze(object_datum_of_h1(w));
    report["h1"] = {{"mu", multiplicity_entries(h1.multiplicity)},
                    {"euler_characteristic", io::write(euler_characteristic(h1.object))},
                    {"integral", check_integral_type(h1.multiplicity).integral}};
    if (w.g == 1) {
      const auto full = elliptic_motive_object(w);
      const auto fe = functional_equation_check(analyze(full.object), full.frobenius);
      report["functional_equation"] = {{"holds", fe.holds}, {"euler_characteristic", io::write(fe.chi)}, {"det", io::write(fe.det)}};
      if (!fe.holds) code = 1;
    }
  } else {
    report["h1"] = nullptr;
  }
  if (e) {
    json counts{{"nmax", n_max}};
    try {
      const auto r = verify_counts(m, *e, n_max);
      json predicted = json::array(), counted = json::array();
      for (const auto& x : r.predicted) predicted.push_back(x.get_str());
      for (const auto& x : r.counted) counted.push_back(x.get_str());
      counts["predicted"] = predicted;
      counts["counted"] = counted;
      counts["verified"] = true;
    } catch (const CountMismatch& err) {
      counts["verified"] = false;
      counts["reason"] = err.what();
      code = 1;
    } catch (const UnsupportedField& err) {
      throw UsageError(std::string("--nmax: ") + err.what());
    }
    report["counts"] = counts;
  }
  return {report, code};
}

Outcome selftest_cmd(const std::string& manifest_path, const std::string& golden_dir) {
  std::ifstream f(manifest_path);
  if (!f) throw UsageError("cannot read manifest '" + manifest_path + "'");
  std::ostringstream text;
  text << f.rdbuf();
  const json manifest = io::parse(text.str());
  if (!manifest.is_array()) throw io::SchemaError("", "manifest must be an array");
  const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
  json results = json::array();
  int failed = 0;
  for (const auto& entry : manifest) {
    std::vector<std::string> args{entry.at("command").get<std::string>()};
    if (entry.contains("input")) args.push_back((base / entry["input"].get<std::string>()).string());
    if (entry.contains("args")) {
      for (const auto& a : entry["args"]) args.push_back(a.get<std::string>());
    }
    std::istringstream no_input;
    std::ostringstream out;
    const int code = run(args, no_input, out);
    const int expected = entry.at("exit").get<int>();
    const std::string name = entry.at("name").get<std::string>();
    json result{{"name", name}, {"exit", code}, {"expected_exit", expected}};
    bool ok = code == expected;
    if (!golden_dir.empty()) {
      std::ifstream g(std::filesystem::path(golden_dir) / (name + ".json"), std::ios::binary);
      std::ostringstream golden;
      golden << g.rdbuf();
      const bool same = g && golden.str() == out.str();
      result["golden"] = same;
      ok = ok && same;
    }
    result["ok"] = ok;
    failed += ok ? 0 : 1;
    results.push_back(result);
  }
  return {{{"fixtures", results}, {"passed", results.size() - static_cast<std::size_t>(failed)}, {"failed", failed}},
          failed == 0 ? 0 : 1};
}

void emit(std::ostream& out, const json& report) { out << report.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  CLI::App app{"Exact multiplicities, zeta functions and Tate conditions", "rigid"};
  app.require_subcommand(1);
  std::string input = "-", element, curve, weil, manifest = std::string(RIGID_FIXTURE_DIR) + "/manifest.json", golden;
  std::uint64_t seed = 0, q = 0;
  std::size_t precision = 12;
  unsigned bound = 2, kimura_bound = 16, n_max = 4;

  auto* dec = app.add_subcommand("decompose", "Wedderburn decomposition of an algebra");
  auto* mult = app.add_subcommand("mult", "multiplicities of an object");
  auto* zeta = app.add_subcommand("zeta", "zeta function of an endomorphism");
  auto* funceq = app.add_subcommand("funceq", "functional equation of an automorphism");
  auto* tate = app.add_subcommand("tate-check", "Tate conditions on category data");
  auto* homology = app.add_subcommand("homology-check", "conditions on a realized object or family");
  auto* abelian = app.add_subcommand("abelian", "motive of an elliptic curve or Weil polynomial");
  auto* selftest = app.add_subcommand("selftest", "run the fixture corpus");
  for (auto* sub : {dec, mult, zeta, funceq, tate, homology}) sub->add_option("input", input, "JSON file, - for stdin");
  for (auto* sub : {dec, mult, zeta, funceq}) sub->add_option("--seed", seed, "primitive element seed");
  for (auto* sub : {zeta, funceq}) sub->add_option("--element", element, "endomorphism coordinates, comma separated");
  zeta->add_option("--precision", precision, "series coefficients compared");
  tate->add_option("--bound", bound, "multiplicity bound for (ii) and (iv)");
  tate->add_option("--kimura-bound", kimura_bound, "largest exterior or symmetric power tried");
  abelian->add_option("--q", q, "field size")->required();
  abelian->add_option("--curve", curve, "a1,a2,a3,a4,a6");
  abelian->add_option("--weil", weil, "c0,...,c2g, lowest degree first");
  abelian->add_option("--nmax", n_max, "extension degrees counted");
  selftest->add_option("--manifest", manifest, "fixture manifest");
  selftest->add_option("--golden", golden, "directory of expected outputs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(out, {{"error", "usage"}, {"message", e.what()}});
    return 2;
  }

  try {
    Outcome o;
    const auto doc = [&] { return io::parse(read_input(input, in)); };
    if (dec->parsed()) {
      o = decompose_cmd(doc(), seed);
    } else if (mult->parsed()) {
      o = mult_cmd(doc(), seed);
    } else if (zeta->parsed()) {
      o = zeta_cmd(doc(), element, precision, seed);
    } else if (funceq->parsed()) {
      o = funceq_cmd(doc(), element, seed);
    } else if (tate->parsed()) {
      o = tate_cmd(doc(), bound, kimura_bound);
    } else if (homology->parsed()) {
      o = homology_cmd(doc());
    } else if (abelian->parsed()) {
      o = abelian_cmd(q, curve, weil, n_max);
    } else {
      o = selftest_cmd(manifest, golden);
    }
    emit(out, o.report);
    return o.code;
  } catch (const io::SchemaError& e) {
    emit(out, {{"error", "schema"}, {"pointer", e.pointer()}, {"message", e.what()}});
    return 2;
  } catch (const UsageError& e) {
    emit(out, {{"error", "usage"}, {"message", e.what()}});
    return 2;
  } catch (const Error& e) {
    emit(out, {{"error", "check"}, {"message", e.what()}});
    return 1;
  } catch (const json::exception& e) {
    emit(out, {{"error", "schema"}, {"pointer", ""}, {"message", e.what()}});
    return 2;
  }
}

}  // namespace rigid::cli
