#include "lielab/catalog.hpp"

#include <functional>
#include <map>

#include "lielab/catalog_data.hpp"
#include "lielab/cochain.hpp"
#include "lielab/errors.hpp"
#include "lielab/koszul.hpp"
#include "lielab/lie_io.hpp"
#include "lielab/roots.hpp"

namespace lielab {

using json = nlohmann::ordered_json;

namespace {

const json& expected_file() {
  static const json data = [] {
    const auto text = embedded_catalog_file("expected.json");
    if (!text) throw UnknownName("expected.json is not embedded");
    return json::parse(*text);
  }();
  return data;
}

Rational json_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  return Rational(v.get<long>());
}

std::vector<std::tuple<int, int, Rational>> json_form(const json& terms) {
  std::vector<std::tuple<int, int, Rational>> out;
  for (const auto& t : terms) out.emplace_back(t[0].get<int>(), t[1].get<int>(), json_rational(t[2]));
  return out;
}

std::vector<std::pair<std::vector<int>, Rational>> json_alt(const json& terms) {
  std::vector<std::pair<std::vector<int>, Rational>> out;
  for (const auto& t : terms) out.emplace_back(t[0].get<std::vector<int>>(), json_rational(t[1]));
  return out;
}

bool parse_heisenberg_name(const std::string& name, int& n) {
  const std::string prefix = "heisenberg_";
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return false;
  const std::string digits = name.substr(prefix.size());
  if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4) return false;
  n = std::stoi(digits);
  return n >= 1;
}

LieAlgebra build_algebra(const std::string& name, const json& desc) {
  if (desc.contains("file")) {
    const auto file = desc["file"].get<std::string>();
    const auto text = embedded_catalog_file(file);
    if (!text) throw UnknownName("catalog file " + file + " is not embedded");
    return parse_lie(*text).renamed(name);
  }
  const auto gen = desc.value("generator", std::string());
  if (gen == "product") {
    std::optional<LieAlgebra> acc;
    for (const auto& f : desc["factors"]) {
      auto g = catalog_algebra(f.get<std::string>());
      acc = acc ? direct_product(*acc, g) : g;
    }
    return acc->renamed(name);
  }
  if (gen == "heisenberg") return heisenberg(desc["N"].get<int>()).renamed(name);
  if (gen == "abelian") return abelian(desc["n"].get<int>()).renamed(name);
  if (gen == "gl") return gl_n(desc["n"].get<int>()).renamed(name);
  if (gen == "sl") return sl_n(desc["n"].get<int>()).renamed(name);
  if (gen == "free2step") return free_two_step(desc["generators"].get<int>()).renamed(name);
  throw UnknownName("catalog entry " + name + " has no structure source");
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : expected_file()["entries"].items()) names.push_back(k);
  return names;
}

CatalogEntry catalog_get(const std::string& name) {
  const auto& entries = expected_file()["entries"];
  CatalogEntry e;
  e.name = name;
  if (!entries.contains(name)) {
    int n = 0;
    if (!parse_heisenberg_name(name, n)) throw UnknownName("no catalog entry named '" + name + "'");
    e.algebra = heisenberg(n).renamed(name);
    return e;
  }
  const auto& desc = entries[name];
  e.note = desc.value("note", std::string());
  e.table2_key = desc.value("table2", std::string());
  if (desc.contains("expected")) e.expected = desc["expected"];
  if (desc.value("structure", std::string()) != "absent") e.algebra = build_algebra(name, desc);
  return e;
}

LieAlgebra catalog_algebra(const std::string& name) {
  auto e = catalog_get(name);
  if (!e.algebra) throw UnknownName("catalog entry '" + name + "' has no structure constants (structure:absent)");
  return std::move(*e.algebra);
}

LieAlgebra heisenberg(int n) {
  if (n < 1) throw UnsupportedType("heisenberg algebra needs N >= 1");
  RawBrackets raw;
  for (int i = 1; i <= n; ++i) raw[{i, n + i}] = {{2 * n + 1, Rational(1)}};
  return LieAlgebra::validate(raw, 2 * n + 1, "heisenberg_" + std::to_string(n));
}

namespace {

std::vector<RationalMatrix> sl_matrices(int n) {
  std::vector<RationalMatrix> mats;
  auto unit = [n](int i, int j) {
    auto m = zero_matrix(n, n);
    m[i][j] = 1;
    return m;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) mats.push_back(unit(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) mats.push_back(unit(i, j));
  for (int k = 0; k + 1 < n; ++k) {
    auto h = unit(k, k);
    h[k + 1][k + 1] = -1;
    mats.push_back(std::move(h));
  }
  return mats;
}

}  // namespace

LieAlgebra sl_n(int n) {
  if (n < 2) throw UnsupportedType("sl(n) needs n >= 2");
  return lie_algebra_from_matrices("sl_" + std::to_string(n), sl_matrices(n));
}

LieAlgebra gl_n(int n) {
  if (n < 1) throw UnsupportedType("gl(n) needs n >= 1");
  auto mats = n >= 2 ? sl_matrices(n) : std::vector<RationalMatrix>{};
  mats.push_back(identity_matrix(n));
  return lie_algebra_from_matrices("gl_" + std::to_string(n), mats);
}

LieAlgebra free_two_step(int k) {
  if (k < 2) throw UnsupportedType("free 2-step algebra needs at least 2 generators");
  RawBrackets raw;
  int next = k;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) raw[{i, j}] = {{++next, Rational(1)}};
  return LieAlgebra::validate(raw, next, "free2step_" + std::to_string(k) + "gen");
}

std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> rows;
  for (const auto& r : expected_file()["table1"]) {
    Table1Row row;
    row.label = r["label"].get<std::string>();
    row.entry = r["entry"].get<std::string>();
    row.inv_dim = r["inv_dim"].get<int>();
    row.quadratic = r["quadratic"].get<bool>();
    row.form = json_form(r["form"]);
    row.i_b = json_alt(r["i_b"]);
    row.primitive = json_alt(r["primitive"]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Table2Row> table2_rows() {
  std::vector<Table2Row> rows;
  for (const auto& r : expected_file()["table2"])
    rows.push_back({r["key"].get<std::string>(), r["label"].get<std::string>(), r["gcm"].get<IntMatrix>(),
                    r["column"].get<std::string>(), r["type_label"].get<std::string>()});
  return rows;
}

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

// Recomputes invariants of one algebra on demand; each expensive report is built once.
class Facts {
 public:
  explicit Facts(const LieAlgebra& g) : g_(g) {}

  const KoszulAnalysis& analysis() {
    if (!analysis_) analysis_ = koszul_analysis(g_);
    return *analysis_;
  }
  const DecompositionReport& decomposition(Coefficients c) {
    auto& slot = c == Coefficients::Trivial ? trivial_ : adjoint_;
    if (!slot) slot = hl2_decomposition(g_, c, analysis());
    return *slot;
  }

  json value(const std::string& key, const json& expected) {
    if (key == "dim") return g_.dim();
    if (key == "inv_dim") return analysis().invariant_dim;
    if (key == "p") return analysis().p;
    if (key == "c") return analysis().c;
    if (key == "ker_dim") return analysis().ker_basis.size();
    if (key == "im_dim") return analysis().image_basis.size();
    if (key == "i_null") return analysis().i_null;
    if (key == "i_exact") return analysis().i_exact;
    if (key == "quadratic") return analysis().quadratic;
    if (key == "uncoupling")
      return json{{"adjoint", decomposition(Coefficients::Adjoint).coupled == 0},
                  {"trivial", decomposition(Coefficients::Trivial).coupled == 0}};
    if (key == "invariant_forms") {
      json out = json::array();
      for (const auto& f : expected) {
        const auto b = form_from_terms(g_.dim(), json_form(f));
        out.push_back(is_invariant(g_, b) ? f : json("not invariant"));
      }
      return out;
    }
    if (key == "koszul_identity") {
      const auto b = form_from_terms(g_.dim(), json_form(expected["form"]));
      if (!is_invariant(g_, b)) return "form not invariant";
      json out = expected;
      if (koszul_map(g_, b) != alt_form(g_.dim(), json_alt(expected["i_b"]))) out["i_b"] = render_alt(koszul_map(g_, b));
      const auto d = exterior_derivative(g_, alt_form(g_.dim(), json_alt(expected["primitive"])));
      if (d != koszul_map(g_, b)) out["primitive"] = "d gives " + render_alt(d);
      return out;
    }
    for (auto [suffix, c] : {std::pair{"_trivial", Coefficients::Trivial}, std::pair{"_adjoint", Coefficients::Adjoint}}) {
      const std::string s = suffix;
      if (key.size() <= s.size() || key.compare(key.size() - s.size(), s.size(), s) != 0) continue;
      const std::string base = key.substr(0, key.size() - s.size());
      if (base == "h") {
        json out = json::array();
        for (std::size_t k = 0; k < expected.size(); ++k) out.push_back(cohomology(g_, c, static_cast<int>(k)).dimH);
        return out;
      }
      if (base == "b2") return cohomology(g_, c, 2).dimB;
      const auto& r = decomposition(c);
      if (base == "h2") return r.h2;
      if (base == "zl20") return r.zl20;
      if (base == "coupled") return r.coupled;
      if (base == "hl2") return r.hl2;
      if (base == "z2") return r.z2;
      if (base == "zl2") return r.zl2;
    }
    return "unknown expectation";
  }

 private:
  const LieAlgebra& g_;
  std::optional<KoszulAnalysis> analysis_;
  std::optional<DecompositionReport> trivial_, adjoint_;
};

}  // namespace

VerifyReport verify_entry(const CatalogEntry& e) {
  VerifyReport r;
  if (!e.algebra) {
    r.absent.push_back(e.name);
    return r;
  }
  Facts facts(*e.algebra);
  for (const auto& [key, expected] : e.expected.items()) {
    ExpectedCheck c{e.name, key, false, expected.dump(), ""};
    try {
      const json actual = facts.value(key, expected);
      c.actual = actual.dump();
      c.pass = actual == expected;
    } catch (const Error& err) {
      c.actual = std::string("error: ") + err.what();
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

VerifyReport verify_all() {
  const auto names = catalog_names();
  std::vector<VerifyReport> parts(names.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(names.size()); ++i) {
    try {
      parts[i] = verify_entry(catalog_get(names[i]));
    } catch (const Error& err) {
      parts[i].checks.push_back({names[i], "load", false, "loads", err.what()});
    }
  }
  VerifyReport all;
  for (auto& p : parts) {
    all.checks.insert(all.checks.end(), p.checks.begin(), p.checks.end());
    all.absent.insert(all.absent.end(), p.absent.begin(), p.absent.end());
  }
  return all;
}

Table1Result check_table1_row(const Table1Row& row) {
  Table1Result r;
  r.label = row.label;
  r.entry = row.entry;
  const auto e = catalog_get(row.entry);
  if (!e.algebra) return r;
  r.structure = true;
  const auto& g = *e.algebra;
  const auto a = koszul_analysis(g);
  r.inv_dim = a.invariant_dim;
  r.inv_dim_ok = a.invariant_dim == static_cast<std::size_t>(row.inv_dim);
  r.quadratic_ok = a.quadratic == row.quadratic;
  const auto b = form_from_terms(g.dim(), row.form);
  if (is_invariant(g, b)) {
    const auto ib = koszul_map(g, b);
    r.identity_ok = ib == alt_form(g.dim(), row.i_b);
    r.primitive_ok = exterior_derivative(g, alt_form(g.dim(), row.primitive)) == ib;
  }
  return r;
}

bool Table2Result::ok() const { return verdict && to_string(verdict->bucket) == row.column; }

Table2Result check_table2_row(const Table2Row& row) {
  Table2Result r;
  r.row = row;
  try {
    r.verdict = classify(row.gcm);
  } catch (const NotAGCM& e) {
    r.error = e.what();
  }
  return r;
}

json to_json(const VerifyReport& r) {
  json j;
  j["ok"] = r.ok();
  auto checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"entry", c.entry}, {"key", c.key}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
  j["checks"] = std::move(checks);
  j["structure_absent"] = r.absent;
  return j;
}

}  // namespace lielab
