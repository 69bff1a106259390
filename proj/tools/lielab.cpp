// lielab: command-line front end. Run `lielab --help` for the command list.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lielab/catalog.hpp"
#include "lielab/errors.hpp"
#include "lielab/gcm.hpp"
#include "lielab/koszul.hpp"
#include "lielab/lie_io.hpp"
#include "lielab/parallel.hpp"
#include "lielab/report.hpp"
#include "lielab/roots.hpp"

using namespace lielab;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitJacobi = 3;
constexpr int kExitCrossCheck = 4;

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

LieAlgebra load(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) return catalog_algebra(source.substr(8));
  return read_lie_file(source);
}

void parse_degrees(const std::string& text, AnalysisOptions& o) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      o.degree_lo = o.degree_hi = std::stoi(text);
    } else {
      o.degree_lo = std::stoi(text.substr(0, dots));
      o.degree_hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw ParseError(0, "--degrees expects a..b, got '" + text + "'");
  }
}

// "F4", or "F" followed by "4".
std::pair<char, int> parse_type(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += a;
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw ParseError(0, "expected a root system type such as F4 or 'E 8', got '" + s + "'");
  try {
    std::size_t used = 0;
    const int rank = std::stoi(s.substr(1), &used);
    if (used + 1 != s.size()) throw std::invalid_argument(s);
    return {static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))), rank};
  } catch (const std::exception&) {
    throw ParseError(0, "bad rank in '" + s + "'");
  }
}

const char* yes(bool b) { return b ? "yes" : "no"; }

int cmd_analyze(const std::string& source, const AnalysisOptions& options, bool json) {
  const auto report = analyze(load(source), options);
  if (json)
    print_json(to_json(report));
  else
    std::cout << render_text(report);
  return 0;
}

int cmd_table1(bool json) {
  Json rows = Json::array();
  int bad = 0;
  for (const auto& row : table1_rows()) {
    const auto r = check_table1_row(row);
    if (!r.ok()) ++bad;
    Json j;
    j["label"] = row.label;
    j["entry"] = row.entry;
    j["structure"] = r.structure;
    j["inv_dim_expected"] = row.inv_dim;
    j["quadratic_expected"] = row.quadratic;
    if (r.structure) {
      const int n = catalog_algebra(row.entry).dim();
      j["inv_dim"] = r.inv_dim;
      j["identity"] = render_alt(alt_form(n, row.i_b)) + " = d(" + render_alt(alt_form(n, row.primitive)) + ")";
      j["inv_dim_ok"] = r.inv_dim_ok;
      j["identity_ok"] = r.identity_ok;
      j["primitive_ok"] = r.primitive_ok;
      j["quadratic_ok"] = r.quadratic_ok;
    }
    j["ok"] = r.ok();
    rows.push_back(j);
  }
  if (json) {
    print_json({{"rows", rows}, {"mismatches", bad}});
  } else {
    std::printf("%-22s %-10s %-8s %s\n", "algebra", "inv dim", "status", "I_B = d(primitive)");
    for (const auto& j : rows) {
      const bool s = j["structure"].get<bool>();
      std::string inv = std::to_string(j["inv_dim_expected"].get<int>());
      if (s) inv = std::to_string(j["inv_dim"].get<std::size_t>()) + "/" + inv;
      std::printf("%-22s %-10s %-8s %s\n", j["label"].get<std::string>().c_str(), inv.c_str(),
                  !s ? "absent" : j["ok"].get<bool>() ? "ok" : "MISMATCH",
                  s ? j["identity"].get<std::string>().c_str() : "");
    }
    std::printf("%d mismatching rows\n", bad);
  }
  return bad ? kExitMismatch : 0;
}

int cmd_table2(bool json) {
  const auto rows = table2_rows();
  std::vector<Table2Result> results(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < rows.size(); ++i) results[i] = check_table2_row(rows[i]);
  int bad = 0;
  Json out = Json::array();
  for (const auto& r : results) {
    if (!r.ok()) ++bad;
    Json j;
    j["label"] = r.row.label;
    j["gcm"] = format_gcm(r.row.gcm);
    j["column"] = r.row.column;
    j["type_label"] = r.row.type_label;
    if (r.verdict) {
      j["bucket"] = to_string(r.verdict->bucket);
      j["name"] = r.verdict->name();
    } else {
      j["error"] = r.error;
    }
    j["ok"] = r.ok();
    out.push_back(j);
  }
  if (json) {
    print_json({{"rows", out}, {"mismatches", bad}});
  } else {
    for (const auto& j : out)
      std::printf("%-14s %-28s %-26s %-26s %s\n", j["label"].get<std::string>().c_str(),
                  j["gcm"].get<std::string>().c_str(), j["column"].get<std::string>().c_str(),
                  j.contains("bucket") ? j["bucket"].get<std::string>().c_str() : "NotAGCM",
                  j["ok"].get<bool>() ? j.value("name", "").c_str() : "MISMATCH");
    std::printf("%zu rows, %d mismatching\n", out.size(), bad);
  }
  return bad ? kExitMismatch : 0;
}

int cmd_heisenberg(int n_max, bool json) {
  if (n_max < 1) throw UnsupportedType("heisenberg needs N_max >= 1");
  std::vector<Json> rows(n_max);
  std::vector<int> ok(n_max, 0);
  std::vector<std::string> errors(n_max);
#pragma omp parallel for schedule(dynamic)
  for (int n = 1; n <= n_max; ++n) try {
    const auto h = heisenberg(n);
    const auto a = koszul_analysis(h);
    const auto d = hl2_decomposition(h, Coefficients::Adjoint, a);
    const auto co = cohomology(h, Coefficients::Adjoint, 2);
    const std::size_t b2 = n * (2 * n + 1);
    const std::size_t hl2 = n == 1 ? 8 : n * (8 * n * n + 6 * n + 1) / 3;
    Json j;
    j["N"] = n;
    j["dim"] = h.dim();
    j["b2"] = co.dimB;
    j["b2_formula"] = b2;
    j["h2"] = co.dimH;
    if (n >= 2) j["h2_formula"] = std::size_t(2 * n * (4 * n * n - 1) / 3);
    j["zl20"] = d.zl20;
    j["coupled"] = d.coupled;
    j["hl2"] = d.hl2;
    j["hl2_formula"] = hl2;
    j["i_null"] = a.i_null;
    ok[n - 1] = co.dimB == b2 && d.hl2 == hl2 && a.i_null && (n == 1 || co.dimH == j["h2_formula"].get<std::size_t>());
    j["ok"] = ok[n - 1] != 0;
    rows[n - 1] = j;
  } catch (const std::exception& e) {
    errors[n - 1] = e.what();
  }
  for (int n = 1; n <= n_max; ++n)
    if (!errors[n - 1].empty()) throw CrossCheckMismatch("N=" + std::to_string(n) + ": " + errors[n - 1]);
  int bad = 0;
  for (int v : ok) bad += v ? 0 : 1;
  if (json) {
    Json arr = Json::array();
    for (auto& r : rows) arr.push_back(r);
    print_json({{"rows", arr}, {"mismatches", bad}});
  } else {
    std::printf("  N  dim    B²  N(2N+1)    H²   ZL²₀  coupled    HL²  closed form  I-null\n");
    for (const auto& j : rows)
      std::printf("%3d  %3d  %4zu  %7zu  %4zu  %5zu  %7zu  %5zu  %11zu  %s%s\n", j["N"].get<int>(), j["dim"].get<int>(),
                  j["b2"].get<std::size_t>(), j["b2_formula"].get<std::size_t>(), j["h2"].get<std::size_t>(),
                  j["zl20"].get<std::size_t>(), j["coupled"].get<std::size_t>(), j["hl2"].get<std::size_t>(),
                  j["hl2_formula"].get<std::size_t>(), yes(j["i_null"].get<bool>()),
                  j["ok"].get<bool>() ? "" : "  MISMATCH");
  }
  return bad ? kExitMismatch : 0;
}

int cmd_roots(const std::vector<std::string>& type, bool json) {
  const auto [t, l] = parse_type(type);
  const auto rs = positive_roots(t, l);
  if (json) {
    Json roots = Json::array();
    for (const auto& r : rs.positive_roots) roots.push_back(render_root(rs, r));
    print_json({{"type", rs.label()}, {"count", rs.positive_roots.size()}, {"positive_roots", roots}});
  } else {
    std::printf("%s: %zu positive roots\n", rs.label().c_str(), rs.positive_roots.size());
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
      std::printf("%4zu  %s\n", i, render_root(rs, rs.positive_roots[i]).c_str());
  }
  return 0;
}

int cmd_check_p(const std::vector<std::string>& type, bool serial, bool json) {
  const auto [t, l] = parse_type(type);
  const auto rs = positive_roots(t, l);
  const auto w = serial ? property_P_serial(rs) : property_P(rs);
  Json j;
  j["type"] = rs.label();
  j["property_P"] = w ? "FAIL" : "PASS";
  if (w)
    j["witness"] = {render_root(rs, rs.positive_roots[w->alpha]), render_root(rs, rs.positive_roots[w->beta]),
                    render_root(rs, rs.positive_roots[w->gamma])};
  if (t != 'E') {
    const auto m = nilradical(t, l);
    const auto b = bracket_property_P(m.algebra);
    if (b) j["bracket_witness"] = {m.labels[b->alpha - 1], m.labels[b->beta - 1], m.labels[b->gamma - 1]};
  }
  if (json) {
    print_json(j);
  } else {
    std::printf("%s: property P %s\n", rs.label().c_str(), w ? "FAIL" : "PASS");
    if (w) std::printf("  roots %s\n", j["witness"].dump().c_str());
    if (j.contains("bracket_witness"))
      std::printf("  root vectors with pairwise nonzero brackets: %s\n", j["bracket_witness"].dump().c_str());
  }
  return 0;
}

int cmd_nilradical(const std::vector<std::string>& type, bool emit_lie, bool json) {
  const auto [t, l] = parse_type(type);
  const auto m = nilradical(t, l);
  if (emit_lie) {
    std::cout << "# basis: ";
    for (std::size_t i = 0; i < m.labels.size(); ++i) std::cout << (i ? ", " : "") << "x" << i + 1 << "=" << m.labels[i];
    std::cout << "\n" << write_lie(m.algebra);
    return 0;
  }
  const auto a = koszul_analysis(m.algebra);
  if (json) {
    print_json({{"name", m.algebra.name()}, {"dim", m.algebra.dim()}, {"labels", m.labels}, {"koszul", to_json(a)}});
  } else {
    std::printf("%s: dim %d, %zu brackets, I-null %s\n", m.algebra.name().c_str(), m.algebra.dim(),
                m.algebra.bracket_count(), yes(a.i_null));
    for (std::size_t i = 0; i < m.labels.size(); ++i) std::printf("  x%zu = %s\n", i + 1, m.labels[i].c_str());
  }
  return 0;
}

int cmd_gcm_classify(const std::string& inline_text, const std::string& file, bool text) {
  std::string src = inline_text;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw ParseError(0, "cannot open " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    src = ss.str();
  }
  if (src.empty()) throw ParseError(0, "gcm classify needs --inline or --file");
  const auto v = classify(parse_gcm(src));
  if (text) {
    std::printf("%s%s%s\n", to_string(v.bucket).c_str(), v.name().empty() ? "" : "  ", v.name().c_str());
    if (v.decomposable())
      for (const auto& c : v.components)
        std::printf("  %s: %s %s\n", format_gcm(c.matrix).c_str(), to_string(c.bucket).c_str(), c.name.c_str());
  } else {
    print_json(to_json(v));
  }
  return 0;
}

int cmd_catalog_list(bool json) {
  Json arr = Json::array();
  for (const auto& n : catalog_names()) {
    const auto e = catalog_get(n);
    arr.push_back({{"name", n},
                   {"dim", e.algebra ? Json(e.algebra->dim()) : Json(nullptr)},
                   {"structure", e.algebra ? "present" : "absent"},
                   {"note", e.note}});
  }
  if (json) {
    print_json(arr);
  } else {
    for (const auto& j : arr)
      std::printf("%-22s %4s  %s\n", j["name"].get<std::string>().c_str(),
                  j["dim"].is_null() ? "-" : std::to_string(j["dim"].get<int>()).c_str(),
                  j["note"].get<std::string>().c_str());
  }
  return 0;
}

int cmd_catalog_verify(bool json) {
  const auto r = verify_all();
  if (json) {
    print_json(to_json(r));
  } else {
    std::size_t bad = 0;
    for (const auto& c : r.checks)
      if (!c.pass) {
        ++bad;
        std::printf("MISMATCH %s.%s: expected %s, got %s\n", c.entry.c_str(), c.key.c_str(), c.expected.c_str(),
                    c.actual.c_str());
      }
    std::printf("%zu checks, %zu mismatching, %zu entries without structure constants\n", r.checks.size(), bad,
                r.absent.size());
  }
  return r.ok() ? 0 : kExitMismatch;
}

int cmd_catalog_show(const std::string& name) {
  std::cout << write_lie(catalog_algebra(name));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();
  CLI::App app{"Exact Lie and Leibniz cohomology, Koszul maps, root systems and GCM types"};
  app.require_subcommand(1);
  bool json = false;

  AnalysisOptions options;
  std::string source, degrees;
  double max_cells = 1e7;
  auto* analyze_cmd = app.add_subcommand("analyze", "Cohomology and Koszul analysis of one algebra");
  analyze_cmd->add_option("input", source, "A .lie file or catalog:<name>")->required();
  analyze_cmd->add_option("--degrees", degrees, "CE degree range a..b (default 0..2)");
  analyze_cmd->add_flag("--leibniz", options.leibniz, "Add the HL² decomposition and coupled cocycles");
  analyze_cmd->add_option("--max-cells", max_cells, "Largest coboundary matrix (rows*cols) allowed");
  analyze_cmd->add_flag("--json", json);

  auto* t1 = app.add_subcommand("table1", "Recompute the non-I-null table");
  t1->add_flag("--json", json);
  auto* t2 = app.add_subcommand("table2", "Classify every stored GCM and diff against its column");
  t2->add_flag("--json", json);

  int n_max = 4;
  auto* heis = app.add_subcommand("heisenberg", "Check the Heisenberg closed forms for N = 1..N_max");
  heis->add_option("N_max", n_max)->check(CLI::PositiveNumber);
  heis->add_flag("--json", json);

  std::vector<std::string> type;
  auto* roots = app.add_subcommand("roots", "List positive roots");
  roots->add_option("type", type, "e.g. E8 or 'E 8'")->required()->expected(1, 2);
  roots->add_flag("--json", json);

  bool serial = false;
  auto* check_p = app.add_subcommand("check-p", "Test property P on a root system");
  check_p->add_option("type", type)->required()->expected(1, 2);
  check_p->add_flag("--serial", serial, "Use the single-threaded reference scan");
  check_p->add_flag("--json", json);

  bool emit_lie = false;
  auto* nil = app.add_subcommand("nilradical", "Nilradical of the Borel subalgebra");
  nil->add_option("type", type)->required()->expected(1, 2);
  nil->add_flag("--emit-lie", emit_lie, "Print the structure constants as a .lie file");
  nil->add_flag("--json", json);

  std::string gcm_inline, gcm_file;
  bool gcm_text = false;
  auto* gcm = app.add_subcommand("gcm", "Generalized Cartan matrices");
  gcm->require_subcommand(1);
  auto* classify_cmd = gcm->add_subcommand("classify", "Finite / affine / hyperbolic / non-hyperbolic verdict");
  auto* in_opt = classify_cmd->add_option("--inline", gcm_inline, "Rows separated by ';', e.g. \"2 -2; -2 2\"");
  classify_cmd->add_option("--file", gcm_file, "File with one row per line or ';'-separated rows")->excludes(in_opt);
  classify_cmd->add_flag("--text", gcm_text, "One-line summary instead of JSON");

  std::string show_name;
  auto* cat = app.add_subcommand("catalog", "Stored algebras and their expected values");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list");
  cat_list->add_flag("--json", json);
  auto* cat_verify = cat->add_subcommand("verify", "Recompute every stored expectation");
  cat_verify->add_flag("--json", json);
  auto* cat_show = cat->add_subcommand("show", "Print an entry as a .lie file");
  cat_show->add_option("name", show_name)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      if (!degrees.empty()) parse_degrees(degrees, options);
      if (max_cells < 1) throw ParseError(0, "--max-cells must be positive");
      options.max_cells = static_cast<std::size_t>(max_cells);
      return cmd_analyze(source, options, json);
    }
    if (*t1) return cmd_table1(json);
    if (*t2) return cmd_table2(json);
    if (*heis) return cmd_heisenberg(n_max, json);
    if (*roots) return cmd_roots(type, json);
    if (*check_p) return cmd_check_p(type, serial, json);
    if (*nil) return cmd_nilradical(type, emit_lie, json);
    if (*classify_cmd) return cmd_gcm_classify(gcm_inline, gcm_file, gcm_text);
    if (*cat_list) return cmd_catalog_list(json);
    if (*cat_verify) return cmd_catalog_verify(json);
    if (*cat_show) return cmd_catalog_show(show_name);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const JacobiViolation& e) {
    std::cerr << "Jacobi violation: " << e.what() << "\n";
    return kExitJacobi;
  } catch (const CrossCheckMismatch& e) {
    std::cerr << "cross-check mismatch: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
