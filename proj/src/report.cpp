#include "lielab/report.hpp"

#include <sstream>

#include "lielab/errors.hpp"
#include "lielab/lie_io.hpp"

namespace lielab {

namespace {

void guard(CochainKind kind, Coefficients c, int n, int k, std::size_t limit) {
  const auto cells = coboundary_cells(kind, c, n, k);
  if (cells > limit)
    throw SizeLimitExceeded(std::string(kind == CochainKind::CE ? "d" : "δ") + " in degree " + std::to_string(k) +
                            " with " + to_string(c) + " coefficients has " + std::to_string(cells) +
                            " cells, over the limit of " + std::to_string(limit) + " (raise --max-cells)");
}

CohomologyReport degree_report(const LieAlgebra& g, Coefficients c, int k, std::size_t limit) {
  if (k > g.dim()) {
    CohomologyReport r;
    r.degree = k;
    r.coefficients = c;
    return r;
  }
  if (k >= 1) guard(CochainKind::CE, c, g.dim(), k - 1, limit);
  guard(CochainKind::CE, c, g.dim(), k, limit);
  return cohomology(g, c, k);
}

CohomologyReport cohomology_from_json(const nlohmann::ordered_json& j) {
  CohomologyReport r;
  r.degree = j.at("degree").get<int>();
  r.coefficients = j.at("coefficients").get<std::string>() == "adjoint" ? Coefficients::Adjoint : Coefficients::Trivial;
  r.dimC = j.at("dimC").get<std::size_t>();
  r.dimZ = j.at("dimZ").get<std::size_t>();
  r.dimB = j.at("dimB").get<std::size_t>();
  r.dimH = j.at("dimH").get<std::size_t>();
  return r;
}

std::vector<std::string> strings(const nlohmann::ordered_json& j, const char* key) {
  return j.contains(key) ? j[key].get<std::vector<std::string>>() : std::vector<std::string>{};
}

}  // namespace

AnalysisReport analyze(const LieAlgebra& g, const AnalysisOptions& options) {
  if (options.degree_lo < 0 || options.degree_hi < options.degree_lo)
    throw DegreeOutOfRange("degree range " + std::to_string(options.degree_lo) + ".." +
                           std::to_string(options.degree_hi) + " is empty or negative");
  AnalysisReport r;
  r.name = g.name();
  r.hash = structure_hash(g);
  r.dim = g.dim();
  for (int k = options.degree_lo; k <= options.degree_hi; ++k) {
    r.trivial.push_back(degree_report(g, Coefficients::Trivial, k, options.max_cells));
    r.adjoint.push_back(degree_report(g, Coefficients::Adjoint, k, options.max_cells));
  }
  r.koszul = koszul_analysis(g);
  r.c = r.koszul.c;
  r.p = r.koszul.p;
  for (const auto& b : r.koszul.invariant_basis) r.invariant_forms.push_back(render_form(b));
  for (const auto& w : r.koszul.image_basis) r.koszul_image.push_back(render_alt(w));
  if (options.leibniz && g.dim() >= 1) {
    for (int k = 0; k <= std::min(2, g.dim()); ++k) guard(CochainKind::CE, Coefficients::Adjoint, g.dim(), k, options.max_cells);
    for (int k = 1; k <= 2; ++k) guard(CochainKind::Leibniz, Coefficients::Adjoint, g.dim(), k, options.max_cells);
    r.hl2_trivial = hl2_decomposition(g, Coefficients::Trivial, r.koszul);
    r.hl2_adjoint = hl2_decomposition(g, Coefficients::Adjoint, r.koszul);
    for (const auto& c : coupled_basis(g, Coefficients::Trivial, r.koszul)) r.coupled_trivial.push_back(render_cocycle(c));
    for (const auto& c : coupled_basis(g, Coefficients::Adjoint, r.koszul)) r.coupled_adjoint.push_back(render_cocycle(c));
  }
  return r;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["hash"] = r.hash;
  j["dim"] = r.dim;
  j["c"] = r.c;
  j["p"] = r.p;
  auto& coh = j["cohomology"];
  coh["trivial"] = nlohmann::ordered_json::array();
  coh["adjoint"] = nlohmann::ordered_json::array();
  for (const auto& x : r.trivial) coh["trivial"].push_back(to_json(x));
  for (const auto& x : r.adjoint) coh["adjoint"].push_back(to_json(x));
  j["koszul"] = to_json(r.koszul);
  j["invariant_forms"] = r.invariant_forms;
  j["koszul_image"] = r.koszul_image;
  if (r.hl2_trivial || r.hl2_adjoint) {
    auto& l = j["leibniz"];
    if (r.hl2_trivial) l["trivial"] = to_json(*r.hl2_trivial);
    if (r.hl2_adjoint) l["adjoint"] = to_json(*r.hl2_adjoint);
    l["coupled_trivial"] = r.coupled_trivial;
    l["coupled_adjoint"] = r.coupled_adjoint;
  }
  return j;
}

AnalysisReport analysis_from_json(const nlohmann::ordered_json& j) {
  AnalysisReport r;
  r.name = j.at("name").get<std::string>();
  r.hash = j.at("hash").get<std::string>();
  r.dim = j.at("dim").get<int>();
  r.c = j.at("c").get<int>();
  r.p = j.at("p").get<int>();
  for (const auto& x : j.at("cohomology").at("trivial")) r.trivial.push_back(cohomology_from_json(x));
  for (const auto& x : j.at("cohomology").at("adjoint")) r.adjoint.push_back(cohomology_from_json(x));
  r.koszul = koszul_analysis_from_json(j.at("koszul"));
  r.invariant_forms = strings(j, "invariant_forms");
  r.koszul_image = strings(j, "koszul_image");
  if (j.contains("leibniz")) {
    const auto& l = j["leibniz"];
    if (l.contains("trivial")) r.hl2_trivial = decomposition_from_json(l["trivial"]);
    if (l.contains("adjoint")) r.hl2_adjoint = decomposition_from_json(l["adjoint"]);
    r.coupled_trivial = strings(l, "coupled_trivial");
    r.coupled_adjoint = strings(l, "coupled_adjoint");
  }
  return r;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << (r.name.empty() ? "(unnamed)" : r.name) << "  dim " << r.dim << "  c " << r.c << "  p " << r.p << "  hash "
      << r.hash << "\n\n";
  out << "degree  dimC  dimZ  dimB  dimH   (trivial | adjoint)\n";
  for (std::size_t i = 0; i < r.trivial.size(); ++i) {
    const auto& t = r.trivial[i];
    const auto& a = r.adjoint[i];
    char line[160];
    std::snprintf(line, sizeof line, "%6d  %4zu  %4zu  %4zu  %4zu | %6zu  %4zu  %4zu  %4zu\n", t.degree, t.dimC,
                  t.dimZ, t.dimB, t.dimH, a.dimC, a.dimZ, a.dimB, a.dimH);
    out << line;
  }
  const auto& k = r.koszul;
  out << "\ninvariant forms: " << k.invariant_dim << "  ker I: " << k.ker_basis.size()
      << "  Im I: " << k.image_basis.size() << "\n";
  out << "I-null: " << (k.i_null ? "yes" : "no") << "  I-exact: " << (k.i_exact ? "yes" : "no")
      << "  quadratic: " << (k.quadratic ? "yes" : "no") << (k.quadratic_certified ? "" : " (uncertified)") << "\n";
  for (const auto& f : r.invariant_forms) out << "  B = " << f << "\n";
  for (const auto& f : r.koszul_image) out << "  I_B = " << f << "\n";
  auto block = [&](const char* label, const std::optional<DecompositionReport>& d, const std::vector<std::string>& cs) {
    if (!d) return;
    out << "\nHL² " << label << ": " << d->hl2 << " = H² " << d->h2 << " + ZL²₀ " << d->zl20 << " + coupled "
        << d->coupled << "  (Z² " << d->z2 << ", ZL² " << d->zl2 << ")\n";
    for (const auto& c : cs) out << "  coupled: " << c << "\n";
  };
  block("trivial", r.hl2_trivial, r.coupled_trivial);
  block("adjoint", r.hl2_adjoint, r.coupled_adjoint);
  return out.str();
}

}  // namespace lielab
