#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lielab/algebra.hpp"
#include "lielab/cochain.hpp"
#include "lielab/koszul.hpp"

namespace lielab {

struct AnalysisOptions {
  int degree_lo = 0;
  int degree_hi = 2;
  bool leibniz = false;
  // Largest dense size (rows * cols) of any coboundary matrix the run may touch.
  std::size_t max_cells = 10'000'000;
};

struct AnalysisReport {
  std::string name;
  std::string hash;
  int dim = 0;
  int c = 0;
  int p = 0;
  std::vector<CohomologyReport> trivial;  // one per requested degree
  std::vector<CohomologyReport> adjoint;
  KoszulAnalysis koszul;
  std::vector<std::string> invariant_forms;  // rendered basis of (S²g*)^g
  std::vector<std::string> koszul_image;     // rendered basis of Im I
  std::optional<DecompositionReport> hl2_trivial, hl2_adjoint;
  std::vector<std::string> coupled_trivial, coupled_adjoint;
};

// Degrees above dim g report zero spaces. Throws SizeLimitExceeded before
// assembling any matrix larger than options.max_cells.
AnalysisReport analyze(const LieAlgebra& g, const AnalysisOptions& options = {});

nlohmann::ordered_json to_json(const AnalysisReport& r);
AnalysisReport analysis_from_json(const nlohmann::ordered_json& j);
std::string render_text(const AnalysisReport& r);

}  // namespace lielab
