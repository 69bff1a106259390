// Parallel kernels against their serial references. LIELAB_THREADS caps the thread count.
#include <benchmark/benchmark.h>

#include "lielab/catalog.hpp"
#include "lielab/cochain.hpp"
#include "lielab/linalg.hpp"
#include "lielab/parallel.hpp"
#include "lielab/roots.hpp"

using namespace lielab;

namespace {

const LieAlgebra& algebra_for(int which) {
  static const LieAlgebra g724 = catalog_algebra("g7_2_4");
  static const LieAlgebra gl3 = gl_n(3);
  static const LieAlgebra f4 = catalog_algebra("F4_plus");
  return which == 0 ? g724 : which == 1 ? gl3 : f4;
}

const char* algebra_label(int which) { return which == 0 ? "g7_2_4" : which == 1 ? "gl_3" : "F4_plus"; }

std::vector<SparseVector> table_of(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<SparseVector> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = g.structure(a, b);
  return t;
}

// Adjoint d in degree 2 for the small algebras, degree 1 for F4+.
int degree_for(int which) { return which == 2 ? 1 : 2; }

void BM_Assembly(benchmark::State& st, Assembly mode) {
  const auto& g = algebra_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ce_coboundary(g, Coefficients::Adjoint, degree_for(st.range(0)), mode));
  st.SetLabel(algebra_label(st.range(0)));
}

void BM_Rank(benchmark::State& st, bool parallel) {
  const auto& g = algebra_for(st.range(0));
  const auto d = ce_coboundary(g, Coefficients::Adjoint, degree_for(st.range(0))).matrix;
  for (auto _ : st) benchmark::DoNotOptimize(parallel ? rank(d) : rank_serial(d));
  st.SetLabel(algebra_label(st.range(0)));
}

void BM_Jacobi(benchmark::State& st, bool parallel) {
  const auto& g = algebra_for(st.range(0));
  const auto t = table_of(g);
  for (auto _ : st)
    benchmark::DoNotOptimize(parallel ? find_jacobi_failure(g.dim(), t) : find_jacobi_failure_serial(g.dim(), t));
  st.SetLabel(algebra_label(st.range(0)));
}

void BM_PropertyP(benchmark::State& st, bool parallel) {
  const auto rs = positive_roots('E', static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(parallel ? property_P(rs) : property_P_serial(rs));
  st.SetLabel(rs.label());
}

}  // namespace

BENCHMARK_CAPTURE(BM_Assembly, parallel, Assembly::Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Assembly, serial, Assembly::Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Rank, parallel, true)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Rank, serial, false)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Jacobi, parallel, true)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Jacobi, serial, false)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PropertyP, parallel, true)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PropertyP, serial, false)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::AddCustomContext("threads", std::to_string(thread_count()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
