#include "lielab/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lielab {

void set_thread_count(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int configure_threads_from_env() {
  if (const char* v = std::getenv("LIELAB_THREADS")) {
    try {
      const int n = std::stoi(v);
      if (n > 0) set_thread_count(n);
    } catch (const std::exception&) {
      // ignored: a malformed value leaves the OpenMP default in place
    }
  }
  return thread_count();
}

}  // namespace lielab
