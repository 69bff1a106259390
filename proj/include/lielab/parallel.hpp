#pragma once

namespace lielab {

// Applies LIELAB_THREADS (a positive integer) as the OpenMP thread cap.
// Returns the number of threads parallel regions will use.
int configure_threads_from_env();
void set_thread_count(int n);
int thread_count();

}  // namespace lielab
