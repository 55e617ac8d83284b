#pragma once

namespace m0delta {

// Runtime switch between the OpenMP kernels and their serial reference
// implementations. Defaults to parallel when the library was built with
// OpenMP. All library operations are pure, so the switch only affects
// scheduling, never results.
void set_parallel(bool enabled);
bool parallel_enabled();

// Worker count for the parallel kernels; ignored in a build without OpenMP.
void set_thread_count(int threads);
int thread_count();

}  // namespace m0delta
