#include "m0delta/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace m0delta {

namespace {

std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};

}  // namespace

void set_parallel(bool enabled) { g_parallel.store(enabled, std::memory_order_relaxed); }

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }

void set_thread_count(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace m0delta
