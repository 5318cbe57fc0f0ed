#ifndef DS_PARALLEL_HPP
#define DS_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ds {

// Global worker count. 0 = use OpenMP default; 1 = forced serial.
// Initialized from DS_WORKERS if set.
int worker_count();
void set_worker_count(int w);

// Runs fn(i) for i in [0, count). Results must not depend on scheduling;
// callers keep any merging deterministic (indexed output slots).
template <typename F>
void parallel_for(std::size_t count, F&& fn) {
#ifdef _OPENMP
    int w = worker_count();
    if (w != 1) {
#pragma omp parallel for schedule(dynamic) num_threads(w > 0 ? w : omp_get_max_threads())
        for (long long i = 0; i < (long long)count; ++i) fn((std::size_t)i);
        return;
    }
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

// Serial reference loop, kept distinct so tests and benchmarks can compare
// against the parallel path.
template <typename F>
void serial_for(std::size_t count, F&& fn) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

} // namespace ds

#endif
