#pragma once

#include <cstddef>

#ifdef ICFB_HAVE_OPENMP
#include <omp.h>
#endif

namespace icfb {

inline int default_jobs() {
#ifdef ICFB_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Runs fn(i) for i in [0, n). jobs <= 1 takes the serial reference loop, kept
// as the baseline the parallel path is tested against; otherwise iterations
// are spread over an OpenMP team. fn must only write to per-index slots so
// results are identical and merge order is immaterial.
template <class Fn>
void for_each_index(std::size_t n, int jobs, Fn&& fn) {
#ifdef ICFB_HAVE_OPENMP
    if (jobs > 1) {
#pragma omp parallel for schedule(static) num_threads(jobs)
        for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace icfb
