#pragma once

#include <cstddef>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace cprep {

// threads == 1 forces the serial reference path; threads == 0 uses all cores.
inline int resolve_threads(int threads) {
#if defined(_OPENMP)
    if (threads <= 0) return omp_get_max_threads();
    return threads;
#else
    (void)threads;
    return 1;
#endif
}

// Stable-order parallel map over indices [0, n). fn must be pure per index;
// results are written into a pre-sized vector so output order never depends
// on scheduling. threads == 1 runs the plain serial loop.
template <typename Result, typename Fn>
std::vector<Result> map_indexed(std::size_t n, Fn&& fn, int threads) {
    std::vector<Result> out(n);
    int t = resolve_threads(threads);
    if (t <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16) num_threads(t)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
#endif
    return out;
}

} // namespace cprep
