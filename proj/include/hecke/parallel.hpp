#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hecke {

// Every parallel kernel in this library has a serial twin selected by this
// policy. The parallel paths write results into per-index slots (or merge
// partials in index order), so output never depends on the thread count.
enum class ExecPolicy { Serial, Parallel };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <typename Fn>
void parallel_for(std::size_t count, ExecPolicy policy, Fn&& body) {
#ifdef _OPENMP
    if (policy == ExecPolicy::Parallel && count > 1) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#endif
    (void)policy;
    for (std::size_t i = 0; i < count; ++i) body(i);
}

} // namespace hecke
