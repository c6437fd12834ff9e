#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace eea {

/// Number of OpenMP threads to use for `workers`; 0 means the runtime default.
/// Inside an active parallel region the answer is always 1.
inline int resolve_workers(int workers) noexcept
{
#if defined(_OPENMP)
    if (omp_in_parallel()) { return 1; }
    return workers > 0 ? workers : omp_get_max_threads();
#else
    (void)workers;
    return 1;
#endif
}

/// Runs body(i) for i in [0, n) on up to `workers` threads. body must only
/// write to slots owned by index i. If any call throws, the exception of the
/// lowest failing index is rethrown after the loop, so failures do not
/// depend on the schedule.
template <typename Body>
void parallel_for(std::size_t n, int workers, Body&& body)
{
    std::vector<std::exception_ptr> errors(n);
    const int threads = resolve_workers(workers);
    const auto count = static_cast<long long>(n);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1 && n > 1)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }

    for (auto& e : errors) {
        if (e) { std::rethrow_exception(e); }
    }
}

} // namespace eea
