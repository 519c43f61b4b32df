/**
 * OpenMP plumbing. Thread count is omp_get_max_threads() capped by the
 * LVMB_THREADS environment variable; parallel_for degrades to a plain
 * loop when OpenMP is absent or one thread is requested. Exceptions
 * thrown inside the loop body are captured and rethrown after the
 * region, first index wins.
 */

#ifndef LVMB_PARALLEL_HPP
#define LVMB_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lvmb {

int max_threads();

template <class F>
void parallel_for(std::size_t count, F&& body) {
#ifdef _OPENMP
    const int threads = max_threads();
    if (threads > 1 && count > 1) {
        std::exception_ptr err;
        std::mutex err_mutex;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#endif
    for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace lvmb

#endif  // LVMB_PARALLEL_HPP
