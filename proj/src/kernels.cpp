#include "syzex/kernels.hpp"

#include <exception>
#include <vector>

#ifdef SYZEX_HAVE_OPENMP
#include <omp.h>
#endif

namespace syzex {

void run_tasks(std::size_t n, const std::function<void(std::size_t)>& body, bool parallel)
{
    std::vector<std::exception_ptr> errors(n);
#ifdef SYZEX_HAVE_OPENMP
    if (parallel && n > 1) {
        const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
        for (long long t = 0; t < count; ++t) {
            try {
                body(static_cast<std::size_t>(t));
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        }
    } else
#endif
    {
        (void)parallel;
        for (std::size_t t = 0; t < n; ++t) {
            try {
                body(t);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

bool parallel_available()
{
#ifdef SYZEX_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

int worker_count()
{
#ifdef SYZEX_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace syzex
