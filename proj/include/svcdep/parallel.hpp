#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace svcdep {

enum class Execution;

// Runs body(i) for i in [0, n). Parallel execution uses a dynamic OpenMP
// schedule; the first exception thrown by any iteration is rethrown after
// the loop.
template <typename Body>
void for_each_index(std::size_t n, bool parallel, Body&& body) {
    if (!parallel) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex failureMutex;
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(failureMutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

// Scoped override of the OpenMP team size; n <= 0 leaves it untouched.
class ThreadCountGuard {
public:
    explicit ThreadCountGuard(int n) : previous_(omp_get_max_threads()), active_(n > 0) {
        if (active_) {
            omp_set_num_threads(n);
        }
    }
    ~ThreadCountGuard() {
        if (active_) {
            omp_set_num_threads(previous_);
        }
    }
    ThreadCountGuard(const ThreadCountGuard&) = delete;
    ThreadCountGuard& operator=(const ThreadCountGuard&) = delete;

private:
    int previous_;
    bool active_;
};

} // namespace svcdep
