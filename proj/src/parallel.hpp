#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include "mjack/exec.hpp"

namespace mjack::detail {

/// Calls body(i) for i in [0, count), either in order or under an OpenMP
/// dynamic schedule. The first exception thrown by any iteration is rethrown.
template <typename Body>
void run_indexed(std::size_t count, Exec exec, Body body) {
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < total; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace mjack::detail
