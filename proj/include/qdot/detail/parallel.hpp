#pragma once

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qdot::detail {

// Worker count: QDOT_THREADS caps it, 0/unset means hardware concurrency.
inline int worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("QDOT_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return static_cast<int>(n);
}

// Index-parallel loop; results must be written to preallocated slots so the
// output is independent of scheduling. The first worker exception is
// rethrown on the calling thread.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    const int workers = std::min(worker_count(), count > 0 ? count : 1);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::mutex error_mutex;
    std::exception_ptr error;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < count; i += workers) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace qdot::detail
