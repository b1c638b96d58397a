#include "echoview/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace echoview {

namespace {
std::atomic<int> g_max_threads{0};  // 0 = all hardware threads
}

int hardware_threads() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

int max_threads() {
    const int n = g_max_threads.load(std::memory_order_relaxed);
    return n <= 0 ? hardware_threads() : n;
}

void set_max_threads(int n) { g_max_threads.store(std::max(0, n), std::memory_order_relaxed); }

namespace detail {

void parallel_for_impl(std::int64_t n, void* ctx, void (*body)(void*, std::int64_t)) {
    if (n <= 0) return;
    const int threads = std::min<std::int64_t>(max_threads(), n);
    if (threads <= 1 || n == 1) {
        for (std::int64_t i = 0; i < n; ++i) body(ctx, i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(ctx, i);
#else
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const std::int64_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::int64_t lo = t * chunk;
        const std::int64_t hi = std::min<std::int64_t>(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([=] {
            for (std::int64_t i = lo; i < hi; ++i) body(ctx, i);
        });
    }
    for (auto& th : pool) th.join();
#endif
}

}  // namespace detail
}  // namespace echoview
