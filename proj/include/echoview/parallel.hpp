#pragma once

#include <cstdint>

namespace echoview {

// Process-wide worker count for data-parallel loops. Results are
// thread-count invariant: parallel_for only ever partitions loops whose
// iterations write disjoint outputs, and every reduction happens inside
// a single iteration in fixed order.
int max_threads();
void set_max_threads(int n);
int hardware_threads();

namespace detail {
void parallel_for_impl(std::int64_t n, void* ctx, void (*body)(void*, std::int64_t));
}

template <typename F>
void parallel_for(std::int64_t n, F&& f) {
    detail::parallel_for_impl(n, &f, [](void* ctx, std::int64_t i) {
        (*static_cast<F*>(ctx))(i);
    });
}

}  // namespace echoview
