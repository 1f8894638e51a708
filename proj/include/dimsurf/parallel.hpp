#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace dimsurf {

/// Runs fn(0..n-1) on up to `threads` workers. Callers store results into
/// index-addressed slots, so the merged output does not depend on the
/// worker count.
template <typename Fn>
void parallel_for(int n, int threads, Fn&& fn) {
    if (threads > n) threads = n;
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace dimsurf
