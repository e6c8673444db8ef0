#ifndef CHUI_PARALLEL_HPP
#define CHUI_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace chui {

// Worker cap: explicit request > CHUI_LAB_THREADS > hardware concurrency.
inline unsigned thread_budget(unsigned requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CHUI_LAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Runs fn(i) for i in [0, n). Each index is handled exactly once; results
// must be written to disjoint slots so the reduction is schedule-independent.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, unsigned threads = 0) {
    const unsigned nt = std::min<std::size_t>(thread_budget(threads), n);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next.fetch_add(1); i < n && !failed.load();
                     i = next.fetch_add(1))
                    fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace chui

#endif
