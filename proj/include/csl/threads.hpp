#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace csl::par {

// Worker cap shared by all modules. Defaults to hardware concurrency,
// overridable by CSL_THREADS or the CLI --threads flag.
inline std::atomic<unsigned>& thread_budget() {
    static std::atomic<unsigned> budget = [] {
        unsigned n = std::thread::hardware_concurrency();
        if (n == 0) n = 1;
        if (const char* env = std::getenv("CSL_THREADS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 1 && v <= 1024) n = unsigned(v);
        }
        return n;
    }();
    return budget;
}

inline void set_thread_budget(unsigned n) { thread_budget().store(n ? n : 1); }

// Runs fn(block_index) for blocks 0..n_blocks-1 on up to thread_budget()
// workers. Block partitioning is fixed, so any per-block results can be
// combined in block order for a reduction that does not depend on the
// number of threads.
inline void for_blocks(std::size_t n_blocks, const std::function<void(std::size_t)>& fn) {
    unsigned workers = std::min<std::size_t>(thread_budget().load(), n_blocks);
    if (workers <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) fn(b);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    std::mutex err_mu;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t b = next.fetch_add(1);
                if (b >= n_blocks || failed.load()) return;
                try {
                    fn(b);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

// Deterministic ordered map-reduce over equal ranges of [0, n).
template <class R>
std::vector<R> map_blocks(std::size_t n, std::size_t block_size,
                          const std::function<R(std::size_t, std::size_t)>& fn) {
    std::size_t n_blocks = (n + block_size - 1) / block_size;
    std::vector<R> out(n_blocks);
    for_blocks(n_blocks, [&](std::size_t b) {
        std::size_t lo = b * block_size;
        std::size_t hi = std::min(n, lo + block_size);
        out[b] = fn(lo, hi);
    });
    return out;
}

}  // namespace csl::par
