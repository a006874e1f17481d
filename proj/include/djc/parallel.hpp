#ifndef DJC_PARALLEL_HPP
#define DJC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace djc {

/// Smallest i in [0, n) with pred(i), evaluated on `threads` workers.
/// Indices above the best hit found so far are skipped, so the answer is
/// the same as a sequential scan. `pred` must be safe to call concurrently.
template <class Pred>
std::optional<std::size_t> find_first(std::size_t n, Pred&& pred, unsigned threads = 1) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            if (pred(i)) {
                return i;
            }
        }
        return std::nullopt;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{n};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n || i >= best.load()) {
                return;
            }
            if (pred(i)) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(n));
    for (unsigned t = 0; t < count; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (best.load() == n) {
        return std::nullopt;
    }
    return best.load();
}

inline unsigned default_thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 2 : hw;
}

}  // namespace djc

#endif  // DJC_PARALLEL_HPP
