#ifndef PROLATE_PARALLEL_HPP
#define PROLATE_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace prolate {

inline int default_workers() {
    if (const char* env = std::getenv("PROLATE_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for i in [0, count) on up to `workers` threads. Tasks must be
// pure; callers assemble results by index, so output ordering never depends
// on the worker count.
template <typename Fn>
void parallel_for(long count, int workers, Fn&& fn) {
    if (count <= 0) return;
    if (workers < 1) workers = 1;
    if (workers == 1 || count == 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    auto worker = [&] {
        for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    int n = static_cast<int>(std::min<long>(workers, count));
    pool.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace prolate

#endif
