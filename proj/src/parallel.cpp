#include "qaoa/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace qaoa {

namespace {

std::atomic<int> g_max_threads{1};
constexpr std::size_t kChunk = 1 << 14;

void run_chunks(std::size_t chunks,
                const std::function<void(std::size_t)>& chunk_fn) {
    const int workers =
        static_cast<int>(std::min<std::size_t>(max_threads(), chunks));
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) chunk_fn(c);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t c = w; c < chunks; c += workers) chunk_fn(c);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

void set_max_threads(int n) { g_max_threads.store(std::max(1, n)); }
int max_threads() { return g_max_threads.load(); }

namespace detail {

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    run_chunks(chunks, [&](std::size_t c) {
        fn(c * kChunk, std::min(n, (c + 1) * kChunk));
    });
}

double parallel_sum(std::size_t n,
                    const std::function<double(std::size_t, std::size_t)>& fn) {
    if (n == 0) return 0.0;
    // Partials are always produced per fixed-size chunk and combined in
    // chunk order, so the result does not depend on the worker count.
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(chunks, 0.0);
    run_chunks(chunks, [&](std::size_t c) {
        partial[c] = fn(c * kChunk, std::min(n, (c + 1) * kChunk));
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

}  // namespace detail
}  // namespace qaoa
