#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace cosets {

/// Deterministic parallel map-reduce over [0, count). The index space is
/// cut into fixed chunks whose boundaries depend only on `count`, workers
/// fill one result slot per chunk, and the caller folds the slots in
/// chunk order — so the result is bit-identical for every thread count.
///
/// `fn(begin, end) -> R` computes one chunk.
template <class R, class Fn>
std::vector<R> chunked_map(std::size_t count, int threads, Fn fn) {
    if (threads < 1) threads = 1;
    const std::size_t chunk = std::max<std::size_t>(1, std::min<std::size_t>(4096, count / 64 + 1));
    const std::size_t nchunks = count == 0 ? 0 : (count + chunk - 1) / chunk;
    std::vector<R> results(nchunks);
    if (nchunks == 0) return results;

    if (threads == 1 || nchunks == 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            results[c] = fn(c * chunk, std::min(count, (c + 1) * chunk));
        return results;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            results[c] = fn(c * chunk, std::min(count, (c + 1) * chunk));
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min<std::size_t>(threads, nchunks);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace cosets
