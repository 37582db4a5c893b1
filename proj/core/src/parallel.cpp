#include "amdesign/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace amdesign {

namespace {
std::atomic<unsigned> g_workers{1};
constexpr std::uint64_t kMinChunk = 1024;
}  // namespace

void set_worker_count(unsigned workers) { g_workers.store(std::max(1u, workers)); }

unsigned worker_count() { return g_workers.load(); }

std::size_t chunk_count(std::uint64_t total) {
    if (total == 0) return 0;
    std::uint64_t by_size = (total + kMinChunk - 1) / kMinChunk;
    return static_cast<std::size_t>(std::min<std::uint64_t>(worker_count(), by_size));
}

void parallel_chunks(std::uint64_t total,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body) {
    const std::size_t chunks = chunk_count(total);
    if (chunks == 0) return;
    const std::uint64_t step = (total + chunks - 1) / chunks;
    if (chunks == 1) {
        body(0, 0, total);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = std::min(total, c * step);
        const std::uint64_t end = std::min(total, begin + step);
        pool.emplace_back([&body, c, begin, end] { body(c, begin, end); });
    }
}

}  // namespace amdesign
