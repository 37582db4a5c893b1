#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace amdesign {

/// Process-wide worker count used by the enumeration and counting kernels.
/// Results never depend on it; only wall time does.
void set_worker_count(unsigned workers);
unsigned worker_count();

/// Splits [0, total) into at most worker_count() contiguous chunks and runs
/// `body(chunk_index, begin, end)` on each. Returns the number of chunks, so
/// callers can size per-chunk accumulators before the call via chunk_count().
std::size_t chunk_count(std::uint64_t total);
void parallel_chunks(std::uint64_t total,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body);

}  // namespace amdesign
