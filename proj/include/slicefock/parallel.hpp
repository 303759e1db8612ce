#pragma once

#include <cstddef>
#include <functional>

namespace slicefock {

/// Worker count: SLICE_FOCK_THREADS when set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Callers write
/// results into per-index slots and reduce afterwards in index order, which
/// keeps results independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace slicefock
