#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wavedecay {

/// Runs body(i) for i in [begin, end) over hardware threads in contiguous
/// strided chunks. Falls back to a plain loop on single-core hosts. The first
/// exception thrown by any worker is rethrown on the caller's thread.
template <typename Body>
void parallel_for(std::ptrdiff_t begin, std::ptrdiff_t end, Body&& body)
{
    const std::ptrdiff_t count = end - begin;
    if (count <= 0)
        return;
    const auto hw = static_cast<std::ptrdiff_t>(std::max(1u, std::thread::hardware_concurrency()));
    const std::ptrdiff_t workers = std::min(hw, count);
    if (workers == 1) {
        for (std::ptrdiff_t i = begin; i < end; ++i)
            body(i);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::ptrdiff_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                // strided assignment balances the triangular workloads
                for (std::ptrdiff_t i = begin + w; i < end; i += workers)
                    body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace wavedecay
