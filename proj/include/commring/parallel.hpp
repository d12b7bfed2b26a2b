#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace commring {

/// Applies fn to 0..count-1 on up to jobs threads. Results land in input
/// order, so output is independent of scheduling.
template <typename T>
std::vector<T> parallel_map(int count, int jobs,
                            const std::function<T(int)>& fn) {
    std::vector<T> out(count);
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int workers = std::min(jobs, count);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                out[i] = fn(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace commring
