#pragma once

#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace tcc {

// Thread budget for internal parallelism, bounded by the TCC_THREADS
// environment variable (default: hardware concurrency, capped at 8).
inline int thread_budget() {
    if (const char* env = std::getenv("TCC_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(hw > 8 ? 8 : hw);
}

// Apply fn to every index in [0, count); results land in a vector in index
// order, so the output is deterministic regardless of scheduling.
template <typename R, typename Fn>
std::vector<R> parallel_map_index(int count, Fn fn) {
    std::vector<R> out(static_cast<size_t>(count));
    int budget = thread_budget();
    if (budget <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) out[static_cast<size_t>(i)] = fn(i);
        return out;
    }
    std::vector<std::future<R>> futs;
    futs.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) futs.push_back(std::async(std::launch::async, fn, i));
    for (int i = 0; i < count; ++i) out[static_cast<size_t>(i)] = futs[static_cast<size_t>(i)].get();
    return out;
}

}  // namespace tcc
