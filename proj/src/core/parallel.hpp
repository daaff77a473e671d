#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <vector>

namespace bias_forge {

/// Applies fn to every index in [0, n) with at most `width` calls in flight
/// and returns the results in index order. The first exception (in index
/// order) is rethrown after its batch completes.
template <typename Fn>
auto parallel_map(std::size_t n, std::size_t width, Fn fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out;
    out.reserve(n);
    width = std::max<std::size_t>(width, 1);
    if (width == 1) {
        for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
        return out;
    }
    for (std::size_t begin = 0; begin < n; begin += width) {
        const std::size_t end = std::min(n, begin + width);
        std::vector<std::future<R>> batch;
        batch.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i) batch.push_back(std::async(std::launch::async, fn, i));
        for (auto& f : batch) f.wait();
        for (auto& f : batch) out.push_back(f.get());
    }
    return out;
}

}  // namespace bias_forge
