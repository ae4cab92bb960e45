#pragma once

// Deterministic data-parallel sweeps over integer grids.

#include "witt3/exact_arith.hpp"

#include <algorithm>
#include <atomic>
#include <string_view>
#include <thread>
#include <vector>

namespace witt3 {

struct Range {
    Index lo = 0;
    Index hi = -1;
    bool empty() const { return lo > hi; }
    Index size() const { return empty() ? 0 : hi - lo + 1; }
};

/// "LO..HI". Throws std::invalid_argument when malformed or empty.
Range parse_range(std::string_view text);

/// Evaluates fn(i) for i in [0, count) on up to `jobs` threads. Slot i of
/// the result always holds fn(i), so the output never depends on `jobs`.
template <class T, class Fn>
std::vector<T> parallel_indexed(std::size_t count, unsigned jobs, Fn&& fn) {
    std::vector<T> out(count);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    constexpr std::size_t chunk = 8;
    auto worker = [&] {
        for (;;) {
            std::size_t begin = next.fetch_add(chunk);
            if (begin >= count) return;
            std::size_t end = std::min(count, begin + chunk);
            for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return out;
}

/// All (k, l) in range x range, row-major (sorted by k, then l).
std::vector<std::pair<Index, Index>> grid(const Range& r);

}  // namespace witt3
