#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace qrabi {

inline constexpr double pi = 3.14159265358979323846;

/// Pairwise (cascade) summation. Order is fixed by the recursion, so results
/// are bit-stable no matter how the inputs were produced.
inline double pairwise_sum(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

inline std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(a);
        return out;
    }
    for (int i = 0; i < n; ++i)
        out.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
}

/// Values a, a+step, ..., up to b inclusive (with a half-step slack on b).
inline std::vector<double> range_values(double a, double b, double step) {
    std::vector<double> out;
    if (step <= 0.0) return out;
    const long long count = static_cast<long long>(std::floor((b - a) / step + 0.5 * 1e-9)) + 1;
    for (long long i = 0; i < count; ++i) {
        double x = a + step * static_cast<double>(i);
        if (x > b + 0.5 * step) break;
        out.push_back(x);
    }
    return out;
}

/// Run fn(i) for i in [0, n) over `threads` workers. Each index owns its own
/// output slot upstream, so scheduling cannot change results.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                         unsigned threads = 0) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

inline double sq(double x) { return x * x; }

} // namespace qrabi
