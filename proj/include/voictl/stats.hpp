// Small statistics helpers for Monte Carlo reductions.
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace voictl {

/// Sum by recursive halving. Independent of thread count and iteration
/// order, so batched estimates are reproducible for a fixed seed.
inline double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    if (n <= 16) {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;  // standard error of the mean
    std::size_t count = 0;
};

/// Sample mean and standard error from per-episode values.
inline MeanSe mean_se(std::span<const double> values) {
    MeanSe out;
    out.count = values.size();
    if (out.count == 0) return out;
    out.mean = pairwise_sum(values) / static_cast<double>(out.count);
    if (out.count < 2) return out;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - out.mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(out.count - 1);
    out.se = std::sqrt(var / static_cast<double>(out.count));
    return out;
}

/// Mean and standard error of elementwise differences a[i] - b[i]
/// (paired comparison under common random numbers).
inline MeanSe paired_diff(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("paired_diff: length mismatch");
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return mean_se(d);
}

}  // namespace voictl
