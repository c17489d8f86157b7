// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

namespace sfts {

/// Quantile by linear interpolation between closest ranks: position = (n-1)*p.
/// Input must be sorted ascending.
template <typename T>
double quantile_sorted(std::span<const T> sorted, double p) {
    const size_t n = sorted.size();
    if (n == 0)
        return std::numeric_limits<double>::quiet_NaN();
    if (n == 1)
        return static_cast<double>(sorted[0]);
    const double pos = p * static_cast<double>(n - 1);
    const size_t lo = static_cast<size_t>(pos);
    const size_t hi = lo + 1 < n ? lo + 1 : n - 1;
    const double frac = pos - static_cast<double>(lo);
    return static_cast<double>(sorted[lo]) * (1.0 - frac) +
           static_cast<double>(sorted[hi]) * frac;
}

inline double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v)
        s += x;
    return v.empty() ? std::numeric_limits<double>::quiet_NaN()
                     : s / static_cast<double>(v.size());
}

/// Population standard deviation (divide by n).
inline double population_stdev(std::span<const double> v, double mean) {
    if (v.empty())
        return std::numeric_limits<double>::quiet_NaN();
    double s = 0.0;
    for (double x : v)
        s += (x - mean) * (x - mean);
    return std::sqrt(s / static_cast<double>(v.size()));
}

} // namespace sfts
