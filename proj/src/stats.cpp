// SPDX-License-Identifier: Apache-2.0
#include "sfts/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sfts/numeric.hpp"

namespace sfts {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double safe_div(double num, double den) {
    return den == 0.0 ? kNaN : num / den;
}

} // namespace

StatisticalFeatures compute_statistical(std::span<const uint32_t> values) {
    if (values.empty())
        throw std::invalid_argument("compute_statistical: empty sequence");

    const size_t n = values.size();
    const double dn = static_cast<double>(n);

    // All reductions run over the sorted copy, so results do not depend on
    // the input permutation even at the last bit.
    std::vector<uint32_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::span<const uint32_t> sv{sorted};

    StatisticalFeatures f{};

    double sum = 0.0, sum_sq = 0.0;
    for (uint32_t v : sorted) {
        sum += v;
        sum_sq += static_cast<double>(v) * v;
    }
    f.mean = sum / dn;
    f.root_mean_square = std::sqrt(sum_sq / dn);

    f.min = static_cast<double>(sorted.front());
    f.max = static_cast<double>(sorted.back());
    f.min_minus_max = f.min - f.max;
    f.q1 = quantile_sorted(sv, 0.25);
    f.median = quantile_sorted(sv, 0.5);
    f.q3 = quantile_sorted(sv, 0.75);

    double m2 = 0.0, m3 = 0.0, m4 = 0.0, abs_dev = 0.0;
    size_t above = 0, below = 0;
    for (uint32_t v : sorted) {
        const double d = static_cast<double>(v) - f.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
        abs_dev += std::fabs(d);
        if (static_cast<double>(v) > f.mean)
            ++above;
        else if (static_cast<double>(v) < f.mean)
            ++below;
    }
    m2 /= dn;
    m3 /= dn;
    m4 /= dn;

    f.variance = m2;
    f.stdev = std::sqrt(m2);
    f.average_dispersion = abs_dev / dn;
    f.percent_above_mean = 100.0 * static_cast<double>(above) / dn;
    f.percent_below_mean = 100.0 * static_cast<double>(below) / dn;
    f.percent_deviation = safe_div(f.average_dispersion, f.mean) * 100.0;
    f.coefficient_of_variation = safe_div(f.stdev, f.mean);
    f.burstiness = safe_div(f.stdev - f.mean, f.stdev + f.mean);

    // mode: most frequent value, ties broken by the smallest (ascending scan)
    {
        uint32_t best_val = sorted[0];
        size_t best_count = 0, run = 0;
        for (size_t i = 0; i < n; ++i) {
            run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
            if (run > best_count) {
                best_count = run;
                best_val = sorted[i];
            }
        }
        f.mode = static_cast<double>(best_val);
    }

    // Shannon entropy (bits) over the empirical distribution of distinct values
    {
        double h = 0.0;
        size_t distinct = 0;
        size_t i = 0;
        while (i < n) {
            size_t j = i;
            while (j < n && sorted[j] == sorted[i])
                ++j;
            const double p = static_cast<double>(j - i) / dn;
            h -= p * std::log2(p);
            ++distinct;
            i = j;
        }
        f.entropy = std::max(h, 0.0);
        f.scaled_entropy = distinct > 1
                               ? f.entropy / std::log2(static_cast<double>(distinct))
                               : kNaN;
    }

    // skewness family
    f.skew_fisher_mu3 = m3;
    f.skew_fp_g1 = m2 == 0.0 ? kNaN : m3 / std::pow(m2, 1.5);
    f.skew_fp_g1_adj =
        (n <= 2 || m2 == 0.0)
            ? kNaN
            : f.skew_fp_g1 * std::sqrt(dn * (dn - 1.0)) / (dn - 2.0);
    f.skew_pearson_sk1 = safe_div(f.mean - f.mode, f.stdev);
    f.skew_pearson_sk2 = safe_div(3.0 * (f.mean - f.median), f.stdev);
    f.skew_galton = safe_div(f.q1 + f.q3 - 2.0 * f.median, f.q3 - f.q1);
    f.kurtosis = m2 == 0.0 ? kNaN : m4 / (m2 * m2) - 3.0;

    return f;
}

} // namespace sfts
