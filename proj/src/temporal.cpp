// SPDX-License-Identifier: Apache-2.0
#include "sfts/temporal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "sfts/numeric.hpp"

namespace sfts {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Relative difference bounded to [0,1] for same-sign inputs; 0 when equal.
double max_pairwise_reldiff(const std::array<double, 3>& v) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (v[i] == v[j])
                continue;
            r = std::max(r, std::fabs(v[i] - v[j]) /
                                std::max(std::fabs(v[i]), std::fabs(v[j])));
        }
    return r;
}

double stationarity_score(std::span<const uint32_t> x, const DistributionConfig& cfg) {
    const size_t n = x.size();
    if (n < 9)
        return kNaN;
    std::array<double, 3> means{}, vars{};
    for (int k = 0; k < 3; ++k) {
        const size_t lo = k * n / 3;
        const size_t hi = (k + 1) * n / 3;
        double m = 0.0;
        for (size_t i = lo; i < hi; ++i)
            m += x[i];
        m /= static_cast<double>(hi - lo);
        double v = 0.0;
        for (size_t i = lo; i < hi; ++i)
            v += (x[i] - m) * (x[i] - m);
        v /= static_cast<double>(hi - lo);
        means[k] = m;
        vars[k] = v;
    }
    const bool stable = max_pairwise_reldiff(means) <= cfg.stationarity_mean_tol &&
                        max_pairwise_reldiff(vars) <= cfg.stationarity_var_tol;
    return stable ? 1.0 : 0.0;
}

} // namespace

TimeFeatures compute_time(const DerivedSequences& d) {
    TimeFeatures f{};
    std::span<const double> rt{d.rel_times};

    double rt_sum = 0.0;
    for (double t : rt)
        rt_sum += t;
    f.rt_mean = rt_sum / static_cast<double>(rt.size());
    // rel_times are already sorted (times are non-decreasing)
    f.rt_q1 = quantile_sorted(rt, 0.25);
    f.rt_median = quantile_sorted(rt, 0.5);
    f.rt_q3 = quantile_sorted(rt, 0.75);
    f.duration = d.duration;

    if (d.time_diffs.empty()) {
        f.dt_mean = f.dt_median = f.dt_min = f.dt_max = kNaN;
        return f;
    }
    double dt_sum = 0.0, dt_min = d.time_diffs.front(), dt_max = d.time_diffs.front();
    for (double t : d.time_diffs) {
        dt_sum += t;
        dt_min = std::min(dt_min, t);
        dt_max = std::max(dt_max, t);
    }
    f.dt_mean = dt_sum / static_cast<double>(d.time_diffs.size());
    f.dt_min = dt_min;
    f.dt_max = dt_max;
    std::vector<double> sorted(d.time_diffs);
    std::sort(sorted.begin(), sorted.end());
    f.dt_median = quantile_sorted(std::span<const double>{sorted}, 0.5);
    return f;
}

double hurst_exponent(std::span<const uint32_t> values) {
    const size_t n = values.size();
    if (n < 16)
        return kNaN;

    std::vector<double> log_w, log_rs;
    std::vector<double> z; // cumulative deviations scratch
    for (size_t w = 8; 2 * w <= n; w *= 2) {
        const size_t windows = n / w;
        double rs_sum = 0.0;
        size_t usable = 0;
        for (size_t b = 0; b < windows; ++b) {
            const uint32_t* seg = values.data() + b * w;
            double m = 0.0;
            for (size_t i = 0; i < w; ++i)
                m += seg[i];
            m /= static_cast<double>(w);
            double cum = 0.0, zmin = 0.0, zmax = 0.0, ss = 0.0;
            bool first = true;
            for (size_t i = 0; i < w; ++i) {
                const double d = static_cast<double>(seg[i]) - m;
                ss += d * d;
                cum += d;
                if (first) {
                    zmin = zmax = cum;
                    first = false;
                } else {
                    zmin = std::min(zmin, cum);
                    zmax = std::max(zmax, cum);
                }
            }
            const double s = std::sqrt(ss / static_cast<double>(w));
            if (s > 0.0) {
                rs_sum += (zmax - zmin) / s;
                ++usable;
            }
        }
        if (usable > 0) {
            const double avg = rs_sum / static_cast<double>(usable);
            if (avg > 0.0) {
                log_w.push_back(std::log2(static_cast<double>(w)));
                log_rs.push_back(std::log2(avg));
            }
        }
    }
    if (log_w.size() < 2)
        return kNaN;

    // least-squares slope in log2 space
    const double k = static_cast<double>(log_w.size());
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < log_w.size(); ++i) {
        mx += log_w[i];
        my += log_rs[i];
    }
    mx /= k;
    my /= k;
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < log_w.size(); ++i) {
        num += (log_w[i] - mx) * (log_rs[i] - my);
        den += (log_w[i] - mx) * (log_w[i] - mx);
    }
    return den == 0.0 ? kNaN : num / den;
}

double benford_similarity_from_digit_probs(std::span<const double, 9> probs) {
    double tv = 0.0;
    for (int d = 1; d <= 9; ++d) {
        const double expected = std::log10(1.0 + 1.0 / d);
        tv += std::fabs(probs[d - 1] - expected);
    }
    return 1.0 - 0.5 * tv;
}

double benford_similarity(std::span<const uint32_t> values) {
    if (values.size() < 2)
        return kNaN;

    std::vector<uint32_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    // occurrence counts per distinct payload length
    std::vector<std::pair<uint64_t, uint32_t>> counts; // (count, value)
    size_t i = 0;
    while (i < sorted.size()) {
        size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        counts.emplace_back(j - i, sorted[i]);
        i = j;
    }
    // nine most frequent lengths; ties keep the smaller length
    std::sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second < b.second;
    });
    if (counts.size() > 9)
        counts.resize(9);

    std::array<double, 9> probs{};
    for (const auto& [count, value] : counts) {
        uint64_t lead = count;
        while (lead >= 10)
            lead /= 10;
        probs[lead - 1] += 1.0;
    }
    for (double& p : probs)
        p /= static_cast<double>(counts.size());
    return benford_similarity_from_digit_probs(probs);
}

DistributionFeatures compute_distribution(const Sfts& s, const DerivedSequences& d,
                                          const DistributionConfig& cfg) {
    DistributionFeatures f{};
    f.hurst = hurst_exponent(s.values);
    f.stationarity = stationarity_score(s.values, cfg);
    f.benford = benford_similarity(s.values);

    // Jarque-Bera mapped through the chi-squared(2) survival function
    {
        const double dn = static_cast<double>(s.n);
        double mean = 0.0;
        for (uint32_t v : s.values)
            mean += v;
        mean /= dn;
        double m2 = 0.0, m3 = 0.0, m4 = 0.0;
        for (uint32_t v : s.values) {
            const double dev = static_cast<double>(v) - mean;
            m2 += dev * dev;
            m3 += dev * dev * dev;
            m4 += dev * dev * dev * dev;
        }
        m2 /= dn;
        m3 /= dn;
        m4 /= dn;
        if (m2 == 0.0) {
            f.normal_dist = kNaN;
        } else {
            const double g1 = m3 / std::pow(m2, 1.5);
            const double ex_kurt = m4 / (m2 * m2) - 3.0;
            const double jb = dn / 6.0 * (g1 * g1 + ex_kurt * ex_kurt / 4.0);
            f.normal_dist = std::exp(-jb / 2.0);
        }
    }

    if (d.duration > 0.0) {
        double rt_sum = 0.0;
        for (double t : d.rel_times)
            rt_sum += t;
        f.count_distribution = rt_sum / static_cast<double>(s.n) / d.duration;

        double nz_sum = 0.0;
        size_t nz = 0;
        for (size_t i = 0; i < s.n; ++i) {
            if (s.values[i] > 0) {
                nz_sum += d.rel_times[i];
                ++nz;
            }
        }
        f.count_nonzero_distribution =
            nz > 0 ? nz_sum / static_cast<double>(nz) / d.duration : kNaN;
    } else {
        f.count_distribution = kNaN;
        f.count_nonzero_distribution = kNaN;
    }

    if (s.n >= 3) {
        const double m = mean_of(d.time_diffs);
        const double sd = population_stdev(d.time_diffs, m);
        f.time_distribution = (m + sd) == 0.0 ? kNaN : sd / (m + sd);
    } else {
        f.time_distribution = kNaN;
    }
    return f;
}

} // namespace sfts
