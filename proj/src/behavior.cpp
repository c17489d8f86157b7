// SPDX-License-Identifier: Apache-2.0
#include "sfts/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <vector>

#include "sfts/numeric.hpp"

namespace sfts {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Max gap tested against the other gaps: mean + 3*stdev of the gaps with one
// instance of the maximum removed. Testing against a spread that includes the
// maximum itself can never fire for short flows (the max z-score of k samples
// is bounded by (k-1)/sqrt(k)).
double significant_spaces(const std::vector<double>& dt) {
    if (dt.size() < 3)
        return kNaN; // n < 4 packets
    const auto max_it = std::max_element(dt.begin(), dt.end());
    const double mx = *max_it;
    double sum = 0.0;
    for (double g : dt)
        sum += g;
    sum -= mx;
    const double k = static_cast<double>(dt.size() - 1);
    const double mean_rest = sum / k;
    double ss = 0.0;
    for (auto it = dt.begin(); it != dt.end(); ++it) {
        if (it == max_it)
            continue;
        ss += (*it - mean_rest) * (*it - mean_rest);
    }
    const double sd_rest = std::sqrt(ss / k);
    return mx > mean_rest + 3.0 * sd_rest ? 1.0 : 0.0;
}

// A transient is >= 3 packets inside some one-second window whose mean value
// exceeds overall mean + 2*stdev. Two-pointer sweep, window [t_i, t_i + 1).
double transients(const Sfts& s) {
    const double dn = static_cast<double>(s.n);
    double mean = 0.0;
    for (uint32_t v : s.values)
        mean += v;
    mean /= dn;
    double var = 0.0;
    for (uint32_t v : s.values)
        var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / dn);
    if (sd == 0.0)
        return kNaN;
    const double threshold = mean + 2.0 * sd;

    size_t end = 0;
    double win_sum = 0.0;
    for (size_t i = 0; i < s.n; ++i) {
        while (end < s.n && s.times[end] < s.times[i] + 1.0) {
            win_sum += s.values[end];
            ++end;
        }
        const size_t count = end - i;
        if (count >= 3 && win_sum / static_cast<double>(count) > threshold)
            return 1.0;
        win_sum -= s.values[i];
    }
    return 0.0;
}

} // namespace

PeriodicityResult detect_periodicity(const Sfts& s, const PeriodicityConfig& cfg) {
    PeriodicityResult r{};
    if (s.n < 5)
        return r;

    std::unordered_map<uint32_t, std::vector<double>> occurrences;
    for (size_t i = 0; i < s.n; ++i)
        occurrences[s.values[i]].push_back(s.times[i]);

    uint64_t best_count = 0;
    uint32_t best_len = 0;
    double best_period = 0.0;
    for (const auto& [len, times] : occurrences) {
        if (times.size() < cfg.min_occurrences)
            continue;
        std::vector<double> gaps(times.size() - 1);
        for (size_t i = 0; i + 1 < times.size(); ++i)
            gaps[i] = times[i + 1] - times[i];
        const double m = mean_of(gaps);
        if (m <= 0.0)
            continue;
        const double sd = population_stdev(gaps, m);
        if (sd / m >= cfg.cv_threshold)
            continue;
        const bool better = times.size() > best_count ||
                            (times.size() == best_count && len < best_len);
        if (better) {
            best_count = times.size();
            best_len = len;
            std::sort(gaps.begin(), gaps.end());
            best_period = quantile_sorted(std::span<const double>{gaps}, 0.5);
        }
    }
    if (best_count > 0) {
        r.period_seconds = best_period;
        r.packet_length = best_len;
    }
    return r;
}

BehaviorResult compute_behavior(const Sfts& s, const DerivedSequences& d,
                                const PeriodicityConfig& cfg) {
    BehaviorResult out{};
    BehaviorFeatures& f = out.features;

    f.significant_spaces = significant_spaces(d.time_diffs);

    if (s.n < 2) {
        f.switching_ratio = kNaN;
    } else {
        size_t changes = 0;
        for (size_t i = 0; i + 1 < s.n; ++i)
            if (s.values[i + 1] != s.values[i])
                ++changes;
        f.switching_ratio = static_cast<double>(changes) / static_cast<double>(s.n - 1);
    }

    f.transients = transients(s);

    // one-second buckets aligned to the first packet
    {
        const uint64_t bucket_count = static_cast<uint64_t>(std::floor(d.duration)) + 1;
        std::unordered_map<uint64_t, uint64_t> bytes_per_bucket;
        for (size_t i = 0; i < s.n; ++i) {
            const uint64_t b = static_cast<uint64_t>(std::floor(d.rel_times[i]));
            bytes_per_bucket[b] += s.values[i];
        }
        uint64_t biggest = 0;
        for (const auto& [bucket, bytes] : bytes_per_bucket)
            biggest = std::max(biggest, bytes);
        const uint64_t empty = bucket_count - bytes_per_bucket.size();
        f.count_of_zeros =
            100.0 * static_cast<double>(empty) / static_cast<double>(bucket_count);
        f.biggest_interval = static_cast<double>(biggest);
    }

    {
        size_t fwd = 0;
        for (Direction dir : s.directions)
            if (dir == Direction::Forward)
                ++fwd;
        f.directions = 100.0 * static_cast<double>(fwd) / static_cast<double>(s.n);
    }

    const PeriodicityResult pr = detect_periodicity(s, cfg);
    f.periodicity = pr.period_seconds;
    out.periodic_length = pr.packet_length;
    return out;
}

} // namespace sfts
