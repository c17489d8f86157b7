// SPDX-License-Identifier: Apache-2.0
#include "sfts/features.hpp"

#include <cmath>
#include <limits>

#include "sfts/numeric.hpp"
#include "sfts/schema.hpp"
#include "sfts/series.hpp"

namespace sfts {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

FrequencyFeatures no_spectrum() {
    return {kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN,
            kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
}

double burstiness_of_gaps(const DerivedSequences& d) {
    if (d.time_diffs.empty())
        return kNaN;
    const double m = mean_of(d.time_diffs);
    const double sd = population_stdev(d.time_diffs, m);
    return (sd + m) == 0.0 ? kNaN : (sd - m) / (sd + m);
}

} // namespace

FeatureVector compute_features(const FlowRecord& flow, const FeatureConfig& cfg) {
    const Sfts s = build_sfts(flow);
    const DerivedSequences d = derive_sequences(s);

    FeatureVector fv{};
    fv.id.src_addr = flow.key.addr_a;
    fv.id.dst_addr = flow.key.addr_b;
    fv.id.src_port = flow.key.port_a;
    fv.id.dst_port = flow.key.port_b;
    fv.id.protocol = flow.key.protocol;
    fv.id.first_ts = flow.first_ts;

    fv.stat = compute_statistical(s.values);
    if (cfg.burstiness_on_gaps)
        fv.stat.burstiness = burstiness_of_gaps(d);
    fv.time = compute_time(d);
    fv.dist = compute_distribution(s, d, cfg.distribution);

    if (s.n >= 2 && d.duration > 0.0) {
        const FrequencyGrid grid = frequency_grid(d, s.n, cfg.oversample);
        const Periodogram pg = lomb_scargle(s, d, grid);
        fv.freq = compute_frequency_features(pg, cfg.rolloff_threshold);
    } else {
        fv.freq = no_spectrum();
    }

    const BehaviorResult br = compute_behavior(s, d, cfg.periodicity);
    fv.behavior = br.features;
    fv.periodic_length = br.periodic_length;
    return fv;
}

FeatureVector sanitize(FeatureVector fv) {
    const auto columns = feature_columns();
    const auto values = feature_values(fv);
    for (size_t i = 0; i < kFeatureCount; ++i) {
        if (std::isnan(*values[i]))
            *values[i] = nan_replacement(columns[i].family);
    }
    return fv;
}

ClassicCounters classic_counters(const FlowRecord& flow) {
    ClassicCounters c;
    c.duration = flow.last_ts - flow.first_ts;
    c.packets_fwd = flow.pkt_count_fwd;
    c.bytes_fwd = flow.byte_count_fwd;
    c.packets_rev = flow.pkt_count_rev;
    c.bytes_rev = flow.byte_count_rev;
    return c;
}

ReducedVector reduce(const FeatureVector& fv, const ClassicCounters& classic) {
    ReducedVector r{};
    r.id = fv.id;
    r.spectral_kurtosis = fv.freq.spectral_kurtosis;
    r.periodicity = fv.behavior.periodicity;
    r.q1 = fv.stat.q1;
    r.benford = fv.dist.benford;
    r.spectral_energy = fv.freq.spectral_energy;
    r.dt_median = fv.time.dt_median;
    r.min = fv.stat.min;
    r.q3 = fv.stat.q3;
    r.min_minus_max = fv.stat.min_minus_max;
    r.directions = fv.behavior.directions;
    r.classic = classic;
    return r;
}

ReducedVector reduce(const FeatureVector& fv, const FlowRecord& flow) {
    return reduce(fv, classic_counters(flow));
}

} // namespace sfts
