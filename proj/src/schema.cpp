// SPDX-License-Identifier: Apache-2.0
#include "sfts/schema.hpp"

namespace sfts {

namespace {

// Export order: identity block, then families stat, time, dist, freq,
// behavior. Column names are family prefix + field name.
constexpr ColumnInfo kColumns[kFeatureCount] = {
    {"stat_mean", Family::Stat, "bytes"},
    {"stat_median", Family::Stat, "bytes"},
    {"stat_stdev", Family::Stat, "bytes"},
    {"stat_variance", Family::Stat, "bytes^2"},
    {"stat_burstiness", Family::Stat, "score"},
    {"stat_q1", Family::Stat, "bytes"},
    {"stat_q3", Family::Stat, "bytes"},
    {"stat_min", Family::Stat, "bytes"},
    {"stat_max", Family::Stat, "bytes"},
    {"stat_min_minus_max", Family::Stat, "bytes"},
    {"stat_mode", Family::Stat, "bytes"},
    {"stat_percent_deviation", Family::Stat, "percent"},
    {"stat_average_dispersion", Family::Stat, "bytes"},
    {"stat_root_mean_square", Family::Stat, "bytes"},
    {"stat_percent_above_mean", Family::Stat, "percent"},
    {"stat_percent_below_mean", Family::Stat, "percent"},
    {"stat_coefficient_of_variation", Family::Stat, "ratio"},
    {"stat_skew_fp_g1_adj", Family::Stat, "score"},
    {"stat_skew_fp_g1", Family::Stat, "score"},
    {"stat_skew_fisher_mu3", Family::Stat, "bytes^3"},
    {"stat_skew_pearson_sk1", Family::Stat, "score"},
    {"stat_skew_pearson_sk2", Family::Stat, "score"},
    {"stat_skew_galton", Family::Stat, "score"},
    {"stat_kurtosis", Family::Stat, "score"},
    {"stat_entropy", Family::Stat, "bits"},
    {"stat_scaled_entropy", Family::Stat, "ratio"},
    {"time_rt_mean", Family::Time, "seconds"},
    {"time_rt_median", Family::Time, "seconds"},
    {"time_rt_q1", Family::Time, "seconds"},
    {"time_rt_q3", Family::Time, "seconds"},
    {"time_dt_mean", Family::Time, "seconds"},
    {"time_dt_median", Family::Time, "seconds"},
    {"time_dt_min", Family::Time, "seconds"},
    {"time_dt_max", Family::Time, "seconds"},
    {"time_duration", Family::Time, "seconds"},
    {"dist_hurst", Family::Dist, "score"},
    {"dist_stationarity", Family::Dist, "flag"},
    {"dist_benford", Family::Dist, "score"},
    {"dist_normal_dist", Family::Dist, "score"},
    {"dist_count_distribution", Family::Dist, "score"},
    {"dist_count_nonzero_distribution", Family::Dist, "score"},
    {"dist_time_distribution", Family::Dist, "score"},
    {"freq_min_power", Family::Freq, "power"},
    {"freq_max_power", Family::Freq, "power"},
    {"freq_freq_min_power", Family::Freq, "Hz"},
    {"freq_freq_max_power", Family::Freq, "Hz"},
    {"freq_power_mode", Family::Freq, "power"},
    {"freq_power_mean", Family::Freq, "power"},
    {"freq_power_stdev", Family::Freq, "power"},
    {"freq_spectral_bandwidth", Family::Freq, "Hz"},
    {"freq_spectral_centroid", Family::Freq, "Hz"},
    {"freq_spectral_energy", Family::Freq, "power"},
    {"freq_spectral_entropy", Family::Freq, "bits"},
    {"freq_spectral_flatness", Family::Freq, "ratio"},
    {"freq_spectral_flux", Family::Freq, "score"},
    {"freq_spectral_kurtosis", Family::Freq, "score"},
    {"freq_spectral_periodicity", Family::Freq, "score"},
    {"freq_spectral_rolloff", Family::Freq, "Hz"},
    {"freq_spectral_spread", Family::Freq, "Hz"},
    {"freq_spectral_skewness", Family::Freq, "score"},
    {"freq_spectral_slope", Family::Freq, "power_per_Hz"},
    {"freq_spectral_zero_cross_rate", Family::Freq, "ratio"},
    {"behavior_significant_spaces", Family::Behavior, "flag"},
    {"behavior_switching_ratio", Family::Behavior, "ratio"},
    {"behavior_transients", Family::Behavior, "flag"},
    {"behavior_count_of_zeros", Family::Behavior, "percent"},
    {"behavior_biggest_interval", Family::Behavior, "bytes"},
    {"behavior_directions", Family::Behavior, "percent"},
    {"behavior_periodicity", Family::Behavior, "seconds"},
};

constexpr const char* kIdentityColumns[] = {
    "src_addr", "src_port", "dst_addr", "dst_port", "protocol", "first_ts",
};

constexpr const char* kReducedColumns[] = {
    "freq_spectral_kurtosis",
    "behavior_periodicity",
    "stat_q1",
    "dist_benford",
    "freq_spectral_energy",
    "time_dt_median",
    "stat_min",
    "stat_q3",
    "stat_min_minus_max",
    "behavior_directions",
    "flow_duration",
    "flow_packets_fwd",
    "flow_bytes_fwd",
    "flow_packets_rev",
    "flow_bytes_rev",
};

template <typename FV, typename Ptr>
std::array<Ptr, kFeatureCount> values_impl(FV& fv) {
    return {
        &fv.stat.mean,
        &fv.stat.median,
        &fv.stat.stdev,
        &fv.stat.variance,
        &fv.stat.burstiness,
        &fv.stat.q1,
        &fv.stat.q3,
        &fv.stat.min,
        &fv.stat.max,
        &fv.stat.min_minus_max,
        &fv.stat.mode,
        &fv.stat.percent_deviation,
        &fv.stat.average_dispersion,
        &fv.stat.root_mean_square,
        &fv.stat.percent_above_mean,
        &fv.stat.percent_below_mean,
        &fv.stat.coefficient_of_variation,
        &fv.stat.skew_fp_g1_adj,
        &fv.stat.skew_fp_g1,
        &fv.stat.skew_fisher_mu3,
        &fv.stat.skew_pearson_sk1,
        &fv.stat.skew_pearson_sk2,
        &fv.stat.skew_galton,
        &fv.stat.kurtosis,
        &fv.stat.entropy,
        &fv.stat.scaled_entropy,
        &fv.time.rt_mean,
        &fv.time.rt_median,
        &fv.time.rt_q1,
        &fv.time.rt_q3,
        &fv.time.dt_mean,
        &fv.time.dt_median,
        &fv.time.dt_min,
        &fv.time.dt_max,
        &fv.time.duration,
        &fv.dist.hurst,
        &fv.dist.stationarity,
        &fv.dist.benford,
        &fv.dist.normal_dist,
        &fv.dist.count_distribution,
        &fv.dist.count_nonzero_distribution,
        &fv.dist.time_distribution,
        &fv.freq.min_power,
        &fv.freq.max_power,
        &fv.freq.freq_min_power,
        &fv.freq.freq_max_power,
        &fv.freq.power_mode,
        &fv.freq.power_mean,
        &fv.freq.power_stdev,
        &fv.freq.spectral_bandwidth,
        &fv.freq.spectral_centroid,
        &fv.freq.spectral_energy,
        &fv.freq.spectral_entropy,
        &fv.freq.spectral_flatness,
        &fv.freq.spectral_flux,
        &fv.freq.spectral_kurtosis,
        &fv.freq.spectral_periodicity,
        &fv.freq.spectral_rolloff,
        &fv.freq.spectral_spread,
        &fv.freq.spectral_skewness,
        &fv.freq.spectral_slope,
        &fv.freq.spectral_zero_cross_rate,
        &fv.behavior.significant_spaces,
        &fv.behavior.switching_ratio,
        &fv.behavior.transients,
        &fv.behavior.count_of_zeros,
        &fv.behavior.biggest_interval,
        &fv.behavior.directions,
        &fv.behavior.periodicity,
    };
}

} // namespace

std::span<const ColumnInfo> feature_columns() { return kColumns; }

std::array<double*, kFeatureCount> feature_values(FeatureVector& fv) {
    return values_impl<FeatureVector, double*>(fv);
}

std::array<const double*, kFeatureCount> feature_values(const FeatureVector& fv) {
    return values_impl<const FeatureVector, const double*>(fv);
}

double nan_replacement(Family f) {
    switch (f) {
    case Family::Dist:
        return 0.5;
    case Family::Freq:
        return -1.0;
    default:
        return 0.0;
    }
}

const char* family_name(Family f) {
    switch (f) {
    case Family::Stat:
        return "stat";
    case Family::Time:
        return "time";
    case Family::Dist:
        return "dist";
    case Family::Freq:
        return "freq";
    case Family::Behavior:
        return "behavior";
    }
    return "?";
}

std::span<const char* const> identity_columns() { return kIdentityColumns; }

std::span<const char* const> reduced_columns() { return kReducedColumns; }

} // namespace sfts
