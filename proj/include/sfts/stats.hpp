// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

namespace sfts {

/// The 26 order-free statistics of the payload size sequence. Percent fields
/// are 0..100, entropy is in bits. Formula corner cases (division by zero)
/// yield NaN, sanitized downstream; never +-infinity.
struct StatisticalFeatures {
    double mean;
    double median;
    double stdev;
    double variance;
    double burstiness;
    double q1;
    double q3;
    double min;
    double max;
    double min_minus_max;
    double mode;
    double percent_deviation;
    double average_dispersion;
    double root_mean_square;
    double percent_above_mean;
    double percent_below_mean;
    double coefficient_of_variation;
    double skew_fp_g1_adj;
    double skew_fp_g1;
    double skew_fisher_mu3;
    double skew_pearson_sk1;
    double skew_pearson_sk2;
    double skew_galton;
    double kurtosis;
    double entropy;
    double scaled_entropy;
};

/// Computes all 26 fields over `values` (length >= 1, else throws
/// std::invalid_argument). Moments are population moments; quartiles use
/// linear interpolation between closest ranks. Internally reduces over the
/// sorted copy, so every field is exactly permutation invariant.
StatisticalFeatures compute_statistical(std::span<const uint32_t> values);

} // namespace sfts
