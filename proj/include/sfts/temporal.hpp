// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

#include "sfts/series.hpp"

namespace sfts {

/// The 9 time-axis features, all in seconds.
struct TimeFeatures {
    double rt_mean;
    double rt_median;
    double rt_q1;
    double rt_q3;
    double dt_mean;
    double dt_median;
    double dt_min;
    double dt_max;
    double duration;
};

/// The 7 data-point distribution features. Bounded fields stay inside their
/// stated ranges or are NaN (sanitized to 0.5 downstream).
struct DistributionFeatures {
    double hurst;                      // ~[0,1]
    double stationarity;               // {0,1} or NaN
    double benford;                    // [0,1]
    double normal_dist;                // (0,1]
    double count_distribution;         // [0,1]
    double count_nonzero_distribution; // [0,1]
    double time_distribution;          // [0,1)
};

struct DistributionConfig {
    double stationarity_mean_tol = 0.2;
    double stationarity_var_tol = 0.5;
};

TimeFeatures compute_time(const DerivedSequences& d);

/// Rescaled-range estimate over power-of-two windows 8, 16, ... <= n/2;
/// slope of the least-squares fit of log2(R/S) against log2(window).
/// NaN for n < 16 or when fewer than two window sizes are usable.
double hurst_exponent(std::span<const uint32_t> values);

/// Leading-digit similarity of the occurrence counts of the nine most
/// frequent payload lengths: 1 - TV-distance to the Benford distribution.
/// NaN for fewer than two data points (degenerate distribution).
double benford_similarity(std::span<const uint32_t> values);

/// Core of the similarity score, exposed for the identity case: probs are
/// the empirical leading-digit probabilities for digits 1..9.
double benford_similarity_from_digit_probs(std::span<const double, 9> probs);

DistributionFeatures compute_distribution(const Sfts& s, const DerivedSequences& d,
                                          const DistributionConfig& cfg = {});

} // namespace sfts
