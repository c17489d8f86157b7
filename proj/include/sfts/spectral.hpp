// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "sfts/series.hpp"

namespace sfts {

/// Uniform frequency grid, f_min = 1/duration up to the pseudo-Nyquist
/// frequency n/(2*duration) for the mean sampling rate.
struct FrequencyGrid {
    std::vector<double> freqs; // strictly increasing, Hz
    double f_min = 0.0;
    double f_max = 0.0;

    size_t count() const { return freqs.size(); }
    double step() const {
        return freqs.size() > 1 ? (f_max - f_min) / static_cast<double>(freqs.size() - 1)
                                : 0.0;
    }
};

struct Periodogram {
    FrequencyGrid grid;
    std::vector<double> power; // one non-negative ordinate per frequency
};

/// The 20 frequency-domain features of the Lomb-Scargle periodogram.
struct FrequencyFeatures {
    double min_power;
    double max_power;
    double freq_min_power; // Hz
    double freq_max_power; // Hz
    double power_mode;
    double power_mean;
    double power_stdev;
    double spectral_bandwidth;
    double spectral_centroid;
    double spectral_energy;
    double spectral_entropy;
    double spectral_flatness;
    double spectral_flux;
    double spectral_kurtosis;
    double spectral_periodicity;
    double spectral_rolloff;
    double spectral_spread;
    double spectral_skewness;
    double spectral_slope;
    double spectral_zero_cross_rate;
};

/// Requires duration > 0, n >= 2, oversample >= 1. count = ceil(oversample*n/2).
FrequencyGrid frequency_grid(const DerivedSequences& d, size_t n, double oversample = 4.0);

/// Classic normalized Lomb-Scargle periodogram (per-frequency time offset tau,
/// ordinates scaled by 1/(2*variance)). A constant-valued series yields an
/// all-zero spectrum. Evaluation uses running trig recurrences over the grid.
Periodogram lomb_scargle(const Sfts& s, const DerivedSequences& d, const FrequencyGrid& grid);

FrequencyFeatures compute_frequency_features(const Periodogram& p,
                                             double rolloff_threshold = 0.85);

} // namespace sfts
