// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "sfts/series.hpp"

namespace sfts {

/// The 7 behavior features. One-second bucketing is aligned to the flow's
/// first timestamp.
struct BehaviorFeatures {
    double significant_spaces; // {0,1} or NaN
    double switching_ratio;    // [0,1]
    double transients;         // {0,1} or NaN
    double count_of_zeros;     // percent 0..100
    double biggest_interval;   // bytes
    double directions;         // percent of forward packets, 0..100
    double periodicity;        // seconds, 0 = none detected
};

struct PeriodicityConfig {
    size_t min_occurrences = 5;
    double cv_threshold = 0.1;
};

struct PeriodicityResult {
    double period_seconds = 0.0;
    uint32_t packet_length = 0; // diagnostic, not one of the exported features
};

/// A payload length is periodic when it occurs >= min_occurrences times and
/// the coefficient of variation of its inter-occurrence gaps is below the
/// threshold. Returns the median gap of the periodic length with the most
/// occurrences (ties: smaller length), else 0. Flows with n < 5 return 0.
PeriodicityResult detect_periodicity(const Sfts& s, const PeriodicityConfig& cfg = {});

struct BehaviorResult {
    BehaviorFeatures features;
    uint32_t periodic_length = 0;
};

BehaviorResult compute_behavior(const Sfts& s, const DerivedSequences& d,
                                const PeriodicityConfig& cfg = {});

} // namespace sfts
