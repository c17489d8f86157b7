// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "sfts/behavior.hpp"
#include "sfts/flow.hpp"
#include "sfts/spectral.hpp"
#include "sfts/stats.hpp"
#include "sfts/temporal.hpp"

namespace sfts {

struct FeatureConfig {
    double oversample = 4.0;
    double rolloff_threshold = 0.85;
    bool burstiness_on_gaps = false; // compute burstiness on inter-arrival times
    DistributionConfig distribution;
    PeriodicityConfig periodicity;
};

/// Join columns, documented as non-features.
struct FlowIdentity {
    IpAddr src_addr;
    IpAddr dst_addr;
    uint16_t src_port = 0;
    uint16_t dst_port = 0;
    uint8_t protocol = 0;
    double first_ts = 0.0;
};

/// All 69 feature values of one flow, grouped by family, plus identity and
/// the diagnostic periodic packet length.
struct FeatureVector {
    FlowIdentity id;
    StatisticalFeatures stat;
    TimeFeatures time;
    DistributionFeatures dist;
    FrequencyFeatures freq;
    BehaviorFeatures behavior;
    uint32_t periodic_length = 0; // diagnostic
};

struct ClassicCounters {
    double duration = 0.0;
    uint64_t packets_fwd = 0;
    uint64_t bytes_fwd = 0;
    uint64_t packets_rev = 0;
    uint64_t bytes_rev = 0;
};

/// The reduced set: ten selected features plus the classic flow fields.
struct ReducedVector {
    FlowIdentity id;
    double spectral_kurtosis;
    double periodicity;
    double q1;
    double benford;
    double spectral_energy;
    double dt_median;
    double min;
    double q3;
    double min_minus_max;
    double directions;
    ClassicCounters classic;
};

FeatureVector compute_features(const FlowRecord& flow, const FeatureConfig& cfg = {});

/// NaN replacement: distribution features -> 0.5, frequency features -> -1,
/// everything else -> 0. Idempotent; non-NaN values pass through untouched.
FeatureVector sanitize(FeatureVector fv);

ClassicCounters classic_counters(const FlowRecord& flow);

ReducedVector reduce(const FeatureVector& fv, const ClassicCounters& classic);
ReducedVector reduce(const FeatureVector& fv, const FlowRecord& flow);

} // namespace sfts
