// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "sfts/flow.hpp"
#include "sfts/types.hpp"

namespace sfts {

/// A flow viewed as an unevenly spaced time series: payload sizes over
/// transmission timestamps. No constant spacing is assumed.
struct Sfts {
    std::vector<uint32_t> values;     // payload bytes per packet
    std::vector<double> times;        // absolute seconds, non-decreasing
    std::vector<Direction> directions;
    size_t n = 0;
};

/// Sequences shared by the time-domain feature families.
struct DerivedSequences {
    std::vector<double> rel_times;  // t_i - t_first, rel_times[0] == 0
    std::vector<double> time_diffs; // t_{i+1} - t_i, size n-1
    double duration = 0.0;          // last relative time
};

/// Throws std::invalid_argument on an empty flow (never emitted by FlowTable).
Sfts build_sfts(const FlowRecord& flow);

DerivedSequences derive_sequences(const Sfts& s);

} // namespace sfts
