// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <span>
#include <string>

#include "sfts/features.hpp"

namespace sfts {

inline constexpr int kSchemaVersion = 1;

inline constexpr size_t kStatCount = 26;
inline constexpr size_t kTimeCount = 9;
inline constexpr size_t kDistCount = 7;
inline constexpr size_t kFreqCount = 20;
inline constexpr size_t kBehaviorCount = 7;
inline constexpr size_t kFeatureCount =
    kStatCount + kTimeCount + kDistCount + kFreqCount + kBehaviorCount; // 69

enum class Family { Stat, Time, Dist, Freq, Behavior };

struct ColumnInfo {
    const char* name;   // prefixed column name, e.g. "freq_spectral_rolloff"
    Family family;
    const char* unit;
};

/// The 69 feature columns in export order: stat, time, dist, freq, behavior.
std::span<const ColumnInfo> feature_columns();

/// Pointers to the 69 values of a vector, in feature_columns() order.
std::array<double*, kFeatureCount> feature_values(FeatureVector& fv);
std::array<const double*, kFeatureCount> feature_values(const FeatureVector& fv);

/// NaN replacement value for a family per the sanitation rule.
double nan_replacement(Family f);

const char* family_name(Family f);

/// Identity column names shared by both output modes.
std::span<const char* const> identity_columns();

/// Reduced-mode columns after the identity block: the ten selected features
/// (importance order) followed by the five classic flow fields.
std::span<const char* const> reduced_columns();

} // namespace sfts
