// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sfts/features.hpp"

namespace sfts {

enum class OutputFormat { Csv, Jsonl };
enum class OutputMode { Full, Reduced };

/// One serializable flow: sanitized features plus the classic counters.
struct FlowFeatures {
    FeatureVector vec;
    ClassicCounters classic;
    uint64_t seq = 0;
};

/// Reals formatted with 9 significant digits in the shortest form ("%.9g").
std::string format_real(double v);

/// Identity timestamps keep microsecond precision (fixed six decimals).
std::string format_timestamp(double ts);

/// Column names for a mode, identity block first.
std::vector<std::string> header_columns(OutputMode mode);

/// Serializes rows in the given order. CSV gets a header line (RFC 4180
/// quoting); JSONL is one object per flow with family-namespaced keys.
/// Returns the number of data rows written; throws std::runtime_error on a
/// stream failure.
size_t write_rows(std::span<const FlowFeatures> rows, OutputFormat format,
                  OutputMode mode, std::ostream& out);

} // namespace sfts
