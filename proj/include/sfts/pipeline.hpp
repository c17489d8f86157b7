// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "sfts/features.hpp"
#include "sfts/flow.hpp"
#include "sfts/writer.hpp"

namespace sfts {

/// Raised for invalid option combinations (CLI exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::vector<std::string> inputs;
    std::string output_path; // empty = stdout
    OutputFormat format = OutputFormat::Csv;
    OutputMode mode = OutputMode::Full;
    double active_timeout = 300.0;
    double inactive_timeout = 65.0;
    double oversample = 4.0;
    LengthMode length_mode = LengthMode::TransportPayload;
    uint64_t min_packets = 1;
    int workers = 0; // 0 = all hardware threads
    bool reset_per_file = false;
    size_t table_capacity = size_t{1} << 22;

    FeatureConfig feature_config() const;
    void validate() const; // throws UsageError
};

struct RunSummary {
    uint64_t packets_read = 0;
    uint64_t flows_emitted = 0;
    uint64_t malformed = 0;
    uint64_t skipped_non_ip = 0;
    uint64_t reordered = 0;
    double elapsed_seconds = 0.0;
};

/// Per-flow feature extraction over a batch, parallelized with OpenMP when
/// workers != 1. Output order matches input order regardless of thread count.
std::vector<FlowFeatures> extract_features(std::vector<FlowRecord> flows,
                                           const FeatureConfig& cfg, int workers);

/// Full pipeline: captures -> flows -> features -> rows, output sorted by
/// (first_ts, creation sequence). Progress and the final summary go to
/// `diagnostics` when non-null; data goes to the configured output.
RunSummary run(const Config& cfg, std::ostream* diagnostics);

/// Ingest-only pass used by the plot command: every flow in the inputs,
/// ordered by first_ts.
std::vector<FlowRecord> collect_flows(const Config& cfg);

} // namespace sfts
