// SPDX-License-Identifier: Apache-2.0
#include "sfts/pipeline.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include "sfts/pcap.hpp"

namespace sfts {

namespace {

constexpr size_t kFeatureChunk = 4096;
constexpr uint64_t kProgressInterval = 1'000'000;

void sort_rows(std::vector<FlowFeatures>& rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const FlowFeatures& a, const FlowFeatures& b) {
                         if (a.vec.id.first_ts != b.vec.id.first_ts)
                             return a.vec.id.first_ts < b.vec.id.first_ts;
                         return a.seq < b.seq;
                     });
}

} // namespace

FeatureConfig Config::feature_config() const {
    FeatureConfig fc;
    fc.oversample = oversample;
    return fc;
}

void Config::validate() const {
    if (inputs.empty())
        throw UsageError("no input capture files given");
    if (inactive_timeout <= 0.0)
        throw UsageError("inactive timeout must be positive");
    if (inactive_timeout > active_timeout)
        throw UsageError("inactive timeout must not exceed the active timeout");
    if (oversample < 1.0)
        throw UsageError("oversample must be >= 1");
    if (min_packets < 1)
        throw UsageError("min-packets must be >= 1");
    if (workers < 0)
        throw UsageError("workers must be >= 0");
}

std::vector<FlowFeatures> extract_features(std::vector<FlowRecord> flows,
                                           const FeatureConfig& cfg, int workers) {
    std::vector<FlowFeatures> out(flows.size());
    const int threads = workers > 0 ? workers : omp_get_max_threads();
    const auto count = static_cast<ptrdiff_t>(flows.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
    for (ptrdiff_t i = 0; i < count; ++i) {
        const FlowRecord& flow = flows[static_cast<size_t>(i)];
        FlowFeatures& row = out[static_cast<size_t>(i)];
        row.vec = sanitize(compute_features(flow, cfg));
        row.classic = classic_counters(flow);
        row.seq = flow.seq;
    }
    return out;
}

RunSummary run(const Config& cfg, std::ostream* diagnostics) {
    cfg.validate();
    const auto started = std::chrono::steady_clock::now();

    const FeatureConfig fc = cfg.feature_config();
    FlowTable table({cfg.active_timeout, cfg.inactive_timeout, cfg.table_capacity});
    RunSummary summary;

    std::vector<FlowRecord> pending;
    std::vector<FlowFeatures> rows;
    uint64_t next_progress = kProgressInterval;

    auto enqueue = [&](std::vector<FlowRecord>&& flows) {
        for (FlowRecord& f : flows) {
            if (f.packets.size() >= cfg.min_packets)
                pending.push_back(std::move(f));
        }
        flows.clear();
    };
    auto drain = [&](bool force) {
        if (pending.empty() || (!force && pending.size() < kFeatureChunk))
            return;
        auto batch = extract_features(std::move(pending), fc, cfg.workers);
        pending = {};
        rows.insert(rows.end(), std::make_move_iterator(batch.begin()),
                    std::make_move_iterator(batch.end()));
    };

    std::vector<FlowRecord> expired;
    for (const std::string& path : cfg.inputs) {
        CaptureReader reader(path, cfg.length_mode);
        while (auto pkt = reader.next()) {
            expired.clear();
            table.ingest(*pkt, expired);
            enqueue(std::move(expired));
            drain(false);
            ++summary.packets_read;
            if (diagnostics && summary.packets_read >= next_progress) {
                *diagnostics << "processed " << summary.packets_read << " packets, "
                             << table.size() << " flows resident\n";
                next_progress += kProgressInterval;
            }
        }
        summary.malformed += reader.stats().malformed;
        summary.skipped_non_ip += reader.stats().skipped_non_ip;
        if (cfg.reset_per_file)
            enqueue(table.flush());
    }
    enqueue(table.flush());
    drain(true);
    summary.reordered = table.reorder_count();

    sort_rows(rows);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.output_path.empty()) {
        file.open(cfg.output_path, std::ios::binary | std::ios::trunc);
        if (!file)
            throw std::runtime_error("cannot open output: " + cfg.output_path);
        out = &file;
    }
    summary.flows_emitted = write_rows(rows, cfg.format, cfg.mode, *out);

    summary.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    if (diagnostics) {
        *diagnostics << "flows emitted: " << summary.flows_emitted
                     << ", packets read: " << summary.packets_read
                     << ", malformed: " << summary.malformed
                     << ", non-ip skipped: " << summary.skipped_non_ip
                     << ", reordered: " << summary.reordered << ", elapsed: "
                     << summary.elapsed_seconds << " s\n";
    }
    return summary;
}

std::vector<FlowRecord> collect_flows(const Config& cfg) {
    cfg.validate();
    FlowTable table({cfg.active_timeout, cfg.inactive_timeout, cfg.table_capacity});
    std::vector<FlowRecord> flows;
    for (const std::string& path : cfg.inputs) {
        CaptureReader reader(path, cfg.length_mode);
        while (auto pkt = reader.next())
            table.ingest(*pkt, flows);
        if (cfg.reset_per_file) {
            auto resident = table.flush();
            flows.insert(flows.end(), std::make_move_iterator(resident.begin()),
                         std::make_move_iterator(resident.end()));
        }
    }
    auto resident = table.flush();
    flows.insert(flows.end(), std::make_move_iterator(resident.begin()),
                 std::make_move_iterator(resident.end()));
    std::sort(flows.begin(), flows.end(), [](const FlowRecord& a, const FlowRecord& b) {
        if (a.first_ts != b.first_ts)
            return a.first_ts < b.first_ts;
        return a.seq < b.seq;
    });
    return flows;
}

} // namespace sfts
