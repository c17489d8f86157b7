// SPDX-License-Identifier: Apache-2.0
//
// Compares serial (one worker) against OpenMP-parallel feature extraction on
// synthetic flows and checks that both produce identical output bytes.

#include <omp.h>

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sfts/pipeline.hpp"
#include "sfts/writer.hpp"

namespace {

std::vector<sfts::FlowRecord> synthetic_flows(size_t flow_count,
                                              size_t packets_per_flow,
                                              uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint32_t> len_dist(0, 1500);
    std::uniform_real_distribution<double> gap_dist(0.0, 0.5);
    std::bernoulli_distribution dir_dist(0.6);

    std::vector<sfts::FlowRecord> flows(flow_count);
    for (size_t i = 0; i < flow_count; ++i) {
        sfts::FlowRecord& f = flows[i];
        f.key.addr_a = sfts::IpAddr::v4(0x0a000001 + static_cast<uint32_t>(i));
        f.key.addr_b = sfts::IpAddr::v4(0x0a0000ff);
        f.key.port_a = static_cast<uint16_t>(1024 + i % 50000);
        f.key.port_b = 443;
        f.key.protocol = 6;
        f.seq = i;
        double t = 1e9 + static_cast<double>(i) * 0.01;
        f.first_ts = t;
        for (size_t j = 0; j < packets_per_flow; ++j) {
            const bool fwd = dir_dist(rng);
            const uint32_t len = len_dist(rng);
            f.packets.push_back({t, len,
                                 fwd ? sfts::Direction::Forward
                                     : sfts::Direction::Reverse});
            if (fwd) {
                ++f.pkt_count_fwd;
                f.byte_count_fwd += len;
            } else {
                ++f.pkt_count_rev;
                f.byte_count_rev += len;
            }
            f.last_ts = t;
            t += gap_dist(rng);
        }
    }
    return flows;
}

std::string rows_to_csv(const std::vector<sfts::FlowFeatures>& rows) {
    std::ostringstream os;
    sfts::write_rows(rows, sfts::OutputFormat::Csv, sfts::OutputMode::Full, os);
    return os.str();
}

double time_extraction(const std::vector<sfts::FlowRecord>& flows,
                       const sfts::FeatureConfig& cfg, int workers,
                       std::string& csv_out) {
    const auto start = std::chrono::steady_clock::now();
    auto rows = sfts::extract_features(flows, cfg, workers);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    csv_out = rows_to_csv(rows);
    return elapsed;
}

} // namespace

int main(int argc, char** argv) {
    size_t flow_count = 2000;
    size_t packets_per_flow = 100;
    if (argc > 1)
        flow_count = std::stoull(argv[1]);
    if (argc > 2)
        packets_per_flow = std::stoull(argv[2]);

    const auto flows = synthetic_flows(flow_count, packets_per_flow, 42);
    const double total_packets =
        static_cast<double>(flow_count) * static_cast<double>(packets_per_flow);
    const sfts::FeatureConfig cfg;

    std::string serial_csv, parallel_csv;
    const double t_serial = time_extraction(flows, cfg, 1, serial_csv);
    const int threads = omp_get_max_threads();
    const double t_parallel = time_extraction(flows, cfg, threads, parallel_csv);

    std::cout << "flows: " << flow_count << ", packets/flow: " << packets_per_flow
              << "\n";
    std::cout << "serial   (1 thread):  " << t_serial << " s, "
              << total_packets / t_serial / 1e6 << " Mpkt/s\n";
    std::cout << "parallel (" << threads << " threads): " << t_parallel << " s, "
              << total_packets / t_parallel / 1e6 << " Mpkt/s\n";
    std::cout << "speedup: " << t_serial / t_parallel << "x\n";

    if (serial_csv != parallel_csv) {
        std::cout << "ERROR: serial and parallel outputs differ\n";
        return 1;
    }
    std::cout << "outputs identical: yes\n";
    return 0;
}
