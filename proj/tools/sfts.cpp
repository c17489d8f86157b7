// SPDX-License-Identifier: Apache-2.0
//
// Flow feature extraction CLI: packet captures in, one feature row per flow
// out. `extract` runs the full pipeline, `plot` renders one flow's series.

#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfts/pipeline.hpp"
#include "sfts/plot.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

void add_capture_options(CLI::App* cmd, sfts::Config& cfg) {
    cmd->add_option("inputs", cfg.inputs, "capture files (pcap or pcapng)")
        ->required();
    cmd->add_option("--active", cfg.active_timeout,
                    "active timeout in seconds (flow split)")
        ->envname("SFTS_ACTIVE")
        ->capture_default_str();
    cmd->add_option("--inactive", cfg.inactive_timeout,
                    "inactive timeout in seconds (flow termination)")
        ->envname("SFTS_INACTIVE")
        ->capture_default_str();
    std::map<std::string, sfts::LengthMode> length_modes{
        {"transport_payload", sfts::LengthMode::TransportPayload},
        {"ip_total", sfts::LengthMode::IpTotal}};
    cmd->add_option("--length-mode", cfg.length_mode,
                    "byte count per packet: transport_payload or ip_total")
        ->envname("SFTS_LENGTH_MODE")
        ->transform(CLI::CheckedTransformer(length_modes, CLI::ignore_case));
    cmd->add_flag("--reset-per-file", cfg.reset_per_file,
                  "flush the flow table at file boundaries");
    cmd->add_option("--table-capacity", cfg.table_capacity,
                    "flow table capacity (oldest flow evicted when full)")
        ->capture_default_str();
}

int run_extract(const sfts::Config& cfg) {
    try {
        cfg.validate();
    } catch (const sfts::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        sfts::run(cfg, &std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!cfg.output_path.empty())
            std::cerr << "warning: output may be partial: " << cfg.output_path << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int run_plot(const sfts::Config& cfg, const std::string& selector,
             const std::string& out_path) {
    std::vector<sfts::FlowRecord> flows;
    try {
        cfg.validate();
        flows = sfts::collect_flows(cfg);
    } catch (const sfts::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }

    std::vector<size_t> matches;
    if (!selector.empty() && selector[0] == '#') {
        const size_t idx = std::stoull(selector.substr(1));
        if (idx >= 1 && idx <= flows.size())
            matches.push_back(idx - 1);
    } else {
        for (size_t i = 0; i < flows.size(); ++i) {
            if (describe_flow(flows[i]).find(selector) != std::string::npos)
                matches.push_back(i);
        }
    }

    if (matches.size() != 1) {
        std::cerr << "error: selector '" << selector << "' matches "
                  << matches.size() << " flows\n";
        const auto& candidates = matches.empty() ? [&] {
            std::vector<size_t> all(flows.size());
            for (size_t i = 0; i < flows.size(); ++i)
                all[i] = i;
            return all;
        }() : matches;
        for (size_t i : candidates)
            std::cerr << "  #" << i + 1 << " " << describe_flow(flows[i]) << "\n";
        return kExitRuntime;
    }

    try {
        sfts::plot_sfts(flows[matches.front()], out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    std::cerr << "wrote " << out_path << " for " << describe_flow(flows[matches.front()])
              << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flow feature extraction from packet captures"};
    app.require_subcommand(1);

    sfts::Config cfg;
    std::string selector;
    std::string plot_out = "sfts_plot.svg";

    CLI::App* extract = app.add_subcommand(
        "extract", "compute per-flow feature rows from capture files");
    add_capture_options(extract, cfg);
    extract->add_option("-o,--output", cfg.output_path, "output file (default stdout)")
        ->envname("SFTS_OUTPUT");
    std::map<std::string, sfts::OutputFormat> formats{
        {"csv", sfts::OutputFormat::Csv}, {"jsonl", sfts::OutputFormat::Jsonl}};
    extract->add_option("--format", cfg.format, "output format: csv or jsonl")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    std::map<std::string, sfts::OutputMode> modes{{"full", sfts::OutputMode::Full},
                                                  {"reduced", sfts::OutputMode::Reduced}};
    extract->add_option("--mode", cfg.mode, "feature set: full (69) or reduced (10+5)")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    extract->add_option("--oversample", cfg.oversample, "periodogram oversampling factor")
        ->envname("SFTS_OVERSAMPLE")
        ->capture_default_str();
    extract
        ->add_option("--min-packets", cfg.min_packets,
                     "drop flows with fewer packets than this")
        ->capture_default_str();
    extract->add_option("--workers", cfg.workers, "feature worker threads (0 = all)")
        ->envname("SFTS_WORKERS")
        ->capture_default_str();

    CLI::App* plot = app.add_subcommand("plot", "render one flow's series as SVG");
    sfts::Config plot_cfg;
    add_capture_options(plot, plot_cfg);
    plot->add_option("--select", selector,
                     "flow selector: '#N' (1-based, first_ts order) or an "
                     "identity substring")
        ->required();
    plot->add_option("--out", plot_out, "output SVG path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (extract->parsed())
        return run_extract(cfg);
    return run_plot(plot_cfg, selector, plot_out);
}
