// SPDX-License-Identifier: Apache-2.0
#include "sfts/writer.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string_view>

#include <json.hpp>

#include "sfts/schema.hpp"

namespace sfts {

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void append_identity_csv(const FlowIdentity& id, std::string& line) {
    line += csv_escape(id.src_addr.str());
    line += ',';
    line += std::to_string(id.src_port);
    line += ',';
    line += csv_escape(id.dst_addr.str());
    line += ',';
    line += std::to_string(id.dst_port);
    line += ',';
    line += std::to_string(id.protocol);
    line += ',';
    line += format_timestamp(id.first_ts);
}

nlohmann::ordered_json identity_json(const FlowIdentity& id) {
    nlohmann::ordered_json j;
    j["src_addr"] = id.src_addr.str();
    j["src_port"] = id.src_port;
    j["dst_addr"] = id.dst_addr.str();
    j["dst_port"] = id.dst_port;
    j["protocol"] = id.protocol;
    j["first_ts"] = id.first_ts;
    return j;
}

std::array<double, 15> reduced_values(const FlowFeatures& row) {
    const ReducedVector r = reduce(row.vec, row.classic);
    return {r.spectral_kurtosis,
            r.periodicity,
            r.q1,
            r.benford,
            r.spectral_energy,
            r.dt_median,
            r.min,
            r.q3,
            r.min_minus_max,
            r.directions,
            r.classic.duration,
            static_cast<double>(r.classic.packets_fwd),
            static_cast<double>(r.classic.bytes_fwd),
            static_cast<double>(r.classic.packets_rev),
            static_cast<double>(r.classic.bytes_rev)};
}

} // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string format_timestamp(double ts) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", ts);
    return buf;
}

std::vector<std::string> header_columns(OutputMode mode) {
    std::vector<std::string> cols;
    for (const char* c : identity_columns())
        cols.emplace_back(c);
    if (mode == OutputMode::Full) {
        for (const ColumnInfo& ci : feature_columns())
            cols.emplace_back(ci.name);
        cols.emplace_back("diag_periodic_length");
    } else {
        for (const char* c : reduced_columns())
            cols.emplace_back(c);
    }
    return cols;
}

size_t write_rows(std::span<const FlowFeatures> rows, OutputFormat format,
                  OutputMode mode, std::ostream& out) {
    size_t written = 0;
    std::string line;

    if (format == OutputFormat::Csv) {
        const auto cols = header_columns(mode);
        for (size_t i = 0; i < cols.size(); ++i) {
            if (i)
                line += ',';
            line += csv_escape(cols[i]);
        }
        line += '\n';
        out << line;

        for (const FlowFeatures& row : rows) {
            line.clear();
            append_identity_csv(row.vec.id, line);
            if (mode == OutputMode::Full) {
                for (const double* v : feature_values(row.vec)) {
                    line += ',';
                    line += format_real(*v);
                }
                line += ',';
                line += std::to_string(row.vec.periodic_length);
            } else {
                for (double v : reduced_values(row)) {
                    line += ',';
                    line += format_real(v);
                }
            }
            line += '\n';
            out << line;
            ++written;
        }
    } else {
        for (const FlowFeatures& row : rows) {
            nlohmann::ordered_json j;
            j["flow"] = identity_json(row.vec.id);
            if (mode == OutputMode::Full) {
                const auto columns = feature_columns();
                const auto values = feature_values(row.vec);
                nlohmann::ordered_json groups[5];
                for (size_t i = 0; i < kFeatureCount; ++i) {
                    const char* name = columns[i].name;
                    const char* unprefixed = name + std::string_view(name).find('_') + 1;
                    groups[static_cast<int>(columns[i].family)][unprefixed] = *values[i];
                }
                j["stat"] = std::move(groups[0]);
                j["time"] = std::move(groups[1]);
                j["dist"] = std::move(groups[2]);
                j["freq"] = std::move(groups[3]);
                j["behavior"] = std::move(groups[4]);
                j["diag"]["periodic_length"] = row.vec.periodic_length;
            } else {
                const ReducedVector r = reduce(row.vec, row.classic);
                nlohmann::ordered_json feat;
                feat["freq_spectral_kurtosis"] = r.spectral_kurtosis;
                feat["behavior_periodicity"] = r.periodicity;
                feat["stat_q1"] = r.q1;
                feat["dist_benford"] = r.benford;
                feat["freq_spectral_energy"] = r.spectral_energy;
                feat["time_dt_median"] = r.dt_median;
                feat["stat_min"] = r.min;
                feat["stat_q3"] = r.q3;
                feat["stat_min_minus_max"] = r.min_minus_max;
                feat["behavior_directions"] = r.directions;
                feat["flow_duration"] = r.classic.duration;
                feat["flow_packets_fwd"] = r.classic.packets_fwd;
                feat["flow_bytes_fwd"] = r.classic.bytes_fwd;
                feat["flow_packets_rev"] = r.classic.packets_rev;
                feat["flow_bytes_rev"] = r.classic.bytes_rev;
                j["reduced"] = std::move(feat);
            }
            out << j.dump() << '\n';
            ++written;
        }
    }

    out.flush();
    if (!out)
        throw std::runtime_error("write_rows: output stream failure");
    return written;
}

} // namespace sfts
