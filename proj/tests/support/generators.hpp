// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sfts/flow.hpp"
#include "sfts/series.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline std::vector<uint32_t> random_values(Rng& rng, size_t n, uint32_t max_value = 1500) {
    std::uniform_int_distribution<uint32_t> dist(0, max_value);
    std::vector<uint32_t> v(n);
    for (auto& x : v)
        x = dist(rng);
    return v;
}

inline std::vector<double> random_sorted_times(Rng& rng, size_t n, double t0,
                                               double span) {
    std::uniform_real_distribution<double> dist(0.0, span);
    std::vector<double> t(n);
    for (auto& x : t)
        x = t0 + dist(rng);
    std::sort(t.begin(), t.end());
    return t;
}

inline sfts::FlowRecord random_flow(Rng& rng, size_t n, double t0 = 1.7e9,
                                    double span = 60.0, uint32_t max_value = 1500) {
    sfts::FlowRecord f;
    f.key.addr_a = sfts::IpAddr::v4(0x0a000001);
    f.key.addr_b = sfts::IpAddr::v4(0x0a000002);
    f.key.port_a = 1234;
    f.key.port_b = 443;
    f.key.protocol = 6;
    const auto times = random_sorted_times(rng, n, t0, span);
    const auto values = random_values(rng, n, max_value);
    std::bernoulli_distribution dir(0.5);
    for (size_t i = 0; i < n; ++i) {
        const bool fwd = dir(rng);
        f.packets.push_back({times[i], values[i],
                             fwd ? sfts::Direction::Forward : sfts::Direction::Reverse});
        if (fwd) {
            ++f.pkt_count_fwd;
            f.byte_count_fwd += values[i];
        } else {
            ++f.pkt_count_rev;
            f.byte_count_rev += values[i];
        }
    }
    f.first_ts = times.front();
    f.last_ts = times.back();
    return f;
}

inline sfts::Sfts random_sfts(Rng& rng, size_t n, double span = 60.0,
                              uint32_t max_value = 1500) {
    return sfts::build_sfts(random_flow(rng, n, 1.7e9, span, max_value));
}

} // namespace testsupport
