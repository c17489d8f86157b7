// SPDX-License-Identifier: Apache-2.0
#include "sfts/series.hpp"

#include <stdexcept>

namespace sfts {

Sfts build_sfts(const FlowRecord& flow) {
    if (flow.packets.empty())
        throw std::invalid_argument("build_sfts: empty flow");
    Sfts s;
    s.n = flow.packets.size();
    s.values.reserve(s.n);
    s.times.reserve(s.n);
    s.directions.reserve(s.n);
    for (const FlowPacket& p : flow.packets) {
        s.values.push_back(p.len);
        s.times.push_back(p.ts);
        s.directions.push_back(p.dir);
    }
    return s;
}

DerivedSequences derive_sequences(const Sfts& s) {
    DerivedSequences d;
    d.rel_times.reserve(s.n);
    const double t0 = s.times.front();
    for (double t : s.times)
        d.rel_times.push_back(t - t0);
    if (s.n > 1) {
        d.time_diffs.reserve(s.n - 1);
        for (size_t i = 0; i + 1 < s.n; ++i)
            d.time_diffs.push_back(s.times[i + 1] - s.times[i]);
    }
    d.duration = d.rel_times.back();
    return d;
}

} // namespace sfts
