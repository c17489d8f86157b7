// SPDX-License-Identifier: Apache-2.0
#include "sfts/plot.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sfts/writer.hpp"

namespace sfts {

std::string describe_flow(const FlowRecord& flow) {
    std::ostringstream os;
    os << flow.key.addr_a.str() << ':' << flow.key.port_a << "->"
       << flow.key.addr_b.str() << ':' << flow.key.port_b << '/'
       << static_cast<int>(flow.key.protocol) << '@'
       << format_timestamp(flow.first_ts);
    return os.str();
}

// Stem plot, payload bytes over seconds from flow start.
void plot_sfts(const FlowRecord& flow, const std::string& out_path) {
    constexpr double kWidth = 900, kHeight = 360;
    constexpr double kLeft = 70, kRight = 20, kTop = 24, kBottom = 44;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    uint32_t y_max = 1;
    for (const FlowPacket& p : flow.packets)
        y_max = std::max(y_max, p.len);
    const double t0 = flow.first_ts;
    const double duration = std::max(flow.last_ts - t0, 1e-9);

    auto sx = [&](double t) { return kLeft + (t - t0) / duration * plot_w; };
    auto sy = [&](double v) {
        return kTop + plot_h - v / static_cast<double>(y_max) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth
        << "' height='" << kHeight << "'>\n"
        << "<rect width='100%' height='100%' fill='white'/>\n"
        << "<line x1='" << kLeft << "' y1='" << kTop << "' x2='" << kLeft
        << "' y2='" << kTop + plot_h << "' stroke='black'/>\n"
        << "<line x1='" << kLeft << "' y1='" << kTop + plot_h << "' x2='"
        << kLeft + plot_w << "' y2='" << kTop + plot_h << "' stroke='black'/>\n";

    svg << "<text x='" << kLeft - 8 << "' y='" << kTop + 4
        << "' text-anchor='end' font-size='12'>" << y_max << "</text>\n"
        << "<text x='" << kLeft - 8 << "' y='" << kTop + plot_h + 4
        << "' text-anchor='end' font-size='12'>0</text>\n"
        << "<text x='" << kLeft + plot_w << "' y='" << kTop + plot_h + 18
        << "' text-anchor='end' font-size='12'>" << format_real(duration)
        << " s</text>\n"
        << "<text x='" << kLeft << "' y='" << kHeight - 8
        << "' font-size='12'>bytes over seconds, " << describe_flow(flow)
        << "</text>\n";

    for (const FlowPacket& p : flow.packets) {
        const double x = sx(p.ts);
        svg << "<line x1='" << x << "' y1='" << kTop + plot_h << "' x2='" << x
            << "' y2='" << sy(p.len) << "' stroke='steelblue'/>\n"
            << "<circle cx='" << x << "' cy='" << sy(p.len)
            << "' r='2.2' fill='steelblue'/>\n";
    }
    svg << "</svg>\n";

    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open plot output: " + out_path);
    out << svg.str();
    if (!out.flush())
        throw std::runtime_error("plot write failed: " + out_path);
}

} // namespace sfts
