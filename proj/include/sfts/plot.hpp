// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "sfts/flow.hpp"

namespace sfts {

/// Human-readable flow label: "a_addr:a_port->b_addr:b_port/proto@first_ts".
std::string describe_flow(const FlowRecord& flow);

/// Writes a stem-plot rendering of one flow's series (payload bytes over
/// seconds from flow start) as an SVG file. Diagnostic output only.
void plot_sfts(const FlowRecord& flow, const std::string& out_path);

} // namespace sfts
